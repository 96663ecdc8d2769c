"""
Keyphrases as concepts
======================

Candidate phrases are the stop-word-free runs of each sentence. They are
scored by RAKE, discounted by how common the phrase is in general English,
and the better half becomes the index of concepts.
"""
from importlib import resources
from pathlib import Path

from gapnet import concepts, text

path = Path(str(resources.files("gapnet") / "data" / "synthetic_exposition.txt"))
stop = text.default_stoplist()
doc = text.preprocess(text.read_document(path), stop, text.default_dictionary())
print(doc.n_sentences, "sentences")

candidates, graph = concepts.extract_candidates(doc, stop)
print(len(candidates), "candidates")
for word in ("vector", "space", "matrix"):
    if word in graph.freq:
        print(f"{word:>8}: deg {graph.deg[word]}, freq {graph.freq[word]}")

table = concepts.default_frequency_table()
index = concepts.extract_index(doc, stop, table)
print("index size", index.size)
for cand in list(index)[:10]:
    print(f"{cand.final_score:7.3f}  {cand.phrase}")

# a common phrase gets discounted: score / (1 + count)
c = concepts.CandidatePhrase(("linear", "map"), 1, 4.0)
print(concepts.score_final(c, concepts.FrequencyTable({"linear map": 3})))
