"""
From plaintext to masked sentences
==================================

Normalization, sentence splitting and placeholder masking on a short
paragraph of mathematical prose.
"""
from gapnet import text

raw = text.RawDocument(
    "A non-zero vector v in R2 spans a line. The 2x2 matrix A acts on it, "
    "e.g. by rotation. Let xy denote the product.", "demo")

# unicode KD form, hyphens to spaces, lemmatize (identity here), lowercase
normalized = text.normalize(raw)
print(normalized)

stop = text.default_stoplist()
dictionary = text.default_dictionary()
print(len(stop), "stop words;", "VAR" in stop, "value" in stop)

# digits become '#', vowelless and short unknown words become 'VAR'
doc = text.tokenize_and_mask(normalized, stop, dictionary)
for k, sentence in enumerate(doc.sentences, start=1):
    print(k, " ".join(sentence))

# re-tokenizing the detokenized text gives the same document back
assert text.tokenize_and_mask(doc.detokenize(), stop, dictionary).sentences == doc.sentences
