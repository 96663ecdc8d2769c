"""Keyphrase extraction with a RAKE score discounted by general-corpus frequency."""
from __future__ import annotations

import csv
import math
import warnings
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .text import PLACEHOLDERS, StopList, TokenizedDocument


@dataclass(frozen=True)
class CandidatePhrase:
    tokens: tuple[str, ...]
    occurrences: int = 1
    rake_score: float = 0.0
    final_score: float = 0.0

    @property
    def phrase(self) -> str:
        return " ".join(self.tokens)


@dataclass(frozen=True)
class KeywordGraph:
    """Degree and frequency of each keyword in the candidate co-occurrence graph.

    ``deg[w]`` sums the word length of every candidate occurrence containing
    ``w`` (so a keyword co-occurs with itself) and ``freq[w]`` counts those
    occurrences.
    """

    deg: Mapping[str, float]
    freq: Mapping[str, int]

    @classmethod
    def from_candidates(cls, candidates: Iterable[CandidatePhrase]) -> "KeywordGraph":
        deg: Counter = Counter()
        freq: Counter = Counter()
        for cand in candidates:
            for word in cand.tokens:
                deg[word] += len(cand.tokens) * cand.occurrences
                freq[word] += cand.occurrences
        return cls(dict(deg), dict(freq))


class FrequencyTable(Mapping):
    """Phrase counts from a reference corpus; absent phrases count 0."""

    def __init__(self, counts: Mapping[str, float] | None = None):
        self._counts = {}
        for phrase, count in (counts or {}).items():
            if count < 0:
                raise ValueError(f"negative count for {phrase!r}")
            self._counts[phrase] = count

    @classmethod
    def from_tsv(cls, path) -> "FrequencyTable":
        counts = {}
        with open(path, encoding="utf-8", newline="") as fh:
            for row in csv.reader(fh, delimiter="\t"):
                if not row or row[0].startswith("#"):
                    continue
                counts[row[0].strip().lower()] = float(row[1])
        return cls(counts)

    def __getitem__(self, phrase):
        return self._counts.get(phrase, 0)

    def __contains__(self, phrase):
        return phrase in self._counts

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)


def default_frequency_table() -> FrequencyTable:
    return FrequencyTable.from_tsv(
        Path(str(resources.files("gapnet") / "data" / "frequency_table.tsv"))
    )


@dataclass(frozen=True)
class IndexList:
    """Selected concept phrases in rank order."""

    entries: tuple[CandidatePhrase, ...]

    @property
    def phrases(self) -> list[str]:
        return [c.phrase for c in self.entries]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def stopword_runs(doc: TokenizedDocument, stoplist: StopList) -> list[tuple[str, ...]]:
    """Maximal runs of non-stop tokens inside each sentence."""
    runs = []
    for sent in doc.sentences:
        run: list[str] = []
        for tok in sent:
            if tok in stoplist:
                if run:
                    runs.append(tuple(run))
                run = []
            else:
                run.append(tok)
        if run:
            runs.append(tuple(run))
    return runs


def extract_candidates(doc: TokenizedDocument, stoplist: StopList,
                       min_keyword_length: int = 3,
                       min_keyword_frequency: int = 5,
                       max_phrase_length: int = 4,
                       ) -> tuple[list[CandidatePhrase], KeywordGraph]:
    """Split the document into candidate keyphrases and build the keyword graph.

    A stopword-free run is a candidate if it has at most
    ``max_phrase_length`` words and every word has at least
    ``min_keyword_length`` characters and occurs at least
    ``min_keyword_frequency`` times in the text. Candidates come back sorted
    by phrase, with their RAKE scores filled in.
    """
    runs = stopword_runs(doc, stoplist)
    word_counts = Counter(w for run in runs for w in run)
    kept = Counter(
        run for run in runs
        if len(run) <= max_phrase_length
        and all(len(w) >= min_keyword_length
                and word_counts[w] >= min_keyword_frequency for w in run)
    )
    candidates = [CandidatePhrase(run, n) for run, n in sorted(kept.items())]
    if not candidates:
        warnings.warn("no candidate keyphrases found", stacklevel=2)
    graph = KeywordGraph.from_candidates(candidates)
    candidates = [replace(c, rake_score=score_rake(c, graph)) for c in candidates]
    return candidates, graph


def score_rake(candidate: CandidatePhrase, graph: KeywordGraph) -> float:
    score = 0.0
    for word in candidate.tokens:
        if word not in graph.freq:
            raise KeyError(f"keyword {word!r} missing from keyword graph")
        score += graph.deg[word] / graph.freq[word]
    return score


def score_final(candidate: CandidatePhrase, table: Mapping[str, float]) -> float:
    return candidate.rake_score / (1.0 + table.get(candidate.phrase, 0))


def merge_candidates(candidates: Iterable[CandidatePhrase]) -> list[CandidatePhrase]:
    """Strip placeholder tokens and merge duplicates, keeping the best score."""
    best: dict[tuple[str, ...], CandidatePhrase] = {}
    for cand in candidates:
        tokens = tuple(t for t in cand.tokens if t not in PLACEHOLDERS)
        if not tokens:
            continue
        cand = replace(cand, tokens=tokens)
        prev = best.get(tokens)
        if prev is None or cand.final_score > prev.final_score:
            best[tokens] = cand
    return list(best.values())


def select_index(candidates: Iterable[CandidatePhrase], fraction: float = 0.5) -> IndexList:
    """Keep the top ``ceil(fraction * n)`` candidates.

    Order is final score descending, then phrase ascending, so ties at the
    cut keep the lexicographically smaller phrase.
    """
    if not 0 < fraction <= 1:
        raise ValueError("fraction must lie in (0, 1]")
    ranked = sorted(candidates, key=lambda c: (-c.final_score, c.phrase))
    keep = math.ceil(fraction * len(ranked))
    return IndexList(tuple(ranked[:keep]))


def extract_index(doc: TokenizedDocument, stoplist: StopList,
                  table: Mapping[str, float] | None = None,
                  fraction: float = 0.5, min_keyword_length: int = 3,
                  min_keyword_frequency: int = 5,
                  max_phrase_length: int = 4) -> IndexList:
    """Candidates, scores, cleaning and selection in one call."""
    table = FrequencyTable() if table is None else table
    candidates, _ = extract_candidates(
        doc, stoplist, min_keyword_length, min_keyword_frequency, max_phrase_length
    )
    scored = [replace(c, final_score=score_final(c, table)) for c in candidates]
    return select_index(merge_candidates(scored), fraction)


def write_index_tsv(index: IndexList, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, delimiter="\t", lineterminator="\n")
        writer.writerow(["rank", "phrase", "rake_score", "final_score"])
        for rank, cand in enumerate(index.entries, start=1):
            writer.writerow([rank, cand.phrase, repr(cand.rake_score),
                             repr(cand.final_score)])


def read_index_tsv(path) -> IndexList:
    entries = []
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh, delimiter="\t"):
            entries.append(CandidatePhrase(
                tuple(row["phrase"].split()), 1,
                float(row["rake_score"]), float(row["final_score"]),
            ))
    return IndexList(tuple(entries))
