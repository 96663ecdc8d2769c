"""Plaintext normalization, sentence splitting and placeholder masking.

The front end turns a cleaned plaintext document into a
:class:`TokenizedDocument`: an ordered list of sentences, each an ordered
list of lowercase word tokens. Numbers become ``"#"`` and tokens that look
like leftover mathematical variables become ``"VAR"``.
"""
from __future__ import annotations

import re
import unicodedata
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

NUMBER = "#"
VARIABLE = "VAR"
PRONOUN = "-pron-"
PLACEHOLDERS = frozenset({NUMBER, VARIABLE, PRONOUN})

VOWELS = frozenset("aeiou")
# U+2010/U+2011 are the unicode hyphens that survive KD normalization.
_HYPHENS = re.compile("[-‐‑]")
_SENTENCE_END = re.compile(r"[.?!]+(?=\s)|[.?!]+$")
_LEADING = "([{\"'`<"
_TRAILING = ")]}\"'`>,.;:!?"
_CLITICS = ("'s", "'re", "'ve", "'ll", "'d", "n't", "'m")

Lemmatizer = Callable[[str], str]


class IngestError(ValueError):
    """Raised when a document cannot be read or is empty."""


@dataclass(frozen=True)
class RawDocument:
    text: str
    doc_id: str = "document"


@dataclass(frozen=True)
class TokenizedDocument:
    """Ordered sentences of masked tokens."""

    sentences: tuple[tuple[str, ...], ...]
    doc_id: str = "document"

    def __post_init__(self):
        object.__setattr__(
            self, "sentences", tuple(tuple(s) for s in self.sentences)
        )

    @property
    def n_sentences(self) -> int:
        return len(self.sentences)

    def tokens(self) -> list[str]:
        return [tok for sent in self.sentences for tok in sent]

    def permuted(self, order: Iterable[int]) -> "TokenizedDocument":
        order = list(order)
        if sorted(order) != list(range(self.n_sentences)):
            raise ValueError("order must be a permutation of sentence indices")
        return TokenizedDocument(
            tuple(self.sentences[i] for i in order), self.doc_id
        )

    def detokenize(self) -> str:
        # " ." keeps abbreviation handling from merging sentences on re-split
        return " ".join(" ".join(s) + " ." for s in self.sentences)


@dataclass(frozen=True)
class StopList:
    words: frozenset = field(default_factory=frozenset)

    def __contains__(self, word) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words))

    def union(self, extra: Iterable[str]) -> "StopList":
        return StopList(self.words | frozenset(extra))


class WordListDictionary:
    """Spelling dictionary backed by a plain wordlist."""

    def __init__(self, words: Iterable[str]):
        self._words = frozenset(w.strip().lower() for w in words if w.strip())

    @classmethod
    def from_file(cls, path) -> "WordListDictionary":
        return cls(read_word_file(path))

    def __contains__(self, word) -> bool:
        return word.lower() in self._words

    def __len__(self) -> int:
        return len(self._words)


def identity_lemmatizer(text: str) -> str:
    return text


def read_word_file(path) -> list[str]:
    """Read a one-word-per-line UTF-8 file, skipping blank and ``#`` comment lines."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [ln.strip() for ln in lines if ln.strip() and not ln.startswith("#")]


def _data_file(name: str) -> Path:
    return Path(str(resources.files("gapnet") / "data" / name))


def load_stoplist(path, augment: bool = True) -> StopList:
    """Load a stop list from a word file.

    With ``augment`` (the default) the list is prepared for masking and
    keyphrase extraction: single-letter words and ``"value"`` are removed,
    and the placeholders plus the math-exposition words are added.
    """
    words = set(w.lower() for w in read_word_file(path))
    if augment:
        words = {w for w in words if len(w) > 1}
        words.discard("value")
        words |= set(read_word_file(_data_file("math_stopwords.txt")))
        words |= PLACEHOLDERS
    return StopList(frozenset(words))


def default_stoplist() -> StopList:
    return load_stoplist(_data_file("ranksnl_long.txt"))


def default_dictionary() -> WordListDictionary:
    return WordListDictionary.from_file(_data_file("words.txt"))


def default_abbreviations() -> frozenset:
    return frozenset(read_word_file(_data_file("abbreviations.txt")))


def decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IngestError(
            f"invalid UTF-8 at byte offset {exc.start}: {exc.reason}"
        ) from exc


def read_document(path, doc_id: str | None = None) -> RawDocument:
    path = Path(path)
    return RawDocument(decode(path.read_bytes()), doc_id or path.stem)


def normalize(raw: RawDocument | str | bytes,
              lemmatizer: Lemmatizer | None = None) -> str:
    """KD-normalize, replace hyphens with spaces, lemmatize and lowercase."""
    if isinstance(raw, RawDocument):
        text = raw.text
    elif isinstance(raw, bytes):
        text = decode(raw)
    else:
        text = raw
    if not text or not text.strip():
        raise IngestError("empty document")
    text = unicodedata.normalize("NFKD", text)
    text = _HYPHENS.sub(" ", text)
    text = (lemmatizer or identity_lemmatizer)(text)
    return text.lower()


def split_sentences(text: str, abbreviations: Iterable[str] | None = None) -> list[str]:
    """Split on runs of ``.?!`` followed by whitespace.

    A period directly after a known abbreviation does not end a sentence.
    """
    abbrevs = default_abbreviations() if abbreviations is None else frozenset(abbreviations)
    sentences = []
    start = 0
    for m in _SENTENCE_END.finditer(text):
        if m.group().startswith("."):
            before = text[start:m.start()].rsplit(None, 1)
            last = before[-1].lower().lstrip(_LEADING) if before else ""
            if last and last in abbrevs:
                continue
        sentences.append(text[start:m.end()])
        start = m.end()
    sentences.append(text[start:])
    return [s.strip() for s in sentences if s.strip()]


def split_words(sentence: str) -> list[str]:
    """Whitespace tokenization with surrounding punctuation and clitics peeled off."""
    words = []
    for raw in sentence.split():
        tok = raw.lstrip(_LEADING).rstrip(_TRAILING)
        for clitic in _CLITICS:
            if tok.endswith(clitic) and len(tok) > len(clitic):
                tok = tok[: -len(clitic)]
                break
        if tok:
            words.append(tok)
    return words


def mask_token(tok: str, stoplist: StopList, dictionary) -> str | None:
    """Map one word to its masked form, or ``None`` if it is dropped."""
    if tok in PLACEHOLDERS:
        return tok
    if any(ch.isdigit() for ch in tok):
        return NUMBER
    if not all(ch.isalpha() or ch == NUMBER for ch in tok):
        return None
    if NUMBER in tok:
        return NUMBER
    if not VOWELS.intersection(tok.lower()):
        return VARIABLE
    if len(tok) <= 2 and tok not in stoplist:
        return VARIABLE
    if 3 <= len(tok) <= 4 and tok not in dictionary:
        return VARIABLE
    return tok


def tokenize_and_mask(text: str, stoplist: StopList | None = None,
                      dictionary=None, abbreviations: Iterable[str] | None = None,
                      doc_id: str = "document") -> TokenizedDocument:
    """Split normalized text into sentences of masked tokens.

    Rules run in order: words with a digit become ``"#"``; other tokens that
    are not purely alphabetic are dropped; then a word with no vowel, a word
    of at most two letters missing from ``stoplist``, or a three- or
    four-letter word missing from ``dictionary`` becomes ``"VAR"``.
    Sentences left without tokens are dropped.
    """
    stoplist = default_stoplist() if stoplist is None else stoplist
    dictionary = default_dictionary() if dictionary is None else dictionary
    sentences = []
    for sent in split_sentences(text, abbreviations):
        toks = [mask_token(w, stoplist, dictionary) for w in split_words(sent)]
        toks = [t for t in toks if t is not None]
        if toks:
            sentences.append(tuple(toks))
    if not sentences:
        raise IngestError("document has no tokens after masking")
    return TokenizedDocument(tuple(sentences), doc_id)


def preprocess(raw: RawDocument, stoplist: StopList | None = None,
               dictionary=None, lemmatizer: Lemmatizer | None = None,
               abbreviations: Iterable[str] | None = None) -> TokenizedDocument:
    return tokenize_and_mask(normalize(raw, lemmatizer), stoplist, dictionary,
                             abbreviations, doc_id=raw.doc_id)
