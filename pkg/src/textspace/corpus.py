"""Text ingestion: tokenization and term-document count matrices."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import TextspaceError
from .serialize import dump_json, load_json


class AllDocumentsEmpty(TextspaceError):
    """No document produced any token."""


class ZeroRow(TextspaceError):
    """A word row sums to zero, so its occurrence distribution is undefined."""


# letters and digits only; underscore is punctuation for our purposes
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Lowercase `text` and split on every non-alphanumeric character.

    Digit-only tokens are kept; empty input yields an empty list.
    """
    return _TOKEN_RE.findall(text.lower())


@dataclass(frozen=True)
class Vocabulary:
    """Unique tokens in first-occurrence order with a reverse index."""

    words: tuple[str, ...]
    index: dict[str, int] = field(compare=False)

    @classmethod
    def from_tokens(cls, tokens: list[str]) -> "Vocabulary":
        seen: dict[str, int] = {}
        for tok in tokens:
            if tok not in seen:
                seen[tok] = len(seen)
        return cls(words=tuple(seen), index=seen)

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class TermDocMatrix:
    """Dense word-by-document matrix: entry (m, n) counts word m in document n."""

    vocab: Vocabulary
    entries: np.ndarray

    @property
    def doc_count(self) -> int:
        return self.entries.shape[1]

    def save(self, path: str) -> None:
        dump_json(
            {
                "vocab": list(self.vocab.words),
                "doc_count": self.doc_count,
                "rows": self.entries.tolist(),
            },
            path,
        )

    @classmethod
    def load(cls, path: str) -> "TermDocMatrix":
        data = load_json(path)
        vocab = Vocabulary.from_tokens(list(data["vocab"]))
        entries = np.array(data["rows"], dtype=float)
        if entries.shape != (len(vocab), data["doc_count"]):
            raise TextspaceError(f"matrix file {path!r} is inconsistent")
        return cls(vocab=vocab, entries=entries)


def build_matrix(documents: list[str],
                 exclude: frozenset[str] | set[str] = frozenset()) -> TermDocMatrix:
    """Count tokens per document; vocabulary is first-occurrence ordered.

    `exclude` drops the given tokens entirely. There is no built-in stop-word
    list; exclusions are always caller-supplied.
    """
    token_lists = [[t for t in tokenize(doc) if t not in exclude]
                   for doc in documents]
    all_tokens = [tok for toks in token_lists for tok in toks]
    if not all_tokens:
        raise AllDocumentsEmpty("no tokens in any document")
    vocab = Vocabulary.from_tokens(all_tokens)
    entries = np.zeros((len(vocab), len(documents)))
    for n, toks in enumerate(token_lists):
        for tok in toks:
            entries[vocab.index[tok], n] += 1
    return TermDocMatrix(vocab=vocab, entries=entries)


def entropy_weight(matrix: TermDocMatrix) -> TermDocMatrix:
    """Standard log-entropy weighting of raw counts.

    entry (m, n) becomes log(1 + c_mn) * (1 - H_m / log(doc_count)), where H_m
    is the entropy of word m's occurrence distribution across documents. For a
    single document the weight factor is 1. Opt-in: raw counts stay the default
    everywhere else.
    """
    counts = matrix.entries
    totals = counts.sum(axis=1)
    if np.any(totals == 0):
        word = matrix.vocab.words[int(np.argmin(totals))]
        raise ZeroRow(f"word {word!r} has total count 0")
    weighted = np.log1p(counts)
    if matrix.doc_count > 1:
        q = counts / totals[:, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            plogp = np.where(q > 0, q * np.log(q), 0.0)
        entropy = -plogp.sum(axis=1)
        weighted *= (1.0 - entropy / math.log(matrix.doc_count))[:, None]
    return TermDocMatrix(vocab=matrix.vocab, entries=weighted)


def read_corpus(path: str) -> list[str]:
    """One document per line; blank lines are kept as empty documents."""
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read().splitlines()
