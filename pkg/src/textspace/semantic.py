"""Similarity structure of a text operator.

A text matrix A acts as an operator: columns are sentence vectors, rows are
word vectors. All pairwise word similarities live in the positive operator
rho = A A^T, all sentence similarities in N = A^T A; the two share their
nonzero spectrum. The supercharge block matrix packages both at once.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .corpus import Vocabulary
from .errors import TextspaceError
from .spectral import jacobi_eigh


class IndexOutOfRange(TextspaceError):
    """Word or document index outside the operator's shape."""


class ZeroVector(TextspaceError):
    """Cosine is undefined for a zero word vector."""


class EmptyKeptSet(TextspaceError):
    """Diagonal purification removed every index."""


class NotPositive(TextspaceError):
    """Matrix has an eigenvalue below the round-off floor."""


@dataclass(frozen=True)
class SemanticSpace:
    """Immutable text operator with cached rho = A A^T and N = A^T A."""

    operator: np.ndarray
    vocab: Vocabulary | None = None
    rho: np.ndarray = field(init=False, compare=False)
    nmat: np.ndarray = field(init=False, compare=False)

    def __post_init__(self) -> None:
        a = np.atleast_2d(np.asarray(self.operator, dtype=float))
        object.__setattr__(self, "operator", a)
        object.__setattr__(self, "rho", a @ a.T)
        object.__setattr__(self, "nmat", a.T @ a)

    def word_index(self, word: str) -> int:
        if self.vocab is None or word not in self.vocab.index:
            raise IndexOutOfRange(f"unknown word {word!r}")
        return self.vocab.index[word]


def sentence_vector(space: SemanticSpace, n: int) -> np.ndarray:
    """Column n of the operator: the (unnormalized) n-th sentence vector."""
    if not 0 <= n < space.operator.shape[1]:
        raise IndexOutOfRange(f"document index {n} out of range")
    return space.operator[:, n].copy()


def word_vector(space: SemanticSpace, m: int) -> np.ndarray:
    """Row m of the operator: the m-th word vector."""
    if not 0 <= m < space.operator.shape[0]:
        raise IndexOutOfRange(f"word index {m} out of range")
    return space.operator[m, :].copy()


def cosine(space: SemanticSpace, m1: int, m2: int) -> float:
    """Similarity of two words: rho_{m1,m2} / sqrt(rho_{m1,m1} rho_{m2,m2})."""
    rho = space.rho
    for m in (m1, m2):
        if not 0 <= m < rho.shape[0]:
            raise IndexOutOfRange(f"word index {m} out of range")
        if np.sqrt(rho[m, m]) < 1e-12:
            raise ZeroVector(f"word {m} has (near-)zero vector")
    value = rho[m1, m2] / np.sqrt(rho[m1, m1] * rho[m2, m2])
    return float(np.clip(value, -1.0, 1.0))


@dataclass(frozen=True)
class Supercharge:
    """q = [[0, A], [A^T, 0]]; h = q^2 is block-diagonal with blocks rho, N."""

    q: np.ndarray
    h: np.ndarray


def build_supercharge(space: SemanticSpace) -> Supercharge:
    a = space.operator
    m, n = a.shape
    q = np.zeros((m + n, m + n))
    q[:m, m:] = a
    q[m:, :m] = a.T
    return Supercharge(q=q, h=q @ q)


def purify_diagonal(positive: np.ndarray, epsilon: float) -> tuple[np.ndarray, list[int]]:
    """Drop indices whose diagonal entry falls below epsilon, then factorize.

    Returns (factor, kept) where the kept principal submatrix equals
    factor @ factor.T. Deleting rows and columns (rather than zeroing) keeps
    the submatrix positive semidefinite, which the factorization needs. For an
    A^T A-style input the caller transposes the factor.
    """
    p = np.atleast_2d(np.asarray(positive, dtype=float))
    if epsilon < 0:
        raise TextspaceError("epsilon must be nonnegative")
    scale = max(np.linalg.norm(p), 1.0)
    if np.linalg.norm(p - p.T) > 1e-10 * scale:
        raise NotPositive("input is not symmetric")
    kept = [i for i in range(p.shape[0]) if p[i, i] >= epsilon]
    if not kept:
        raise EmptyKeptSet(f"every diagonal entry is below {epsilon}")
    sub = p[np.ix_(kept, kept)]
    eig = jacobi_eigh(sub)
    lam = eig.eigenvalues.copy()
    if np.any(lam < -1e-10):
        raise NotPositive(f"eigenvalue {lam.min():.3e} below round-off floor")
    lam = np.maximum(lam, 0.0)
    cols = lam > 1e-12
    factor = eig.eigenvectors[:, cols] * np.sqrt(lam[cols])
    if factor.size == 0:
        factor = np.zeros((len(kept), 1))
    return factor, kept
