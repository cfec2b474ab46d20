"""Symmetric eigensolver and SVD built on it.

The SVD here is deliberately computed through the spectral analysis of the
Gram matrix A^T A (a Schmidt-decomposition construction) rather than
bidiagonalization: singular values are the square roots of its eigenvalues,
right singular vectors are its eigenvectors, and left singular vectors are the
normalized images A v. Everything targets desk-scale dense matrices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TextspaceError
from .serialize import dump_json, load_json


class NotSymmetric(TextspaceError):
    """Input matrix is not symmetric within tolerance."""


class NoConvergence(TextspaceError):
    """Jacobi sweeps did not reduce the off-diagonal norm in time."""


class RankOutOfRange(TextspaceError):
    """Requested truncation rank is negative or exceeds the stored rank."""


class DimensionTooSmall(TextspaceError):
    """Square embedding target is smaller than the matrix dimensions."""


_OFFDIAG_TOL = 1e-12
_MAX_SWEEPS = 100
_ZERO_SINGULAR = 1e-10


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in descending order, eigenvectors as aligned columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class SVDTriple:
    """left (orthonormal columns) @ diag(singulars) @ right (orthonormal rows)."""

    left: np.ndarray
    singulars: np.ndarray
    right: np.ndarray

    def save(self, path: str) -> None:
        dump_json(
            {
                "left": self.left.tolist(),
                "singulars": self.singulars.tolist(),
                "right": self.right.tolist(),
            },
            path,
        )

    @classmethod
    def load(cls, path: str) -> "SVDTriple":
        data = load_json(path)
        return cls(
            left=np.array(data["left"], dtype=float),
            singulars=np.array(data["singulars"], dtype=float),
            right=np.array(data["right"], dtype=float),
        )


@dataclass(frozen=True)
class SquareSVD:
    """Square-unitary embedding of a rectangular SVD: product is (A, 0)."""

    unitary_left: np.ndarray
    padded_diag: np.ndarray
    unitary_right: np.ndarray


def _fix_sign(vector: np.ndarray) -> np.ndarray:
    pivot = int(np.argmax(np.abs(vector)))
    return -vector if vector[pivot] < 0 else vector


def jacobi_eigh(matrix: np.ndarray, max_sweeps: int = _MAX_SWEEPS) -> EigenDecomposition:
    """Cyclic Jacobi eigensolver for a symmetric real matrix.

    Rotates until the off-diagonal Frobenius norm drops below 1e-12 relative to
    the matrix norm. Eigenpairs come back sorted descending (stable for ties)
    with each eigenvector's largest-magnitude entry made nonnegative.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    scale = np.linalg.norm(a)
    if np.linalg.norm(a - a.T) > 1e-12 * max(scale, 1.0):
        raise NotSymmetric("matrix is not symmetric within 1e-12 relative")
    n = a.shape[0]
    vecs = np.eye(n)

    converged = scale == 0.0
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= _OFFDIAG_TOL * scale:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                rot_p = c * vecs[:, p] - s * vecs[:, q]
                rot_q = s * vecs[:, p] + c * vecs[:, q]
                vecs[:, p], vecs[:, q] = rot_p, rot_q
    else:
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        converged = off <= _OFFDIAG_TOL * scale
    if not converged:
        raise NoConvergence(f"off-diagonal norm still {off:.3e} after {max_sweeps} sweeps")

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vecs = vecs[:, order]
    for i in range(n):
        vecs[:, i] = _fix_sign(vecs[:, i])
    return EigenDecomposition(eigenvalues=values, eigenvectors=vecs)


def _extend_orthonormal(columns: list[np.ndarray], dim: int, count: int,
                        skip_tol: float = 1e-8) -> list[np.ndarray]:
    """Gram-Schmidt standard-basis candidates onto `columns` until `count` total."""
    basis = list(columns)
    for j in range(dim):
        if len(basis) >= count:
            break
        cand = np.zeros(dim)
        cand[j] = 1.0
        for _ in range(2):  # re-orthogonalize for stability
            for b in basis:
                cand = cand - (b @ cand) * b
        norm = np.linalg.norm(cand)
        if norm < skip_tol:
            continue
        basis.append(cand / norm)
    if len(basis) < count:
        raise TextspaceError("could not complete an orthonormal basis")
    return basis


def svd(matrix: np.ndarray) -> SVDTriple:
    """SVD via spectral analysis of the Gram matrix A^T A."""
    a = np.atleast_2d(np.array(matrix, dtype=float))
    m, n = a.shape
    k = min(m, n)
    gram = a.T @ a
    eig = jacobi_eigh(gram)
    lam = eig.eigenvalues[:k].copy()
    lam[(lam < 0) & (lam > -1e-12)] = 0.0
    lam = np.maximum(lam, 0.0)
    singulars = np.sqrt(lam)
    right = eig.eigenvectors[:, :k].T

    left_cols: list[np.ndarray] = []
    for i in range(k):
        if singulars[i] > _ZERO_SINGULAR:
            image = a @ right[i]
            left_cols.append(image / np.linalg.norm(image))
        else:
            break
    left_cols = _extend_orthonormal(left_cols, m, k)
    return SVDTriple(left=np.column_stack(left_cols), singulars=singulars, right=right)


def truncate(triple: SVDTriple, k: int) -> np.ndarray:
    """Rank-k reconstruction: keep the k largest singular values, zero the rest."""
    total = len(triple.singulars)
    if not 0 <= k <= total:
        raise RankOutOfRange(f"rank {k} outside [0, {total}]")
    kept = np.zeros(total)
    kept[:k] = triple.singulars[:k]
    return triple.left @ np.diag(kept) @ triple.right


def embed_square(triple: SVDTriple, target_dim: int) -> SquareSVD:
    """Embed a rectangular SVD into square factors of size target_dim.

    The left factor is completed to a unitary whose leading columns are the
    existing ones; the right factor is completed and padded with an identity
    block. The triple product reproduces the zero-padded input.
    """
    m, k = triple.left.shape
    n = triple.right.shape[1]
    if target_dim < max(m, n):
        raise DimensionTooSmall(f"target {target_dim} < max({m}, {n})")

    padded_left = [np.pad(triple.left[:, i], (0, target_dim - m)) for i in range(k)]
    unitary_left = np.column_stack(_extend_orthonormal(padded_left, target_dim, target_dim))

    padded_diag = np.zeros((target_dim, target_dim))
    padded_diag[:k, :k] = np.diag(triple.singulars)

    right_rows = _extend_orthonormal([triple.right[i] for i in range(k)], n, n)
    unitary_right = np.eye(target_dim)
    unitary_right[:n, :n] = np.vstack(right_rows)
    return SquareSVD(unitary_left=unitary_left, padded_diag=padded_diag,
                     unitary_right=unitary_right)
