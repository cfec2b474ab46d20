"""Graded tensor algebra over a base word space.

A passage vector is a direct sum of order-K tensors over a d-dimensional base
space, one component per degree K >= 0 (degree 0 is the empty word). Tensors
are stored dense, so degree is capped (default 6) to keep d^K bounded.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np

from .errors import TextspaceError

DEFAULT_DEGREE_CAP = 6


class BaseDimMismatch(TextspaceError):
    """Operands live over base spaces of different dimension."""


class LengthMismatch(TextspaceError):
    """Paired sequences have different lengths."""


class MissingDegree(TextspaceError):
    """The vector has no component at the requested degree."""


class DegreeCapExceeded(TextspaceError):
    """A product would create a component above the configured degree cap."""


@dataclass(frozen=True)
class FockVector:
    """Immutable graded vector: degree K maps to an order-K tensor of shape (d,)*K."""

    base_dim: int
    components: Mapping[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[int, np.ndarray] = {}
        for degree, tensor in self.components.items():
            arr = np.asarray(tensor, dtype=float)
            if degree < 0:
                raise TextspaceError(f"negative degree {degree}")
            if arr.shape != (self.base_dim,) * degree:
                raise TextspaceError(
                    f"degree-{degree} component has shape {arr.shape}, "
                    f"expected {(self.base_dim,) * degree}"
                )
            arr = arr.copy()
            arr.flags.writeable = False
            clean[degree] = arr
        object.__setattr__(self, "components", MappingProxyType(clean))

    @classmethod
    def basis(cls, base_dim: int, j: int) -> "FockVector":
        """Degree-1 basis word |j>."""
        coeffs = np.zeros(base_dim)
        coeffs[j] = 1.0
        return cls(base_dim, {1: coeffs})

    @classmethod
    def from_vector(cls, coeffs: Iterable[float]) -> "FockVector":
        """Degree-1 vector from arbitrary coefficients (e.g. a semantic word vector)."""
        arr = np.asarray(list(coeffs), dtype=float)
        return cls(len(arr), {1: arr})

    @classmethod
    def scalar(cls, base_dim: int, value: float) -> "FockVector":
        """Degree-0 component: a multiple of the empty word."""
        return cls(base_dim, {0: np.asarray(float(value))})

    def component(self, degree: int) -> np.ndarray:
        """Component at `degree`; absent degrees are zero."""
        if degree in self.components:
            return self.components[degree]
        return np.zeros((self.base_dim,) * degree)

    def degrees(self) -> list[int]:
        return sorted(self.components)

    def norm(self) -> float:
        return math.sqrt(fock_inner(self, self))

    def isclose(self, other: "FockVector", tol: float = 1e-12) -> bool:
        if self.base_dim != other.base_dim:
            return False
        for degree in set(self.components) | set(other.components):
            if not np.allclose(self.component(degree), other.component(degree),
                               rtol=0.0, atol=tol):
                return False
        return True


def _check_dims(x: FockVector, y: FockVector) -> None:
    if x.base_dim != y.base_dim:
        raise BaseDimMismatch(f"base dims {x.base_dim} != {y.base_dim}")


def fock_add(x: FockVector, y: FockVector) -> FockVector:
    """Degree-wise coefficient addition."""
    _check_dims(x, y)
    out: dict[int, np.ndarray] = {}
    for degree in set(x.components) | set(y.components):
        out[degree] = x.component(degree) + y.component(degree)
    return FockVector(x.base_dim, out)


def fock_scale(alpha: float, x: FockVector) -> FockVector:
    return FockVector(x.base_dim, {k: alpha * t for k, t in x.components.items()})


def fock_tensor(x: FockVector, y: FockVector,
                max_degree: int = DEFAULT_DEGREE_CAP) -> FockVector:
    """Graded tensor product: degree-(J+K) accumulates outer products."""
    _check_dims(x, y)
    out: dict[int, np.ndarray] = {}
    for j, tj in x.components.items():
        for k, tk in y.components.items():
            degree = j + k
            if degree > max_degree:
                raise DegreeCapExceeded(
                    f"degree {degree} exceeds cap {max_degree}; raise max_degree"
                )
            prod = np.multiply.outer(tj, tk)
            if degree in out:
                out[degree] = out[degree] + prod
            else:
                out[degree] = prod
    return FockVector(x.base_dim, out)


def fock_inner(x: FockVector, y: FockVector) -> float:
    """Sum over shared degrees of the coefficient-wise dot product."""
    _check_dims(x, y)
    total = 0.0
    for degree in set(x.components) & set(y.components):
        total += float(np.sum(x.components[degree] * y.components[degree]))
    return total


def bind(roles: list[FockVector], fillers: list[FockVector]) -> FockVector:
    """Role-filler binding: sum of role_i (x) filler_i, a single degree-2 tensor."""
    if len(roles) != len(fillers) or not roles:
        raise LengthMismatch(f"{len(roles)} roles vs {len(fillers)} fillers")
    result = fock_tensor(roles[0], fillers[0])
    for r, f in zip(roles[1:], fillers[1:]):
        result = fock_add(result, fock_tensor(r, f))
    return result


def unbind(bound: FockVector, role: FockVector) -> np.ndarray:
    """Contract the role against the degree-2 component, recovering a filler."""
    if 2 not in bound.components or 1 not in role.components:
        raise MissingDegree("unbind needs a degree-2 bound vector and a degree-1 role")
    return role.components[1] @ bound.components[2]


def _permute_component(x: FockVector, degree: int, signed: bool) -> FockVector:
    if degree < 1:
        raise TextspaceError("degree must be >= 1")
    if degree not in x.components:
        raise MissingDegree(f"no degree-{degree} component")
    tensor = x.components[degree]
    total = np.zeros_like(tensor)
    for perm in itertools.permutations(range(degree)):
        sign = 1.0
        if signed:
            # parity by counting inversions
            inversions = sum(
                1 for i in range(degree) for j in range(i + 1, degree)
                if perm[i] > perm[j]
            )
            sign = -1.0 if inversions % 2 else 1.0
        total += sign * np.transpose(tensor, perm)
    out = dict(x.components)
    out[degree] = total / math.factorial(degree)
    return FockVector(x.base_dim, out)


def symmetrize(x: FockVector, degree: int) -> FockVector:
    """Project the degree-K component onto its symmetric part."""
    return _permute_component(x, degree, signed=False)


def antisymmetrize(x: FockVector, degree: int) -> FockVector:
    """Project the degree-K component onto its antisymmetric part."""
    return _permute_component(x, degree, signed=True)


def circ_conv(x: Iterable[float], y: Iterable[float]) -> tuple[float, ...]:
    """Circular convolution of two equal-length coordinate tuples.

    Basis-dependent by construction: operates on n-tuples, not vectors.
    """
    xs = np.asarray(list(x), dtype=float)
    ys = np.asarray(list(y), dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1 or xs.size == 0:
        raise LengthMismatch(f"tuple lengths {xs.shape} vs {ys.shape}")
    n = xs.size
    out = np.zeros(n)
    for k in range(n):
        out[k] = sum(xs[j] * ys[(k - j) % n] for j in range(n))
    return tuple(float(v) for v in out)


def stein_phrases() -> tuple[FockVector, FockVector, FockVector]:
    """Three representations of "Rose is a rose is a rose is a rose".

    Base words are rose=0, is=1, a=2 in a 3-dimensional space. The first is
    the flat bag of words 4|rose> + 3|is> + 3|a>; the other two keep syntactic
    grouping as superpositions across tensor degrees.
    """
    rose = FockVector.basis(3, 0)
    is_ = FockVector.basis(3, 1)
    a = FockVector.basis(3, 2)

    s1 = fock_add(fock_scale(4, rose), fock_add(fock_scale(3, is_), fock_scale(3, a)))
    s2 = fock_add(rose, fock_scale(3, fock_tensor(is_, fock_tensor(a, rose))))
    s3 = fock_add(fock_add(rose, fock_scale(3, is_)),
                  fock_scale(3, fock_tensor(a, rose)))
    return s1, s2, s3
