"""
Skew-symmetric multilinear maps ``g^k -> V`` stored on increasing index tuples.

Coordinates of the full cochain space ``C^k(g; V)`` are ordered
lexicographically by index tuple (as produced by ``itertools.combinations``)
and then by module coordinate, giving dimension ``m * C(n, k)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Mapping, Sequence

from homlie.errors import DimensionMismatch
from homlie.linalg import Matrix, Vector, ZERO, determinant, is_zero, vector


@lru_cache(maxsize=None)
def index_tuples(n: int, k: int) -> tuple:
    return tuple(itertools.combinations(range(n), k))


@lru_cache(maxsize=None)
def _tuple_position(n: int, k: int) -> dict:
    return {t: p for p, t in enumerate(index_tuples(n, k))}


def cochain_space_dim(n: int, k: int, m: int) -> int:
    if k < 0 or k > n:
        return 0
    return m * comb(n, k)


def sort_with_sign(indices: Sequence[int]) -> tuple[int, tuple]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on a repeat."""
    idx = list(indices)
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    for a in range(1, len(idx)):
        if idx[a] == idx[a - 1]:
            return 0, tuple(idx)
    return sign, tuple(idx)


@dataclass(frozen=True)
class Cochain:
    degree: int
    module_dim: int
    values: Mapping  # increasing index tuple -> vector in V

    def __post_init__(self):
        k, m = self.degree, self.module_dim
        if k < 0:
            raise ValueError("negative cochain degree")
        clean = {}
        for key, val in dict(self.values).items():
            key = tuple(int(i) for i in key)
            if len(key) != k:
                raise DimensionMismatch(f"index tuple {key} for a degree-{k} cochain")
            if any(a >= b for a, b in zip(key, key[1:])) or any(i < 0 for i in key):
                raise ValueError(f"index tuple {key} must be strictly increasing and non-negative")
            v = vector(val)
            if len(v) != m:
                raise DimensionMismatch(f"value of length {len(v)} for module dimension {m}")
            if not is_zero(v):
                clean[key] = v
        object.__setattr__(self, "values", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def zero(cls, degree: int, module_dim: int) -> Cochain:
        return cls(degree, module_dim, {})

    @classmethod
    def from_coords(cls, coords: Sequence, n: int, degree: int, module_dim: int) -> Cochain:
        m = module_dim
        if len(coords) != cochain_space_dim(n, degree, m):
            raise DimensionMismatch(
                f"{len(coords)} coordinates for C^{degree} with n={n}, m={m}")
        values = {t: coords[p * m:(p + 1) * m] for p, t in enumerate(index_tuples(n, degree))}
        return cls(degree, m, values)

    @classmethod
    def scalar(cls, degree: int, values: Mapping) -> Cochain:
        """Scalar-valued cochain from ``{(i, j, ...): c}``; keys are sorted with sign."""
        out = {}
        for key, c in values.items():
            sign, key = sort_with_sign(key)
            if sign == 0:
                continue
            out[key] = (vector([c])[0] * sign + out.get(key, (ZERO,))[0],)
        return cls(degree, 1, out)

    @classmethod
    def from_operator(cls, D: Matrix) -> Cochain:
        """A linear map ``g -> V`` as a degree-1 cochain (column j is the value on e_j)."""
        return cls(1, D.rows, {(j,): D.col(j) for j in range(D.cols)})

    def to_operator(self, n: int) -> Matrix:
        if self.degree != 1:
            raise ValueError("only degree-1 cochains are operators")
        return Matrix.from_columns([self.value_at((j,)) for j in range(n)], self.module_dim)

    def support_dim(self) -> int:
        """Smallest algebra dimension the stored indices fit into."""
        return max((max(t) + 1 for t in self.values if t), default=0)

    def to_coords(self, n: int) -> Vector:
        if self.support_dim() > n:
            raise DimensionMismatch(f"cochain uses index {self.support_dim() - 1} beyond dimension {n}")
        m = self.module_dim
        out = [ZERO] * cochain_space_dim(n, self.degree, m)
        pos = _tuple_position(n, self.degree)
        for t, v in self.values.items():
            p = pos[t]
            out[p * m:(p + 1) * m] = v
        return tuple(out)

    def value_at(self, indices: Sequence[int]) -> Vector:
        """Value on basis vectors in any order, extended by skew-symmetry."""
        if len(indices) != self.degree:
            raise DimensionMismatch(f"{len(indices)} arguments for a degree-{self.degree} cochain")
        sign, key = sort_with_sign(indices)
        v = self.values.get(key)
        if sign == 0 or v is None:
            return (ZERO,) * self.module_dim
        return v if sign > 0 else tuple(-a for a in v)

    def evaluate(self, args: Sequence[Sequence]) -> Vector:
        """Value on arbitrary vectors.

        For an alternating map, f(v_1..v_k) = sum over increasing tuples I of
        det(rows I of [v_1 .. v_k]) * f(e_I).
        """
        k, m = self.degree, self.module_dim
        if len(args) != k:
            raise DimensionMismatch(f"{len(args)} arguments for a degree-{k} cochain")
        if k == 0:
            return self.values.get((), (ZERO,) * m)
        out = [ZERO] * m
        for key, val in self.values.items():
            minor = Matrix(k, k, tuple(args[c][r] for r in key for c in range(k)))
            d = determinant(minor)
            if d:
                for a in range(m):
                    if val[a]:
                        out[a] += d * val[a]
        return tuple(out)

    def __add__(self, other: Cochain) -> Cochain:
        self._check_compatible(other)
        keys = set(self.values) | set(other.values)
        zero = (ZERO,) * self.module_dim
        return Cochain(self.degree, self.module_dim, {
            t: tuple(a + b for a, b in zip(self.values.get(t, zero), other.values.get(t, zero)))
            for t in keys})

    def __neg__(self) -> Cochain:
        return Cochain(self.degree, self.module_dim,
                       {t: tuple(-a for a in v) for t, v in self.values.items()})

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-other)

    def scale(self, c) -> Cochain:
        c = vector([c])[0]
        return Cochain(self.degree, self.module_dim,
                       {t: tuple(c * a for a in v) for t, v in self.values.items()})

    def is_zero(self) -> bool:
        return not self.values

    def _check_compatible(self, other: Cochain):
        if (self.degree, self.module_dim) != (other.degree, other.module_dim):
            raise DimensionMismatch(
                f"cochains of type ({self.degree}, {self.module_dim}) and "
                f"({other.degree}, {other.module_dim})")
