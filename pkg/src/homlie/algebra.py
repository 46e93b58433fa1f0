"""
Hom-Lie algebras given by structure constants and a twisting matrix.

The bracket is stored sparsely: ``structure[(i, j)]`` for ``i < j`` is the
coefficient vector of ``[e_i, e_j]``.  Skew-symmetry is structural:
``[e_j, e_i] = -[e_i, e_j]`` and ``[e_i, e_i] = 0`` are never stored.

All identity checks loop over basis pairs ``i < j`` or triples
``i < j < k`` only.  The hom-Jacobi expression is trilinear, invariant under
cyclic permutation and vanishes when two arguments coincide, so it is
alternating and determined by its values on increasing triples.  The same
argument covers every pairwise identity checked here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Mapping, Sequence

from homlie.errors import DimensionMismatch, NotRegular, Singular
from homlie.linalg import (
    Matrix, Subspace, Vector, ZERO, block_diag, inverse, is_zero, kernel, rank, unit_vector,
    vadd, vector, vstack, vsub,
)


@dataclass(frozen=True)
class Counterexample:
    indices: tuple
    defect: Vector
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    property: str
    holds: bool
    counterexample: Counterexample | None = None

    def __post_init__(self):
        if self.holds != (self.counterexample is None):
            raise ValueError("a report holds exactly when it carries no counterexample")

    def __bool__(self):
        return self.holds

    @classmethod
    def ok(cls, prop: str) -> VerificationReport:
        return cls(prop, True)

    @classmethod
    def failed(cls, prop: str, indices, defect, note: str = "") -> VerificationReport:
        return cls(prop, False, Counterexample(tuple(indices), tuple(defect), note))

    def describe(self, labels: Sequence[str] | None = None) -> str:
        if self.holds:
            return f"{self.property}: holds"
        ce = self.counterexample
        idx = ", ".join(labels[i] if labels and isinstance(i, int) and i < len(labels) else str(i)
                        for i in ce.indices)
        defect = "(" + ", ".join(str(a) for a in ce.defect) + ")"
        extra = f" [{ce.note}]" if ce.note else ""
        return f"{self.property}: fails at ({idx}), defect {defect}{extra}"


@dataclass(frozen=True)
class HomLieAlgebra:
    dim: int
    structure: Mapping  # (i, j) with i < j -> coefficient vector
    alpha: Matrix
    basis_labels: tuple | None = None

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise ValueError("negative dimension")
        if self.alpha.shape != (n, n):
            raise DimensionMismatch(f"alpha has shape {self.alpha.shape}, expected {n}x{n}")
        clean = {}
        for key, coeffs in dict(self.structure).items():
            i, j = key
            if not (0 <= i < j < n):
                raise ValueError(f"bracket index pair {key} must satisfy 0 <= i < j < {n}")
            v = vector(coeffs)
            if len(v) != n:
                raise DimensionMismatch(f"bracket [{i},{j}] has {len(v)} coefficients, expected {n}")
            if not is_zero(v):
                clean[(i, j)] = v
        object.__setattr__(self, "structure", MappingProxyType(dict(sorted(clean.items()))))
        if self.basis_labels is not None:
            labels = tuple(str(s) for s in self.basis_labels)
            if len(labels) != n:
                raise DimensionMismatch(f"{len(labels)} basis labels for dimension {n}")
            object.__setattr__(self, "basis_labels", labels)

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping | None = None, alpha: Matrix | None = None,
                      labels: Sequence[str] | None = None) -> HomLieAlgebra:
        if alpha is None:
            alpha = Matrix.identity(dim)
        elif not isinstance(alpha, Matrix):
            alpha = Matrix.from_rows(alpha, cols=dim)
        return cls(dim, dict(brackets or {}), alpha, tuple(labels) if labels is not None else None)

    @property
    def labels(self) -> tuple:
        return self.basis_labels or tuple(f"e{i + 1}" for i in range(self.dim))

    @cached_property
    def _table(self):
        n = self.dim
        zero = (ZERO,) * n
        t = [[zero] * n for _ in range(n)]
        for (i, j), v in self.structure.items():
            t[i][j] = v
            t[j][i] = tuple(-a for a in v)
        return t

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self._table[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch(f"bracket arguments of length {len(x)}, {len(y)} in dimension {n}")
        out = [ZERO] * n
        for (i, j), v in self.structure.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                for k, a in enumerate(v):
                    if a:
                        out[k] += c * a
        return tuple(out)

    def twist(self, x: Sequence) -> Vector:
        return self.alpha.apply(x)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ``v -> [x, v]``."""
        n = self.dim
        return Matrix.from_columns([self.bracket(x, unit_vector(n, j)) for j in range(n)], n)

    def structurally_equal(self, other: HomLieAlgebra) -> bool:
        """Same dimension, structure constants and twist, ignoring labels."""
        return (self.dim == other.dim and dict(self.structure) == dict(other.structure)
                and self.alpha == other.alpha)

    def relabel(self, perm: Sequence[int]) -> HomLieAlgebra:
        """Algebra with basis ``f_k = e_{perm[k]}``."""
        n = self.dim
        if sorted(perm) != list(range(n)):
            raise ValueError(f"{perm} is not a permutation of range({n})")
        brackets = {}
        for a, b in itertools.combinations(range(n), 2):
            v = self.bracket_basis(perm[a], perm[b])
            brackets[(a, b)] = tuple(v[perm[k]] for k in range(n))
        alpha = Matrix.from_rows([[self.alpha[perm[r], perm[c]] for c in range(n)] for r in range(n)])
        labels = None if self.basis_labels is None else tuple(self.basis_labels[p] for p in perm)
        return HomLieAlgebra(n, brackets, alpha, labels)

    def with_brackets(self, structure: Mapping, alpha: Matrix | None = None) -> HomLieAlgebra:
        return HomLieAlgebra(self.dim, structure, self.alpha if alpha is None else alpha,
                             self.basis_labels)


@dataclass(frozen=True)
class LinearMap:
    source_dim: int
    target_dim: int
    matrix: Matrix = field(repr=False)

    def __post_init__(self):
        if self.matrix.shape != (self.target_dim, self.source_dim):
            raise DimensionMismatch(
                f"matrix shape {self.matrix.shape} for a map Q^{self.source_dim} -> Q^{self.target_dim}")

    def __call__(self, x: Sequence) -> Vector:
        return self.matrix.apply(x)


def bracket(g: HomLieAlgebra, x: Sequence, y: Sequence) -> Vector:
    return g.bracket(x, y)


def hom_jacobi_defect(g: HomLieAlgebra, i: int, j: int, k: int) -> Vector:
    n = g.dim
    e = [unit_vector(n, a) for a in (i, j, k)]
    a = [g.twist(v) for v in e]
    terms = (
        g.bracket(a[0], g.bracket_basis(j, k)),
        g.bracket(a[1], g.bracket_basis(k, i)),
        g.bracket(a[2], g.bracket_basis(i, j)),
    )
    return vadd(vadd(terms[0], terms[1]), terms[2])


def verify_hom_jacobi(g: HomLieAlgebra) -> VerificationReport:
    prop = "hom-Jacobi"
    for i, j, k in itertools.combinations(range(g.dim), 3):
        d = hom_jacobi_defect(g, i, j, k)
        if not is_zero(d):
            return VerificationReport.failed(prop, (i, j, k), d)
    return VerificationReport.ok(prop)


def is_multiplicative(g: HomLieAlgebra) -> VerificationReport:
    prop = "multiplicative"
    n = g.dim
    images = [g.alpha.col(i) for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        d = vsub(g.twist(g.bracket_basis(i, j)), g.bracket(images[i], images[j]))
        if not is_zero(d):
            return VerificationReport.failed(prop, (i, j), d)
    return VerificationReport.ok(prop)


def is_invertible(M: Matrix) -> bool:
    return M.is_square and rank(M) == M.rows


def is_regular(g: HomLieAlgebra) -> bool:
    return bool(is_multiplicative(g)) and is_invertible(g.alpha)


def alpha_power(g: HomLieAlgebra, s: int) -> Matrix:
    if s >= 0:
        return g.alpha.power(s)
    try:
        return inverse(g.alpha).power(-s)
    except Singular as exc:
        raise NotRegular(f"alpha^{s} needs an invertible twist: {exc}") from None


def direct_sum(g: HomLieAlgebra, k: HomLieAlgebra) -> HomLieAlgebra:
    n, m = g.dim, k.dim
    brackets = {}
    for (i, j), v in g.structure.items():
        brackets[(i, j)] = tuple(v) + (ZERO,) * m
    for (i, j), v in k.structure.items():
        brackets[(n + i, n + j)] = (ZERO,) * n + tuple(v)
    labels = None
    if g.basis_labels is not None or k.basis_labels is not None:
        labels = g.labels + k.labels
        if len(set(labels)) != len(labels):
            labels = tuple(f"{s}'" if p >= n else s for p, s in enumerate(labels))
    return HomLieAlgebra(n + m, brackets, block_diag(g.alpha, k.alpha), labels)


def _check_map(g: HomLieAlgebra, k: HomLieAlgebra, phi: LinearMap):
    if phi.source_dim != g.dim or phi.target_dim != k.dim:
        raise DimensionMismatch(
            f"map Q^{phi.source_dim} -> Q^{phi.target_dim} between algebras of dims {g.dim}, {k.dim}")


def morphism_report(g: HomLieAlgebra, k: HomLieAlgebra, phi: LinearMap) -> VerificationReport:
    _check_map(g, k, phi)
    prop = "morphism"
    images = [phi.matrix.col(i) for i in range(g.dim)]
    for i, j in itertools.combinations(range(g.dim), 2):
        d = vsub(phi(g.bracket_basis(i, j)), k.bracket(images[i], images[j]))
        if not is_zero(d):
            return VerificationReport.failed(prop, (i, j), d, "phi[u,v] - [phi u, phi v]")
    commute = phi.matrix @ g.alpha - k.alpha @ phi.matrix
    for j in range(g.dim):
        if not is_zero(commute.col(j)):
            return VerificationReport.failed(prop, (j,), commute.col(j), "phi alpha - beta phi")
    return VerificationReport.ok(prop)


def is_morphism(g: HomLieAlgebra, k: HomLieAlgebra, phi: LinearMap) -> bool:
    return morphism_report(g, k, phi).holds


def graph_basis(phi: LinearMap) -> list[Vector]:
    """Vectors ``(e_i, phi(e_i))`` spanning the graph inside the direct sum."""
    n = phi.source_dim
    return [unit_vector(n, i) + phi.matrix.col(i) for i in range(n)]


def graph_is_subalgebra(g: HomLieAlgebra, k: HomLieAlgebra, phi: LinearMap) -> bool:
    _check_map(g, k, phi)
    return is_subalgebra(direct_sum(g, k), graph_basis(phi))


def is_subalgebra(g: HomLieAlgebra, h_basis: Sequence[Sequence]) -> bool:
    vecs = [vector(v) for v in h_basis]
    for v in vecs:
        if len(v) != g.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in an algebra of dimension {g.dim}")
    h = Subspace.span(vecs, g.dim)
    if not all(h.contains(g.twist(v)) for v in h.basis):
        return False
    return all(h.contains(g.bracket(u, v)) for u, v in itertools.combinations(h.basis, 2))


def center(g: HomLieAlgebra) -> Subspace:
    """Elements ``u`` with ``[e_i, u] = 0`` for every basis vector."""
    n = g.dim
    if n == 0:
        return Subspace.zero(0)
    return kernel(vstack(*[g.ad(unit_vector(n, i)) for i in range(n)]))

