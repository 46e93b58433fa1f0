"""
Twisted derivations of a multiplicative hom-Lie algebra.

An alpha^k-derivation is an operator D with ``D alpha = alpha D`` and
``D[u,v] = [Du, alpha^k v] + [alpha^k u, Dv]``.  Operators are handled as
vectors of length n*n in column-major order: coordinate ``j*n + i`` is the
i-th component of ``D e_j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from homlie.algebra import (
    HomLieAlgebra, VerificationReport, alpha_power, is_multiplicative, is_regular,
)
from homlie.errors import DimensionMismatch, NotMultiplicative, NotRegular
from homlie.linalg import (
    Matrix, Subspace, ZERO, fixed_space, is_zero, kernel, vadd, vsub,
)


def operator_to_vector(D: Matrix) -> tuple:
    return tuple(a for j in range(D.cols) for a in D.col(j))


def vector_to_operator(x, n: int) -> Matrix:
    if len(x) != n * n:
        raise DimensionMismatch(f"{len(x)} coordinates for an {n}x{n} operator")
    return Matrix.from_columns([x[j * n:(j + 1) * n] for j in range(n)], n)


@dataclass(frozen=True)
class GradedDerivationSpace:
    k: int
    n: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def matrices(self) -> list[Matrix]:
        return [vector_to_operator(v, self.n) for v in self.space.basis]

    def contains(self, D: Matrix) -> bool:
        return self.space.contains(operator_to_vector(D))


def _check_grade(g: HomLieAlgebra, k: int):
    if not is_multiplicative(g):
        raise NotMultiplicative("derivations are defined for multiplicative hom-Lie algebras")
    if k < 0 and not is_regular(g):
        raise NotRegular(f"alpha^{k}-derivations need a regular algebra")


def _derivation_defects(g: HomLieAlgebra, ak: Matrix, D: Matrix):
    """Yield (indices, defect, note) for every violated condition, in a fixed order."""
    n = g.dim
    comm = D @ g.alpha - g.alpha @ D
    for j in range(n):
        yield (j,), comm.col(j), "D alpha - alpha D"
    De = [D.col(i) for i in range(n)]
    Ae = [ak.col(i) for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        lhs = D.apply(g.bracket_basis(i, j))
        rhs = vadd(g.bracket(De[i], Ae[j]), g.bracket(Ae[i], De[j]))
        yield (i, j), vsub(lhs, rhs), "D[u,v] - [Du, a^k v] - [a^k u, Dv]"


def derivation_space(g: HomLieAlgebra, k: int) -> GradedDerivationSpace:
    _check_grade(g, k)
    n = g.dim
    ak = alpha_power(g, k)
    # each condition is linear in D: columns are the residuals of the unit operators
    columns = []
    for p in range(n * n):
        E = vector_to_operator(tuple(1 if q == p else 0 for q in range(n * n)), n)
        residual = []
        for _, d, _ in _derivation_defects(g, ak, E):
            residual.extend(d)
        columns.append(residual)
    rows = len(columns[0]) if columns else 0
    space = kernel(Matrix.from_columns(columns, rows)) if n else Subspace.zero(0)
    return GradedDerivationSpace(k, n, space)


def inner_derivation_space(g: HomLieAlgebra, k: int) -> GradedDerivationSpace:
    """Span of ``v -> [alpha^(k-1) v, u]`` over alpha-fixed u."""
    if k <= 0 and not is_regular(g):
        raise NotRegular(f"inner alpha^{k}-derivations use alpha^{k - 1}, which needs a regular algebra")
    n = g.dim
    a = alpha_power(g, k - 1)
    ops = []
    for u in fixed_space(g.alpha).basis:
        cols = [g.bracket(a.col(j), u) for j in range(n)]
        ops.append(operator_to_vector(Matrix.from_columns(cols, n)))
    return GradedDerivationSpace(k, n, Subspace.span(ops, n * n))


def is_derivation(g: HomLieAlgebra, k: int, D: Matrix) -> VerificationReport:
    _check_grade(g, k)
    if D.shape != (g.dim, g.dim):
        raise DimensionMismatch(f"operator of shape {D.shape} on an algebra of dimension {g.dim}")
    prop = f"alpha^{k}-derivation"
    for idx, d, note in _derivation_defects(g, alpha_power(g, k), D):
        if not is_zero(d):
            return VerificationReport.failed(prop, idx, d, note)
    return VerificationReport.ok(prop)


def commutator(D: Matrix, Dp: Matrix) -> Matrix:
    if not D.is_square or D.shape != Dp.shape:
        raise DimensionMismatch(f"commutator of shapes {D.shape} and {Dp.shape}")
    return D @ Dp - Dp @ D


def derivation_extension(g: HomLieAlgebra, D: Matrix) -> HomLieAlgebra:
    """g + Q.D with ``[D, u] = D(u)`` and twist ``diag(alpha, 1)``; the slot for D is the last index."""
    n = g.dim
    if D.shape != (n, n):
        raise DimensionMismatch(f"operator of shape {D.shape} on an algebra of dimension {n}")
    brackets = {}
    for (i, j), v in g.structure.items():
        brackets[(i, j)] = tuple(v) + (ZERO,)
    for i in range(n):
        # [e_i, D] = -D(e_i)
        col = D.col(i)
        if not is_zero(col):
            brackets[(i, n)] = tuple(-a for a in col) + (ZERO,)
    alpha = Matrix.from_rows(
        [list(g.alpha.row(i)) + [0] for i in range(n)] + [[0] * n + [1]], cols=n + 1)
    labels = g.labels + ("D",)
    if len(set(labels)) != len(labels):
        labels = None
    return HomLieAlgebra(n + 1, brackets, alpha, labels)
