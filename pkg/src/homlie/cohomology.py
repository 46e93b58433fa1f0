"""
Hom-cochain complexes of a multiplicative hom-Lie algebra with values in a
representation ``(V, rho, A)``.

A k-hom-cochain is a skew k-linear ``f: g^k -> V`` with
``A(f(u_1..u_k)) = f(alpha u_1, .., alpha u_k)``.  The coboundary of a
degree-k cochain is

    df(u_1..u_{k+1}) = sum_i (-1)^(i+1) rho(alpha^k u_i) f(.., u_i omitted, ..)
                     + sum_{i<j} (-1)^(i+j) f([u_i, u_j], alpha u_1, .., omitted i and j, .., alpha u_{k+1})

The representation argument is duck-typed: anything with ``module_dim``,
``rho`` (one m x m matrix per basis vector of g) and ``A``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from homlie.algebra import Counterexample, HomLieAlgebra, VerificationReport
from homlie.cochains import Cochain, cochain_space_dim, index_tuples
from homlie.errors import DegreeOutOfRange, DimensionMismatch, NotHomCochain
from homlie.linalg import (
    Matrix, Subspace, Vector, ZERO, determinant, is_zero, kernel, linear_combination,
    quotient_dim, vsub,
)


def _rho_of(rep, x: Vector) -> Matrix:
    m = rep.module_dim
    out = Matrix.zeros(m, m)
    for c, R in zip(x, rep.rho):
        if c:
            out = out + R.scale(c)
    return out


def _check_rep_shapes(g: HomLieAlgebra, rep):
    m = rep.module_dim
    if len(rep.rho) != g.dim:
        raise DimensionMismatch(f"{len(rep.rho)} action matrices for an algebra of dimension {g.dim}")
    if rep.A.shape != (m, m) or any(R.shape != (m, m) for R in rep.rho):
        raise DimensionMismatch(f"representation matrices must be {m}x{m}")


def _check_degree(g: HomLieAlgebra, k: int):
    if not 0 <= k <= g.dim:
        raise DegreeOutOfRange(f"degree {k} outside 0..{g.dim}")


@dataclass(frozen=True)
class HomCochainSpace:
    degree: int
    basis: tuple  # of Cochain
    space: Subspace = field(repr=False)  # same subspace in full coordinates

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim_Z: int
    dim_B: int
    dim_H: int
    representatives: tuple  # of Cochain, closed, independent modulo B
    Z: Subspace = field(repr=False)
    B: Subspace = field(repr=False)


def hom_cochain_space(g: HomLieAlgebra, rep, k: int) -> HomCochainSpace:
    _check_degree(g, k)
    _check_rep_shapes(g, rep)
    n, m, A = g.dim, rep.module_dim, rep.A
    tuples = index_tuples(n, k)
    # det(alpha restricted to rows I, columns J) = coefficient of f(e_I) in f(alpha e_J)
    minors = {(I, J): determinant(g.alpha.submatrix(I, J)) for I in tuples for J in tuples}
    rows = []
    for J in tuples:
        for r in range(m):
            row = []
            for I in tuples:
                for c in range(m):
                    v = (A[r, c] if I == J else ZERO) - (minors[I, J] if r == c else ZERO)
                    row.append(v)
            rows.append(row)
    size = len(tuples) * m
    space = kernel(Matrix.from_rows(rows, cols=size)) if rows else Subspace.full(size)
    basis = tuple(Cochain.from_coords(v, n, k, m) for v in space.basis)
    return HomCochainSpace(k, basis, space)


def hom_cochain_defect(g: HomLieAlgebra, rep, f: Cochain):
    """First increasing tuple J with A f(e_J) != f(alpha e_J), or None."""
    n = g.dim
    cols = [g.alpha.col(j) for j in range(n)]
    for J in index_tuples(n, f.degree):
        lhs = rep.A.apply(f.value_at(J))
        rhs = f.evaluate([cols[j] for j in J])
        d = vsub(lhs, rhs)
        if not is_zero(d):
            return J, d
    return None


def is_hom_cochain(g: HomLieAlgebra, rep, f: Cochain) -> VerificationReport:
    prop = "hom-cochain"
    if f.module_dim != rep.module_dim:
        raise DimensionMismatch(f"cochain values in dimension {f.module_dim}, module has {rep.module_dim}")
    bad = hom_cochain_defect(g, rep, f)
    if bad is None:
        return VerificationReport.ok(prop)
    return VerificationReport.failed(prop, bad[0], bad[1], "A f - f alpha")


def _apply_d(g: HomLieAlgebra, rep, f: Cochain, rho_ak: list) -> Cochain:
    n, k, m = g.dim, f.degree, f.module_dim
    if k + 1 > n:
        return Cochain.zero(k + 1, m)
    alpha_cols = [g.alpha.col(j) for j in range(n)]
    values = {}
    for J in index_tuples(n, k + 1):
        out = [ZERO] * m
        for p, jp in enumerate(J):
            val = f.value_at(J[:p] + J[p + 1:])
            if is_zero(val):
                continue
            term = rho_ak[jp].apply(val)
            sign = -1 if p % 2 else 1
            for a in range(m):
                out[a] += sign * term[a]
        for p, q in itertools.combinations(range(k + 1), 2):
            br = g.bracket_basis(J[p], J[q])
            if is_zero(br):
                continue
            args = [br] + [alpha_cols[J[r]] for r in range(k + 1) if r != p and r != q]
            term = f.evaluate(args)
            sign = -1 if (p + q) % 2 else 1
            for a in range(m):
                out[a] += sign * term[a]
        values[J] = out
    return Cochain(k + 1, m, values)


def _rho_alpha_power(g: HomLieAlgebra, rep, k: int) -> list:
    ak = g.alpha.power(k)
    return [_rho_of(rep, ak.col(j)) for j in range(g.dim)]


def coboundary_apply(g: HomLieAlgebra, rep, f: Cochain, check: bool = True) -> Cochain:
    """The coboundary of ``f``.  With ``check`` the input must be a hom-cochain."""
    _check_rep_shapes(g, rep)
    if f.module_dim != rep.module_dim:
        raise DimensionMismatch(f"cochain values in dimension {f.module_dim}, module has {rep.module_dim}")
    if f.support_dim() > g.dim:
        raise DimensionMismatch("cochain indices exceed the algebra dimension")
    if check:
        bad = hom_cochain_defect(g, rep, f)
        if bad is not None:
            raise NotHomCochain(f"A f != f alpha on basis tuple {bad[0]} (defect {bad[1]})")
    return _apply_d(g, rep, f, _rho_alpha_power(g, rep, f.degree))


def coboundary_full_matrix(g: HomLieAlgebra, rep, k: int) -> Matrix:
    """The coboundary formula on all of ``C^k(g; V)``, in full coordinates on both sides."""
    _check_degree(g, k)
    _check_rep_shapes(g, rep)
    n, m = g.dim, rep.module_dim
    src = cochain_space_dim(n, k, m)
    tgt = cochain_space_dim(n, k + 1, m)
    rho_ak = _rho_alpha_power(g, rep, k)
    cols = []
    for p in range(src):
        e = [ZERO] * src
        e[p] = 1
        df = _apply_d(g, rep, Cochain.from_coords(e, n, k, m), rho_ak)
        cols.append(df.to_coords(n))
    return Matrix.from_columns(cols, tgt)


def coboundary_matrix(g: HomLieAlgebra, rep, k: int) -> Matrix:
    """Columns: the coboundaries of the hom-cochain basis at degree k, in full degree-(k+1) coordinates."""
    _check_degree(g, k)
    space = hom_cochain_space(g, rep, k)
    rho_ak = _rho_alpha_power(g, rep, k)
    tgt = cochain_space_dim(g.dim, k + 1, rep.module_dim)
    cols = [_apply_d(g, rep, f, rho_ak).to_coords(g.dim) for f in space.basis]
    return Matrix.from_columns(cols, tgt)


def cohomology(g: HomLieAlgebra, rep, k: int) -> CohomologyResult:
    if k < 0:
        raise DegreeOutOfRange(f"negative degree {k}")
    n, m = g.dim, rep.module_dim
    if k > n:
        z = Subspace.zero(0)
        return CohomologyResult(k, 0, 0, 0, (), z, z)
    size = cochain_space_dim(n, k, m)
    space = hom_cochain_space(g, rep, k)
    dk = coboundary_matrix(g, rep, k)
    closed = kernel(dk)
    basis_coords = [f.to_coords(n) for f in space.basis]
    Z = Subspace.span([linear_combination(c, basis_coords, size) for c in closed.basis], size)
    if k == 0:
        B = Subspace.zero(size)
    else:
        B = Subspace.span(coboundary_matrix(g, rep, k - 1).columns(), size)
    dim_H = quotient_dim(Z, B)
    reps = tuple(Cochain.from_coords(v, n, k, m) for v in B.complement_in(Z))
    return CohomologyResult(k, Z.dim, B.dim, dim_H, reps, Z, B)


def d_squared_is_zero(g: HomLieAlgebra, rep, max_degree: int) -> VerificationReport:
    """Apply d twice to every hom-cochain basis element of degree 0..max_degree."""
    prop = "d^2 = 0"
    n = g.dim
    for k in range(0, min(max_degree, n) + 1):
        if k + 2 > n:
            continue
        rho_k = _rho_alpha_power(g, rep, k)
        rho_k1 = _rho_alpha_power(g, rep, k + 1)
        for idx, f in enumerate(hom_cochain_space(g, rep, k).basis):
            ddf = _apply_d(g, rep, _apply_d(g, rep, f, rho_k), rho_k1)
            if not ddf.is_zero():
                J, v = next(iter(ddf.values.items()))
                return VerificationReport(prop, False, Counterexample(
                    J, v, f"degree {k}, hom-cochain basis element {idx}"))
    return VerificationReport.ok(prop)
