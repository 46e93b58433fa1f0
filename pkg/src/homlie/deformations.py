"""
Linear deformations ``[u,v]_t = [u,v] + t*omega(u,v)`` and hom-Nijenhuis operators.

omega is a g-valued 2-cochain (a :class:`~homlie.cochains.Cochain` with
``module_dim == dim g``) commuting with alpha.  A hom-Nijenhuis operator N
yields ``omega = [.,.]_N`` and the deformation it generates is trivialised by
``T_t = Id + t N``; this is checked coefficient-wise in t.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from homlie.algebra import (
    Counterexample, HomLieAlgebra, VerificationReport, is_regular,
)
from homlie.cochains import Cochain
from homlie.cohomology import coboundary_apply, hom_cochain_defect
from homlie.representations import adjoint_representation
from homlie.errors import (
    DimensionMismatch, NotCommutingWithAlpha, NotHomCochain, NotNijenhuis, NotRegular,
)
from homlie.linalg import Matrix, is_zero, to_rational, unit_vector, vadd, vscale, vsub


@dataclass(frozen=True)
class DeformationDatum:
    omega: Cochain
    closed: bool       # omega(alpha u,[v,w]) + [alpha u, omega(v,w)] + c.p. = 0
    hom_jacobi: bool   # omega(alpha u, omega(v,w)) + c.p. = 0

    @property
    def generates_deformation(self) -> bool:
        return self.closed and self.hom_jacobi


@dataclass(frozen=True)
class NijenhuisCandidate:
    N: Matrix

    def transform(self, t) -> Matrix:
        """``T_t = Id + t N``."""
        return Matrix.identity(self.N.rows) + self.N.scale(t)


class _AlphaModule:
    def __init__(self, g: HomLieAlgebra):
        self.module_dim = g.dim
        self.A = g.alpha


def _check_omega(g: HomLieAlgebra, omega: Cochain):
    if omega.degree != 2 or omega.module_dim != g.dim:
        raise DimensionMismatch(f"omega must be a degree-2 cochain with values in Q^{g.dim}")
    if omega.support_dim() > g.dim:
        raise DimensionMismatch("omega indices exceed the algebra dimension")
    bad = hom_cochain_defect(g, _AlphaModule(g), omega)
    if bad is not None:
        raise NotHomCochain(f"alpha omega(u,v) != omega(alpha u, alpha v) at {bad[0]}")


def _check_commutes(g: HomLieAlgebra, N: Matrix):
    if N.shape != (g.dim, g.dim):
        raise DimensionMismatch(f"operator of shape {N.shape} on an algebra of dimension {g.dim}")
    if not (N @ g.alpha - g.alpha @ N).is_zero():
        raise NotCommutingWithAlpha("N alpha != alpha N")


def _omega_eval(omega: Cochain, x, y):
    return omega.evaluate([x, y])


def closedness_defect(g: HomLieAlgebra, omega: Cochain, i: int, j: int, k: int):
    """omega(alpha u,[v,w]) + [alpha u, omega(v,w)] + c.p. on (e_i, e_j, e_k)."""
    n = g.dim
    e = [unit_vector(n, a) for a in (i, j, k)]
    total = (Fraction(0),) * n
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        au = g.twist(e[a])
        total = vadd(total, _omega_eval(omega, au, g.bracket(e[b], e[c])))
        total = vadd(total, g.bracket(au, _omega_eval(omega, e[b], e[c])))
    return total


def omega_jacobi_defect(g: HomLieAlgebra, omega: Cochain, i: int, j: int, k: int):
    """omega(alpha u, omega(v,w)) + c.p. on (e_i, e_j, e_k)."""
    n = g.dim
    e = [unit_vector(n, a) for a in (i, j, k)]
    total = (Fraction(0),) * n
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        total = vadd(total, _omega_eval(omega, g.twist(e[a]), _omega_eval(omega, e[b], e[c])))
    return total


def _first_triple_defect(g, omega, fn):
    for i, j, k in itertools.combinations(range(g.dim), 3):
        d = fn(g, omega, i, j, k)
        if not is_zero(d):
            return (i, j, k), d
    return None


def generates_deformation(g: HomLieAlgebra, omega: Cochain) -> VerificationReport:
    prop = "generates deformation"
    if not is_regular(g):
        raise NotRegular("deformations are considered for regular hom-Lie algebras")
    _check_omega(g, omega)
    bad1 = _first_triple_defect(g, omega, closedness_defect)
    # same condition through the alpha^-1-adjoint coboundary
    d_omega = coboundary_apply(g, adjoint_representation(g, -1, check=False), omega)
    if (bad1 is None) != d_omega.is_zero():
        raise AssertionError("closedness of omega disagrees with its ad_{-1} coboundary")
    if bad1 is not None:
        return VerificationReport(prop, False, Counterexample(bad1[0], bad1[1], "omega not closed"))
    bad2 = _first_triple_defect(g, omega, omega_jacobi_defect)
    if bad2 is not None:
        return VerificationReport(prop, False, Counterexample(bad2[0], bad2[1], "omega fails hom-Jacobi"))
    return VerificationReport.ok(prop)


def deformed_bracket_at(g: HomLieAlgebra, omega: Cochain, t) -> HomLieAlgebra:
    if not is_regular(g):
        raise NotRegular("deformations are considered for regular hom-Lie algebras")
    _check_omega(g, omega)
    t = to_rational(t)
    brackets = {}
    for i, j in itertools.combinations(range(g.dim), 2):
        brackets[(i, j)] = vadd(g.bracket_basis(i, j), vscale(t, omega.value_at((i, j))))
    return g.with_brackets(brackets)


def _n_bracket(g: HomLieAlgebra, N: Matrix, x, y):
    """[x,y]_N = [Nx,y] + [x,Ny] - N[x,y]."""
    return vsub(vadd(g.bracket(N.apply(x), y), g.bracket(x, N.apply(y))), N.apply(g.bracket(x, y)))


def nijenhuis_bracket(g: HomLieAlgebra, N: Matrix) -> DeformationDatum:
    _check_commutes(g, N)
    n = g.dim
    e = [unit_vector(n, a) for a in range(n)]
    omega = Cochain(2, n, {(i, j): _n_bracket(g, N, e[i], e[j])
                           for i, j in itertools.combinations(range(n), 2)})
    closed = _first_triple_defect(g, omega, closedness_defect) is None
    hj = _first_triple_defect(g, omega, omega_jacobi_defect) is None
    return DeformationDatum(omega, closed, hj)


def is_hom_nijenhuis(g: HomLieAlgebra, N: Matrix) -> VerificationReport:
    _check_commutes(g, N)
    prop = "hom-Nijenhuis"
    n = g.dim
    e = [unit_vector(n, a) for a in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        d = vsub(g.bracket(N.col(i), N.col(j)), N.apply(_n_bracket(g, N, e[i], e[j])))
        if not is_zero(d):
            return VerificationReport.failed(prop, (i, j), d, "[Nu,Nv] - N[u,v]_N")
    return VerificationReport.ok(prop)


def trivialization_coefficients(g: HomLieAlgebra, N: Matrix, i: int, j: int):
    """Coefficients of t^0, t^1, t^2 in ``T_t[u,v]_t`` and in ``[T_t u, T_t v]`` at (e_i, e_j)."""
    n = g.dim
    u, v = unit_vector(n, i), unit_vector(n, j)
    b = g.bracket(u, v)
    w = _n_bracket(g, N, u, v)
    lhs = (b, vadd(w, N.apply(b)), N.apply(w))
    rhs = (b, vadd(g.bracket(N.apply(u), v), g.bracket(u, N.apply(v))),
           g.bracket(N.apply(u), N.apply(v)))
    return lhs, rhs


SAMPLE_TS = (Fraction(1), Fraction(-1), Fraction(2))


def check_trivializes(g: HomLieAlgebra, N: Matrix) -> VerificationReport:
    """``T_t [u,v]_t = [T_t u, T_t v]`` as a polynomial identity in t."""
    report = is_hom_nijenhuis(g, N)
    if not report:
        raise NotNijenhuis(report.describe(g.labels))
    prop = "trivializes"
    n = g.dim
    for i, j in itertools.combinations(range(n), 2):
        lhs, rhs = trivialization_coefficients(g, N, i, j)
        for p in range(3):
            d = vsub(lhs[p], rhs[p])
            if not is_zero(d):
                return VerificationReport.failed(prop, (i, j), d, f"coefficient of t^{p}")
    # sampled cross-check; a quadratic identity in t is fixed by three points
    cand = NijenhuisCandidate(N)
    omega = nijenhuis_bracket(g, N).omega
    for t in SAMPLE_TS:
        T = cand.transform(t)
        for i, j in itertools.combinations(range(n), 2):
            bt = vadd(g.bracket_basis(i, j), vscale(t, omega.value_at((i, j))))
            d = vsub(T.apply(bt), g.bracket(T.col(i), T.col(j)))
            if not is_zero(d):
                raise AssertionError(f"coefficient identities hold but t={t} fails at {(i, j)}")
    return VerificationReport.ok(prop)
