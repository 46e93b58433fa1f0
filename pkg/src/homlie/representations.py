"""
Representations of multiplicative hom-Lie algebras and the algebras built
from them: semidirect products and central extensions.

A representation on V with respect to ``A`` assigns to each basis vector
``e_i`` a matrix ``rho[i]`` so that

    rho(alpha u) A = A rho(u)
    rho([u, v]) A = rho(alpha u) rho(v) - rho(alpha v) rho(u)
"""

from __future__ import annotations

import itertools
from dataclasses import InitVar, dataclass

from homlie.algebra import (
    HomLieAlgebra, LinearMap, VerificationReport, alpha_power, is_invertible,
    is_multiplicative, is_regular, verify_hom_jacobi,
)
from homlie.cochains import Cochain
from homlie.cohomology import coboundary_apply, hom_cochain_defect
from homlie.errors import (
    DimensionMismatch, InvalidRepresentation, NotCoboundary, NotHomCochain, NotMultiplicative,
    NotRegular,
)
from homlie.linalg import Matrix, ONE, ZERO, block_diag, is_zero, unit_vector, vsub


@dataclass(frozen=True)
class Representation:
    algebra: HomLieAlgebra
    module_dim: int
    rho: tuple  # rho[i] = action of e_i, an m x m Matrix
    A: Matrix
    check: InitVar[bool] = True

    def __post_init__(self, check):
        object.__setattr__(self, "rho", tuple(self.rho))
        _check_shapes(self.algebra, self.rho, self.A, self.module_dim)
        if check:
            report = is_representation(self.algebra, self.rho, self.A)
            if not report:
                raise InvalidRepresentation(report.describe(self.algebra.labels))

    def action(self, x) -> Matrix:
        m = self.module_dim
        out = Matrix.zeros(m, m)
        for c, R in zip(x, self.rho):
            if c:
                out = out + R.scale(c)
        return out


def _check_shapes(g: HomLieAlgebra, rho, A: Matrix, m: int | None = None):
    if m is None:
        m = A.rows
    if len(rho) != g.dim:
        raise DimensionMismatch(f"{len(rho)} action matrices for an algebra of dimension {g.dim}")
    if A.shape != (m, m):
        raise DimensionMismatch(f"A has shape {A.shape}, expected {m}x{m}")
    for i, R in enumerate(rho):
        if R.shape != (m, m):
            raise DimensionMismatch(f"rho[{i}] has shape {R.shape}, expected {m}x{m}")


def is_representation(g: HomLieAlgebra, rho, A: Matrix) -> VerificationReport:
    _check_shapes(g, rho, A)
    prop = "representation"
    m = A.rows

    def act(x):
        out = Matrix.zeros(m, m)
        for c, R in zip(x, rho):
            if c:
                out = out + R.scale(c)
        return out

    twisted = [act(g.alpha.col(i)) for i in range(g.dim)]
    for i in range(g.dim):
        d = twisted[i] @ A - A @ rho[i]
        if not d.is_zero():
            return VerificationReport.failed(prop, (i,), d.entries, "rho(alpha u) A - A rho(u), row-major")
    for i, j in itertools.combinations(range(g.dim), 2):
        d = act(g.bracket_basis(i, j)) @ A - (twisted[i] @ rho[j] - twisted[j] @ rho[i])
        if not d.is_zero():
            return VerificationReport.failed(
                prop, (i, j), d.entries,
                "rho([u,v]) A - rho(alpha u) rho(v) + rho(alpha v) rho(u), row-major")
    return VerificationReport.ok(prop)


def trivial_representation(g: HomLieAlgebra) -> Representation:
    if not is_multiplicative(g):
        raise NotMultiplicative("the trivial representation is defined for multiplicative algebras")
    zero = Matrix.zeros(1, 1)
    return Representation(g, 1, (zero,) * g.dim, Matrix.identity(1))


def adjoint_representation(g: HomLieAlgebra, s: int, check: bool = True) -> Representation:
    """``u -> [alpha^s u, .]`` with ``A = alpha``.

    Negative ``s`` needs a regular algebra; ``s >= 0`` only multiplicativity.
    """
    if s < 0:
        if not is_regular(g):
            raise NotRegular(f"ad_{s} needs a regular algebra")
    elif check and not is_multiplicative(g):
        raise NotMultiplicative(f"ad_{s} needs a multiplicative algebra")
    a_s = alpha_power(g, s)
    rho = tuple(g.ad(a_s.col(i)) for i in range(g.dim))
    return Representation(g, g.dim, rho, g.alpha, check)


def parse_rep_spec(g: HomLieAlgebra, spec: str) -> Representation:
    """``"trivial"`` or ``"adjoint:S"``."""
    spec = spec.strip()
    if spec == "trivial":
        return trivial_representation(g)
    if spec.startswith("adjoint:"):
        return adjoint_representation(g, int(spec.split(":", 1)[1]))
    raise ValueError(f"unknown representation {spec!r}; expected 'trivial' or 'adjoint:S'")


def semidirect_product(g: HomLieAlgebra, rep: Representation, strict: bool = True) -> HomLieAlgebra:
    """``[(u,X),(v,Y)] = ([u,v], rho(u)Y - rho(v)X)`` on g + V with twist ``alpha + A``.

    With ``strict=False`` the bracket is built from unverified data, so the
    converse direction can be observed on the output.
    """
    if rep.algebra is not g and not rep.algebra.structurally_equal(g):
        raise DimensionMismatch("representation belongs to a different algebra")
    if strict:
        report = is_representation(g, rep.rho, rep.A)
        if not report:
            raise InvalidRepresentation(report.describe(g.labels))
    n, m = g.dim, rep.module_dim
    brackets = {}
    for (i, j), v in g.structure.items():
        brackets[(i, j)] = tuple(v) + (ZERO,) * m
    for i in range(n):
        for a in range(m):
            col = rep.rho[i].col(a)
            if not is_zero(col):
                brackets[(i, n + a)] = (ZERO,) * n + tuple(col)
    labels = g.labels + tuple(f"v{a + 1}" for a in range(m))
    if len(set(labels)) != len(labels):
        labels = None
    return HomLieAlgebra(n + m, brackets, block_diag(g.alpha, rep.A), labels)


def _check_scalar_2cochain(g: HomLieAlgebra, theta: Cochain):
    if theta.degree != 2 or theta.module_dim != 1:
        raise DimensionMismatch("expected a scalar-valued 2-cochain")
    if theta.support_dim() > g.dim:
        raise DimensionMismatch("2-cochain indices exceed the algebra dimension")


class _Trivial:
    """Trivial representation data without the multiplicativity gate."""

    def __init__(self, g: HomLieAlgebra):
        self.module_dim = 1
        self.rho = (Matrix.zeros(1, 1),) * g.dim
        self.A = Matrix.identity(1)


def central_extension(g: HomLieAlgebra, theta: Cochain) -> HomLieAlgebra:
    """g + Q with ``[(u,s),(v,t)] = ([u,v], theta(u,v))`` and twist ``alpha + 1``.

    Built for every hom-cochain theta, closed or not.
    """
    _check_scalar_2cochain(g, theta)
    bad = hom_cochain_defect(g, _Trivial(g), theta)
    if bad is not None:
        raise NotHomCochain(f"theta(alpha u, alpha v) != theta(u, v) at {bad[0]}")
    n = g.dim
    brackets = {}
    for i, j in itertools.combinations(range(n), 2):
        brackets[(i, j)] = tuple(g.bracket_basis(i, j)) + (theta.value_at((i, j))[0],)
    labels = g.labels + ("c",)
    if len(set(labels)) != len(labels):
        labels = None
    return HomLieAlgebra(n + 1, brackets, block_diag(g.alpha, Matrix.identity(1)), labels)


def central_extension_isomorphism(g: HomLieAlgebra, theta1: Cochain, theta2: Cochain,
                                  f: Cochain) -> tuple[LinearMap, VerificationReport]:
    """``f_h(u, s) = (u, s + f(u))`` between the extensions by theta1 and theta2.

    Requires ``theta1 - theta2 = d_T f`` with f a scalar 1-hom-cochain.
    """
    if f.degree != 1 or f.module_dim != 1:
        raise DimensionMismatch("f must be a scalar-valued 1-cochain")
    triv = _Trivial(g)
    bad = hom_cochain_defect(g, triv, f)
    if bad is not None:
        raise NotHomCochain(f"f(alpha u) != f(u) at {bad[0]}")
    dTf = coboundary_apply(g, triv, f)
    if not (theta1 - theta2 - dTf).is_zero():
        raise NotCoboundary("theta1 - theta2 is not d_T f")
    h1 = central_extension(g, theta1)
    h2 = central_extension(g, theta2)
    n = g.dim
    rows = [list(unit_vector(n + 1, i)) for i in range(n)]
    rows.append([f.value_at((j,))[0] for j in range(n)] + [ONE])
    fh = LinearMap(n + 1, n + 1, Matrix.from_rows(rows))
    return fh, _check_isomorphism(h1, h2, fh)


def _check_isomorphism(h1: HomLieAlgebra, h2: HomLieAlgebra, fh: LinearMap) -> VerificationReport:
    prop = "isomorphism"
    if not is_invertible(fh.matrix):
        return VerificationReport.failed(prop, (), (), "map is singular")
    comm = fh.matrix @ h1.alpha - h2.alpha @ fh.matrix
    for j in range(h1.dim):
        if not is_zero(comm.col(j)):
            return VerificationReport.failed(prop, (j,), comm.col(j), "f_h alpha - alpha f_h")
    cols = [fh.matrix.col(i) for i in range(h1.dim)]
    for i, j in itertools.combinations(range(h1.dim), 2):
        d = vsub(fh(h1.bracket_basis(i, j)), h2.bracket(cols[i], cols[j]))
        if not is_zero(d):
            return VerificationReport.failed(prop, (i, j), d, "f_h[x,y]_1 - [f_h x, f_h y]_2")
    return VerificationReport.ok(prop)


def extension_verifies(h: HomLieAlgebra) -> bool:
    """Both verifiers: hom-Jacobi and multiplicativity."""
    return bool(verify_hom_jacobi(h)) and bool(is_multiplicative(h))
