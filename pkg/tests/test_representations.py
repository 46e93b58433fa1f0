import random
from fractions import Fraction

import pytest

from homlie import corpus
from homlie.algebra import (
    HomLieAlgebra, direct_sum, is_multiplicative, verify_hom_jacobi,
)
from homlie.cochains import Cochain
from homlie.cohomology import coboundary_apply, hom_cochain_space
from homlie.errors import (
    InvalidRepresentation, NotCoboundary, NotHomCochain, NotMultiplicative, NotRegular,
)
from homlie.linalg import Matrix
from homlie.representations import (
    Representation, adjoint_representation, central_extension, central_extension_isomorphism,
    extension_verifies, is_representation, parse_rep_spec, semidirect_product,
    trivial_representation,
)

from helpers import rand_matrix


def test_trivial_everywhere(named_algebra):
    _, g = named_algebra
    rep = trivial_representation(g)
    assert rep.module_dim == 1 and rep.A == Matrix.identity(1)
    assert is_representation(g, rep.rho, rep.A)


@pytest.mark.parametrize("s", [-2, -1, 0, 1, 2])
def test_adjoint_everywhere(named_algebra, s):
    _, g = named_algebra
    rep = adjoint_representation(g, s)
    assert is_representation(g, rep.rho, rep.A)


def test_adjoint_values():
    s3 = corpus.load("S3")
    assert adjoint_representation(s3, 0).rho[0] == Matrix.diag(0, 2, -2)
    a3 = corpus.load("A3")
    # rho(e2) e1 = [alpha^-1 e2, e1] = -(1/2) e2
    assert adjoint_representation(a3, -1).rho[1].col(0) == (0, Fraction(-1, 2))
    a1 = corpus.load("A1")
    assert all(R.is_zero() for R in adjoint_representation(a1, 1).rho)


def test_a3_identity_action_fails():
    a3 = corpus.load("A3")
    rho = (Matrix.identity(2), Matrix.identity(2))
    report = is_representation(a3, rho, Matrix.identity(2))
    assert not report
    with pytest.raises(InvalidRepresentation):
        Representation(a3, 2, rho, Matrix.identity(2))


def test_guards():
    bad = HomLieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)}, Matrix.diag(1, 1, 2))
    with pytest.raises(NotMultiplicative):
        trivial_representation(bad)
    with pytest.raises(NotMultiplicative):
        adjoint_representation(bad, 0)
    singular = HomLieAlgebra.from_brackets(2, {}, Matrix.diag(1, 0))
    with pytest.raises(NotRegular):
        adjoint_representation(singular, -1)
    assert adjoint_representation(singular, 1)


def test_parse_rep_spec():
    g = corpus.load("A3")
    assert parse_rep_spec(g, "trivial").module_dim == 1
    assert parse_rep_spec(g, "adjoint:-1").rho == adjoint_representation(g, -1).rho
    with pytest.raises(ValueError):
        parse_rep_spec(g, "coadjoint")


class TestSemidirect:
    def test_trivial(self):
        a2 = corpus.load("A2")
        h = semidirect_product(a2, trivial_representation(a2))
        assert h.dim == 3 and dict(h.structure) == {(0, 1): (0, 1, 0)}

    @pytest.mark.parametrize("name, dim", [("A2", 4), ("S3", 6)])
    def test_adjoint(self, name, dim):
        g = corpus.load(name)
        h = semidirect_product(g, adjoint_representation(g, 0))
        assert h.dim == dim
        assert extension_verifies(h)

    def test_strict_rejects_invalid(self):
        a3 = corpus.load("A3")
        rep = Representation(a3, 2, (Matrix.identity(2),) * 2, Matrix.identity(2), check=False)
        with pytest.raises(InvalidRepresentation):
            semidirect_product(a3, rep)
        assert not extension_verifies(semidirect_product(a3, rep, strict=False))

    def test_iff_on_random_actions(self, named_algebra):
        _, g = named_algebra
        rng = random.Random(g.dim)
        for _ in range(15):
            m = rng.randint(1, 2)
            rho = tuple(rand_matrix(rng, m, m, -1, 1, density=0.4) for _ in range(g.dim))
            A = rand_matrix(rng, m, m, -1, 2)
            rep = Representation(g, m, rho, A, check=False)
            valid = bool(is_representation(g, rho, A))
            assert extension_verifies(semidirect_product(g, rep, strict=False)) == valid


class TestCentralExtension:
    def test_a1_to_heisenberg(self):
        h = central_extension(corpus.load("A1"), Cochain.scalar(2, {(0, 1): 1}))
        assert h.structurally_equal(corpus.load("H3"))

    def test_zero_cocycle(self):
        a2 = corpus.load("A2")
        h = central_extension(a2, Cochain.zero(2, 1))
        assert dict(h.structure) == {(0, 1): (0, 1, 0)} and h.dim == 3

    def test_a2_closed(self):
        h = central_extension(corpus.load("A2"), Cochain.scalar(2, {(0, 1): 1}))
        assert extension_verifies(h)

    def test_not_hom_cochain(self):
        with pytest.raises(NotHomCochain):
            central_extension(corpus.load("H3q"), Cochain.scalar(2, {(0, 1): 1}))

    def test_iff_with_non_closed_cochains(self):
        # A2 + a one-dimensional abelian summand: d theta(e1,e2,e3) = -theta(e2,e3)
        g = direct_sum(corpus.load("A2"), HomLieAlgebra.from_brackets(1))
        triv = trivial_representation(g)
        rng = random.Random(7)
        seen = set()
        for _ in range(40):
            vals = {t: rng.randint(-2, 2) for t in ((0, 1), (0, 2), (1, 2))}
            theta = Cochain.scalar(2, vals)
            closed = coboundary_apply(g, triv, theta).is_zero()
            assert closed == (vals[(1, 2)] == 0)
            assert extension_verifies(central_extension(g, theta)) == closed
            seen.add(closed)
        assert seen == {True, False}


class TestIsomorphism:
    def test_identity(self):
        a2 = corpus.load("A2")
        theta = Cochain.scalar(2, {(0, 1): 3})
        fh, report = central_extension_isomorphism(a2, theta, theta, Cochain.zero(1, 1))
        assert fh.matrix == Matrix.identity(3) and report

    def test_coboundary_shift(self):
        a2 = corpus.load("A2")
        f = Cochain.scalar(1, {(1,): 1})
        dtf = coboundary_apply(a2, trivial_representation(a2), f)
        assert dtf == Cochain.scalar(2, {(0, 1): -1})
        fh, report = central_extension_isomorphism(a2, dtf, Cochain.zero(2, 1), f)
        assert report
        assert fh.matrix.row(2) == (0, 1, 1)

    def test_wrong_direction(self):
        a2 = corpus.load("A2")
        f = Cochain.scalar(1, {(1,): 1})
        dtf = coboundary_apply(a2, trivial_representation(a2), f)
        with pytest.raises(NotCoboundary):
            central_extension_isomorphism(a2, Cochain.zero(2, 1), dtf, f)

    def test_f_must_be_alpha_invariant(self):
        with pytest.raises(NotHomCochain):
            central_extension_isomorphism(corpus.load("A3"), Cochain.zero(2, 1), Cochain.zero(2, 1),
                                          Cochain.scalar(1, {(1,): 1}))

    def test_every_hom_cochain_shift(self, named_algebra):
        _, g = named_algebra
        triv = trivial_representation(g)
        for f in hom_cochain_space(g, triv, 1).basis:
            theta2 = Cochain.zero(2, 1)
            theta1 = coboundary_apply(g, triv, f)
            _, report = central_extension_isomorphism(g, theta1, theta2, f)
            assert report
