import itertools
import random
from fractions import Fraction

import pytest
import sympy

from homlie import corpus
from homlie.algebra import HomLieAlgebra, center, verify_hom_jacobi
from homlie.cochains import Cochain, cochain_space_dim
from homlie.cohomology import (
    coboundary_apply, coboundary_full_matrix, coboundary_matrix, cohomology,
    d_squared_is_zero, hom_cochain_space, is_hom_cochain,
)
from homlie.errors import DegreeOutOfRange, NotHomCochain
from homlie.linalg import Matrix, fixed_space
from homlie.representations import adjoint_representation, trivial_representation

from helpers import dense_apply, dense_bracket, raw_structure

REPS = ("trivial", -1, 0, 1)


def rep_of(g, which):
    return trivial_representation(g) if which == "trivial" else adjoint_representation(g, which)


# -- brute-force oracle: multilinear expansion over ordered tuples -----------

def _sign(seq):
    inv = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


def _oracle_value(f, args, m):
    """f(args) by expanding every argument in the standard basis."""
    n = len(args[0]) if args else 0
    out = [Fraction(0)] * m
    for idx in itertools.product(range(n), repeat=len(args)):
        coef = Fraction(1)
        for a, i in zip(args, idx):
            coef *= a[i]
            if not coef:
                break
        if not coef or len(set(idx)) < len(idx):
            continue
        key = tuple(sorted(idx))
        val = f.values.get(key)
        if val is None:
            continue
        s = _sign(idx)
        out = [o + s * coef * v for o, v in zip(out, val)]
    return out


def oracle_coboundary(name, which, f):
    n, c, alpha = raw_structure(name)
    k, m = f.degree, f.module_dim
    A = sympy.Matrix(alpha)
    if which == "trivial":
        def rho(x, v):
            return [Fraction(0)] * m
    else:
        As = A ** which
        As = [[Fraction(int(sympy.fraction(a)[0]), int(sympy.fraction(a)[1])) for a in row]
              for row in As.tolist()]

        def rho(x, v):
            return dense_bracket(c, dense_apply(As, x), v)
    Ak = [[Fraction(int(sympy.fraction(a)[0]), int(sympy.fraction(a)[1])) for a in row]
          for row in (A ** k).tolist()]
    e = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    result = {}
    for J in itertools.combinations(range(n), k + 1):
        u = [e[j] for j in J]
        out = [Fraction(0)] * m
        for i in range(k + 1):
            rest = u[:i] + u[i + 1:]
            t = rho(dense_apply(Ak, u[i]), _oracle_value(f, rest, m))
            out = [o + (-1) ** i * x for o, x in zip(out, t)]
        for i, j in itertools.combinations(range(k + 1), 2):
            rest = [dense_apply(alpha, u[r]) for r in range(k + 1) if r not in (i, j)]
            t = _oracle_value(f, [dense_bracket(c, u[i], u[j])] + rest, m)
            # (-1)^(i+j) with 0-based positions matches the 1-based formula
            out = [o + (-1) ** (i + j) * x for o, x in zip(out, t)]
        result[J] = out
    return result


@pytest.mark.parametrize("name", corpus.NAMES)
@pytest.mark.parametrize("which", REPS)
def test_coboundary_matches_oracle(name, which):
    g = corpus.load(name)
    rep = rep_of(g, which)
    rng = random.Random(f"{name}{which}")
    for k in range(g.dim):
        space = hom_cochain_space(g, rep, k)
        for _ in range(3):
            f = Cochain.zero(k, rep.module_dim)
            for b in space.basis:
                f = f + b.scale(rng.randint(-3, 3))
            df = coboundary_apply(g, rep, f)
            for J, v in oracle_coboundary(name, which, f).items():
                assert list(df.value_at(J)) == v


class TestHomCochainSpace:
    def test_trivial_degree_zero(self, named_algebra):
        _, g = named_algebra
        assert hom_cochain_space(g, trivial_representation(g), 0).dim == 1

    @pytest.mark.parametrize("s", [-1, 0, 1])
    def test_identity_twist_gives_everything(self, s):
        g = corpus.load("A1")
        rep = adjoint_representation(g, s)
        for k in range(3):
            assert hom_cochain_space(g, rep, k).dim == cochain_space_dim(2, k, 2)

    def test_a3_trivial_degree_one(self):
        g = corpus.load("A3")
        space = hom_cochain_space(g, trivial_representation(g), 1)
        assert space.basis == (Cochain.scalar(1, {(0,): 1}),)

    def test_basis_elements_are_hom_cochains(self, named_algebra):
        _, g = named_algebra
        for which in REPS:
            rep = rep_of(g, which)
            for k in range(g.dim + 1):
                for f in hom_cochain_space(g, rep, k).basis:
                    assert is_hom_cochain(g, rep, f)

    def test_degree_out_of_range(self):
        g = corpus.load("A2")
        with pytest.raises(DegreeOutOfRange):
            hom_cochain_space(g, trivial_representation(g), 3)


class TestCoboundary:
    def test_zero(self):
        g = corpus.load("S3")
        rep = adjoint_representation(g, 0)
        assert coboundary_apply(g, rep, Cochain.zero(1, 3)).is_zero()

    def test_a2_trivial(self):
        g = corpus.load("A2")
        triv = trivial_representation(g)
        df = coboundary_apply(g, triv, Cochain.scalar(1, {(1,): 1}))
        assert df == Cochain.scalar(2, {(0, 1): -1})
        assert coboundary_apply(g, triv, Cochain.scalar(1, {(0,): 1})).is_zero()
        assert coboundary_matrix(g, triv, 1) == Matrix.from_rows([[0, -1]])

    def test_abelian_trivial_is_zero(self):
        g = corpus.load("A1")
        for k in range(3):
            assert coboundary_full_matrix(g, trivial_representation(g), k).is_zero()

    def test_rejects_non_hom_cochain(self):
        g = corpus.load("A3")
        with pytest.raises(NotHomCochain):
            coboundary_apply(g, trivial_representation(g), Cochain.scalar(1, {(1,): 1}))

    def test_image_of_hom_cochain_is_hom_cochain(self, named_algebra):
        _, g = named_algebra
        for which in REPS:
            rep = rep_of(g, which)
            for k in range(g.dim):
                for f in hom_cochain_space(g, rep, k).basis:
                    assert is_hom_cochain(g, rep, coboundary_apply(g, rep, f))


class TestCohomology:
    def test_h0_trivial(self, named_algebra):
        _, g = named_algebra
        assert cohomology(g, trivial_representation(g), 0).dim_H == 1

    def test_a2_h1_trivial(self):
        g = corpus.load("A2")
        res = cohomology(g, trivial_representation(g), 1)
        assert res.dim_H == 1
        assert res.representatives == (Cochain.scalar(1, {(0,): 1}),)

    def test_s3_h1_adjoint(self):
        g = corpus.load("S3")
        assert cohomology(g, adjoint_representation(g, -1), 1).dim_H == 0

    def test_lie_algebra_betti_numbers(self):
        # classical values for alpha = id
        for name, betti in {"A1": [1, 2, 1], "S3": [1, 0, 0, 1], "H3": [1, 2, 2, 1]}.items():
            g = corpus.load(name)
            assert [cohomology(g, trivial_representation(g), k).dim_H for k in range(g.dim + 1)] == betti

    def test_euler_characteristic(self, named_algebra):
        # alternating sums of cochain and cohomology dimensions agree
        _, g = named_algebra
        for which in REPS:
            rep = rep_of(g, which)
            dims = [hom_cochain_space(g, rep, k).dim for k in range(g.dim + 1)]
            hs = [cohomology(g, rep, k).dim_H for k in range(g.dim + 1)]
            assert sum((-1) ** k * d for k, d in enumerate(dims)) == sum((-1) ** k * h for k, h in enumerate(hs))

    def test_h0_adjoint_is_fixed_center(self, named_algebra):
        _, g = named_algebra
        expected = center(g).intersection(fixed_space(g.alpha)).dim
        assert cohomology(g, adjoint_representation(g, -1), 0).dim_H == expected

    def test_beyond_top_degree(self):
        g = corpus.load("A2")
        res = cohomology(g, trivial_representation(g), 5)
        assert (res.dim_Z, res.dim_B, res.dim_H) == (0, 0, 0)
        with pytest.raises(DegreeOutOfRange):
            cohomology(g, trivial_representation(g), -1)

    def test_representatives_are_closed(self, named_algebra):
        _, g = named_algebra
        rep = adjoint_representation(g, -1)
        for k in range(g.dim + 1):
            res = cohomology(g, rep, k)
            assert len(res.representatives) == res.dim_H
            for f in res.representatives:
                assert coboundary_apply(g, rep, f).is_zero()


class TestDSquared:
    def test_corpus(self, named_algebra):
        _, g = named_algebra
        for which in REPS:
            assert d_squared_is_zero(g, rep_of(g, which), g.dim)

    def test_corrupted_constants(self):
        # breaks the Jacobi identity, so d^2 on the trivial complex must fail somewhere
        bad = HomLieAlgebra.from_brackets(4, {(0, 1): (0, 0, 1, 0), (2, 3): (1, 0, 0, 0), (1, 2): (0, 0, 0, 1)})
        assert not verify_hom_jacobi(bad)
        report = d_squared_is_zero(bad, trivial_representation(bad), 4)
        assert not report
        assert "degree" in report.counterexample.note
