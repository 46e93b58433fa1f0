"""Shared random generators for the tests."""

import random
from fractions import Fraction

from homlie.cochains import Cochain
from homlie.linalg import Matrix, linear_combination


def rand_matrix(rng: random.Random, rows: int, cols: int, lo=-3, hi=3, density=1.0) -> Matrix:
    return Matrix.from_rows(
        [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)],
        cols=cols)


def rand_combination(rng: random.Random, basis, n: int, lo=-3, hi=3):
    coeffs = [Fraction(rng.randint(lo, hi)) for _ in basis]
    return linear_combination(coeffs, basis, n)


def rand_cochain_in(rng, space, n, m, k):
    """Random element of a HomCochainSpace (a combination of its basis)."""
    coords = rand_combination(rng, [f.to_coords(n) for f in space.basis], len(space.space.basis[0])
                              if space.basis else 0)
    return Cochain.from_coords(coords, n, k, m) if space.basis else Cochain.zero(k, m)


# -- an independent dense model, read straight from the shipped JSON ---------

def raw_structure(name: str):
    """``(n, c, alpha)`` with ``c[i][j]`` the full bracket vector, built without the library parser."""
    import json
    from importlib.resources import files

    data = json.loads(files("homlie").joinpath("data", f"{name}.json").read_text())
    n = data["dim"]
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for b in data["brackets"]:
        v = [Fraction(x) for x in b["coeffs"]]
        c[b["i"]][b["j"]] = v
        c[b["j"]][b["i"]] = [-x for x in v]
    alpha = [[Fraction(x) for x in row] for row in data["alpha"]]
    return n, c, alpha


def dense_bracket(c, x, y):
    n = len(x)
    out = [Fraction(0)] * n
    for i in range(n):
        for j in range(n):
            if x[i] and y[j]:
                for k in range(n):
                    out[k] += x[i] * y[j] * c[i][j][k]
    return out


def dense_apply(M, x):
    return [sum((M[r][s] * x[s] for s in range(len(x))), Fraction(0)) for r in range(len(M))]
