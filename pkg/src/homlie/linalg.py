"""
Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; vectors are tuples of Fractions;
matrices are immutable row-major grids.  Subspaces are stored by their
reduced row echelon basis, so two equal subspaces compare equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from homlie.errors import DimensionMismatch, NotContained, Singular

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(x) -> Fraction:
    """Coerce an int, Fraction or a ``"p"``/``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = _RATIONAL_RE.match(x)
        if m is None:
            raise ValueError(f"not a rational literal: {x!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator in {x!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def format_rational(q: Fraction) -> str:
    # Fraction already keeps lowest terms with a positive denominator
    return str(Fraction(q))


# -- vectors ---------------------------------------------------------------

def vector(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} and {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def is_zero(x: Sequence) -> bool:
    return all(a == 0 for a in x)


def linear_combination(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


# -- matrices --------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix rows")
        return cls(len(rows), cols, tuple(to_rational(a) for r in rows for a in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> Matrix:
        cols = len(columns)
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatch("column length differs from row count")
        return cls(rows, cols, tuple(
            to_rational(columns[j][i]) for i in range(rows) for j in range(cols)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, *values) -> Matrix:
        n = len(values)
        vals = [to_rational(v) for v in values]
        return cls(n, n, tuple(vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.rows else ()

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return is_zero(self.entries)

    def _check_same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> Matrix:
        c = to_rational(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            ocols = [other.col(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for c in ocols:
                    out.append(sum((a * b for a, b in zip(r, c) if a and b), ZERO))
            return Matrix(self.rows, other.cols, tuple(out))
        return self.apply(other)

    def apply(self, x: Sequence) -> Vector:
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} for a {self.shape} matrix")
        return tuple(sum((a * b for a, b in zip(self.row(i), x) if a and b), ZERO)
                     for i in range(self.rows))

    def power(self, k: int) -> Matrix:
        """Non-negative power; negative powers go through :func:`inverse`."""
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            return inverse(self).power(-k)
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(a) for a in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = [[ZERO] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix.from_rows(out, cols=m)


def vstack(*blocks: Matrix) -> Matrix:
    cols = {b.cols for b in blocks}
    if len(cols) > 1:
        raise DimensionMismatch("vstack of matrices with different widths")
    c = cols.pop() if cols else 0
    return Matrix(sum(b.rows for b in blocks), c, tuple(a for b in blocks for a in b.entries))


def determinant(M: Matrix) -> Fraction:
    if not M.is_square:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return ONE
    if n == 1:
        return M.entries[0]
    if n == 2:
        return M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    a = M.tolist()
    det = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        pivot = a[c][c]
        det *= pivot
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = f / pivot
                row_c = a[c]
                row_r = a[r]
                for k in range(c, n):
                    row_r[k] -= f * row_c[k]
    return det


# -- elimination -----------------------------------------------------------

def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns the nonzero rows and their pivot columns."""
    a = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        inv = ONE / pr[c]
        if inv != 1:
            for k in range(c, ncols):
                if pr[k]:
                    pr[k] *= inv
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    ri = a[i]
                    for k in range(c, ncols):
                        if pr[k]:
                            ri[k] -= f * pr[k]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(M: Matrix) -> int:
    return len(rref(M.tolist(), M.cols)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim stored by its reduced row echelon basis."""

    ambient_dim: int
    basis: tuple  # tuple of Vectors, canonical rref rows

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
        vecs = [vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
        rows, _ = rref(vecs, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(k for k, a in enumerate(v) if a != 0) for v in self.basis]

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing the pivot coordinates of this basis."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        out = list(vector(v))
        for b, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                for k, a in enumerate(b):
                    if a:
                        out[k] -= c * a
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return is_zero(self.reduce(v))

    __contains__ = contains

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces of different ambient spaces")
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def intersection(self, other: Subspace) -> Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces of different ambient spaces")
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        # solve sum a_i x_i = sum b_j y_j
        cols = list(self.basis) + [vscale(-1, w) for w in other.basis]
        K = kernel(Matrix.from_columns(cols, self.ambient_dim))
        vecs = [linear_combination(k[:self.dim], self.basis, self.ambient_dim) for k in K.basis]
        return Subspace.span(vecs, self.ambient_dim)

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in this basis; raises NotContained if ``v`` is outside."""
        if not self.contains(v):
            raise NotContained("vector is not in the subspace")
        v = vector(v)
        return tuple(v[p] for p in self.pivots)

    def as_matrix(self) -> Matrix:
        """Basis vectors as columns."""
        return Matrix.from_columns(self.basis, self.ambient_dim)

    def complement_in(self, larger: Subspace) -> list[Vector]:
        """Canonical vectors of ``larger`` spanning a complement of this subspace.

        Each vector of ``larger`` is reduced modulo self and the remainders are
        brought to echelon form, so the result depends only on the two subspaces.
        """
        remainders = [self.reduce(v) for v in larger.basis]
        rows, _ = rref(remainders, self.ambient_dim)
        return [tuple(r) for r in rows]


def kernel(M: Matrix) -> Subspace:
    rows, pivots = rref(M.tolist(), M.cols)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * M.cols
        x[f] = ONE
        for r, p in zip(rows, pivots):
            x[p] = -r[f]
        basis.append(x)
    return Subspace.span(basis, M.cols)


def image(M: Matrix) -> Subspace:
    """Column space."""
    return Subspace.span(M.columns(), M.rows)


def inverse(M: Matrix) -> Matrix:
    if not M.is_square:
        raise DimensionMismatch(f"inverse of a {M.rows}x{M.cols} matrix")
    n = M.rows
    aug = [list(M.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise Singular(f"matrix has rank {len([p for p in pivots if p < n])} < {n}")
    return Matrix.from_rows([r[n:] for r in rows[:n]], cols=n)


def fixed_space(M: Matrix) -> Subspace:
    if not M.is_square:
        raise DimensionMismatch("fixed space of a non-square matrix")
    return kernel(M - Matrix.identity(M.rows))


def quotient_dim(Z: Subspace, B: Subspace) -> int:
    if Z.ambient_dim != B.ambient_dim:
        raise DimensionMismatch("subspaces of different ambient spaces")
    for b in B.basis:
        if not Z.contains(b):
            raise NotContained("a basis vector of the subspace lies outside the ambient subspace")
    return Z.dim - B.dim
