"""Exact linear algebra over the rationals.

Vectors are tuples of Fractions.  Matrices are dense and row-major.  All
elimination uses the leftmost pivot column and the smallest available row,
so bases come out the same on every run.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import SubspaceNotContained

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def vec(values) -> tuple:
    return tuple(frac(v) for v in values)


def zero_vec(n: int) -> tuple:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> tuple:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v) -> tuple:
    return tuple(c * a for a in v)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero(v) -> bool:
    return all(a == 0 for a in v)


def normalize(v) -> tuple:
    """Scale v so that its first nonzero coordinate is 1."""
    for a in v:
        if a != 0:
            return tuple(b / a for b in v)
    return tuple(v)


class Matrix:
    """Dense rational matrix."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [[ZERO] * ncols for _ in range(nrows)]
        else:
            rows = [[frac(a) for a in r] for r in rows]
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("matrix entries do not match its shape")
        self.rows = rows

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = list(columns)
        rows = [[c[i] for c in columns] for i in range(nrows)]
        return cls(nrows, len(columns), rows)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [unit_vec(n, i) for i in range(n)])

    @property
    def entries(self):
        return [a for r in self.rows for a in r]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return Matrix(self.ncols, self.nrows, [self.column(j) for j in range(self.ncols)])

    def apply(self, v):
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = [other.column(j) for j in range(other.ncols)]
            return Matrix(self.nrows, other.ncols, [[dot(r, c) for c in cols] for r in self.rows])
        return self.apply(other)

    def __add__(self, other):
        return Matrix(self.nrows, self.ncols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix(self.nrows, self.ncols,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scaled(self, c):
        c = frac(c)
        return Matrix(self.nrows, self.ncols, [[c * a for a in r] for r in self.rows])

    def is_zero(self):
        return all(a == 0 for r in self.rows for a in r)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


def _rows_of(m):
    if isinstance(m, Matrix):
        return [list(r) for r in m.rows], m.ncols
    rows = [[frac(a) for a in r] for r in m]
    return rows, (len(rows[0]) if rows else 0)


def rref(m, ncols=None):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    rows, n = _rows_of(m)
    if ncols is not None:
        n = ncols
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [a / p for a in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(x) for x in rows[:r]], pivots


def rank(m) -> int:
    return len(rref(m)[1])


def kernel_basis(m, ncols=None):
    """Basis of the right kernel, first nonzero coordinate of each vector is 1."""
    rows, n = _rows_of(m)
    if ncols is not None:
        n = ncols
    if not rows:
        return [unit_vec(n, i) for i in range(n)]
    red, pivots = rref(rows, n)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(normalize(v))
    return basis


def span_basis(vectors, dim=None):
    """Canonical (reduced echelon) basis of the span of the given vectors."""
    vectors = [vec(v) for v in vectors]
    if not vectors:
        return []
    return rref(vectors, dim if dim is not None else len(vectors[0]))[0]


class Reducer:
    """Reduction of vectors modulo a fixed subspace, via its echelon basis."""

    def __init__(self, vectors, dim):
        self.dim = dim
        self.basis, self.pivots = rref([vec(v) for v in vectors], dim) if vectors else ([], [])

    def reduce(self, v):
        v = list(vec(v))
        for row, c in zip(self.basis, self.pivots):
            if v[c] != 0:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return is_zero(self.reduce(v))

    @property
    def rank(self):
        return len(self.pivots)


def span_contains(vectors, v, dim=None) -> bool:
    v = vec(v)
    return Reducer(vectors, dim if dim is not None else len(v)).contains(v)


def quotient_dim(sub, ambient) -> int:
    """dim span(ambient) - dim span(sub), checking that sub lies inside ambient."""
    sub = [vec(v) for v in sub]
    ambient = [vec(v) for v in ambient]
    if not sub:
        return rank(ambient) if ambient else 0
    if not ambient:
        if all(is_zero(v) for v in sub):
            return 0
        raise SubspaceNotContained("nonzero vectors inside the zero space")
    ra = rank(ambient)
    if rank(ambient + sub) != ra:
        raise SubspaceNotContained("sub is not contained in the ambient span")
    return ra - rank(sub)


def solve(m, b):
    """One solution x of m x = b, or None when the system is inconsistent."""
    rows, n = _rows_of(m)
    b = vec(b)
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [ZERO] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    n = m.nrows
    aug = [list(r) + list(unit_vec(n, i)) for i, r in enumerate(m.rows)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return Matrix(n, n, [r[n:] for r in red])
