"""Shared hypothesis strategies and random helpers."""
from fractions import Fraction

from hypothesis import strategies as st

from dehnlie import linalg as la

small = st.integers(-4, 4)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def matrices(max_rows=5, max_cols=5, elements=rationals):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elements, min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def random_invertible(rng, m):
    while True:
        p = la.Matrix(m, m, [[Fraction(rng.randint(-2, 2)) for _ in range(m)] for _ in range(m)])
        if la.rank(p) == m:
            return p


def random_graded_basis_change(alg, rng):
    """Random invertible matrix that preserves every (field, weight) block."""
    n = alg.dim
    p = la.Matrix(n, n)
    blocks = {}
    for i, b in enumerate(alg.basis):
        blocks.setdefault((b.field, b.weight), []).append(i)
    for idx in blocks.values():
        q = random_invertible(rng, len(idx))
        for r, i in enumerate(idx):
            for c, j in enumerate(idx):
                p.rows[i][j] = q.rows[r][c]
    return p


def random_vector(rng, n, den=3):
    return tuple(Fraction(rng.randint(-5, 5), rng.randint(1, den)) for _ in range(n))
