"""Group law on a rational nilpotent Lie algebra via the Baker-Campbell-Hausdorff series."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from . import linalg as la
from .algebra import descending_central_series
from .errors import InvalidInput, NotNilpotent

MAX_DEGREE = 8


def _blocks(word, start=0):
    """All splittings of word[start:] into nonempty blocks of the form X^r Y^s."""
    if start == len(word):
        yield []
        return
    end = start
    while end < len(word) and word[end] == "X":
        end += 1
    while end < len(word) and word[end] == "Y":
        end += 1
    # block word[start:q] is of the form X^r Y^s for every start < q <= end
    for q in range(start + 1, end + 1):
        for rest in _blocks(word, q):
            yield [word[start:q]] + rest


@lru_cache(maxsize=None)
def dynkin_coefficient(word: str) -> Fraction:
    """Coefficient of the right-nested bracket of ``word`` in Dynkin's form of BCH."""
    m = len(word)
    if m > 1 and word[-1] == word[-2]:
        return Fraction(0)
    total = Fraction(0)
    for blocks in _blocks(word):
        n = len(blocks)
        denom = m
        for b in blocks:
            denom *= factorial(b.count("X")) * factorial(b.count("Y"))
        total += Fraction((-1) ** (n - 1), n * denom)
    return total


@lru_cache(maxsize=None)
def dynkin_words(degree: int):
    out = []
    for m in range(1, degree + 1):
        for w in product("XY", repeat=m):
            w = "".join(w)
            c = dynkin_coefficient(w)
            if c:
                out.append((w, c))
    return tuple(out)


def nilpotency_length(alg) -> int:
    cache = alg.__dict__.setdefault("_bch_cache", {})
    if "length" not in cache:
        rep = descending_central_series(alg)
        if not rep.is_nilpotent:
            raise NotNilpotent(f"{alg.name} is not nilpotent")
        cache["length"] = rep.nilpotency_length
    return cache["length"]


def bch_product(alg, x, y, degree=None):
    """log(exp x exp y), truncated at the nilpotency length unless a degree is given."""
    x, y = la.vec(x), la.vec(y)
    if degree is None:
        degree = max(nilpotency_length(alg), 1)
    if degree > MAX_DEGREE:
        raise InvalidInput(f"BCH degree {degree} exceeds the supported {MAX_DEGREE}")
    letters = {"X": x, "Y": y}
    nested = {}

    def value(w):
        if w not in nested:
            if len(w) == 1:
                nested[w] = letters[w]
            else:
                nested[w] = alg.bracket(letters[w[0]], value(w[1:]))
        return nested[w]

    out = [Fraction(0)] * alg.dim
    for w, c in dynkin_words(degree):
        v = value(w)
        for i, a in enumerate(v):
            if a:
                out[i] += c * a
    return tuple(out)


def inverse(x):
    return tuple(-a for a in x)


def group_commutator(alg, x, y):
    """log of (exp x)^-1 (exp y)^-1 (exp x) (exp y)."""
    x, y = la.vec(x), la.vec(y)
    p = bch_product(alg, inverse(x), inverse(y))
    p = bch_product(alg, p, x)
    return bch_product(alg, p, y)


def iterated_commutator(alg, xs):
    xs = [la.vec(x) for x in xs]
    acc = xs[-1]
    for x in reversed(xs[:-1]):
        acc = group_commutator(alg, x, acc)
    return acc


def iterated_bracket(alg, xs):
    xs = [la.vec(x) for x in xs]
    acc = xs[-1]
    for x in reversed(xs[:-1]):
        acc = alg.bracket(x, acc)
    return acc


def verify_multicom(alg, *xs) -> bool:
    """((x1,...,xs)) = exp [x1,[x2,...,xs]] in an s-nilpotent group."""
    if len(xs) == 1 and isinstance(xs[0], (list, tuple)) and xs[0] and isinstance(xs[0][0], (list, tuple)):
        xs = tuple(xs[0])
    if len(xs) < 2:
        raise InvalidInput("need at least two elements")
    if nilpotency_length(alg) > len(xs):
        raise InvalidInput(f"{alg.name} is not {len(xs)}-nilpotent")
    return iterated_commutator(alg, xs) == iterated_bracket(alg, xs)


# matrix oracle


def _mat_power_series(m, coeff, n):
    out = la.Matrix(n, n)
    power = la.Matrix.identity(n)
    for k in range(1, n + 1):
        power = power @ m
        if power.is_zero():
            break
        out = out + power.scaled(coeff(k))
    return out


def mat_exp(m):
    n = m.nrows
    return la.Matrix.identity(n) + _mat_power_series(m, lambda k: Fraction(1, factorial(k)), n)


def mat_log(u):
    n = u.nrows
    return _mat_power_series(u - la.Matrix.identity(n), lambda k: Fraction((-1) ** (k + 1), k), n)


def unipotent_matrix_oracle(n, x, y) -> la.Matrix:
    """log(exp X exp Y) for strictly upper triangular rational matrices."""
    x = x if isinstance(x, la.Matrix) else la.Matrix(n, n, x)
    y = y if isinstance(y, la.Matrix) else la.Matrix(n, n, y)
    for m in (x, y):
        if any(m.rows[i][j] != 0 for i in range(n) for j in range(i + 1)):
            raise InvalidInput("oracle expects strictly upper triangular matrices")
    return mat_log(mat_exp(x) @ mat_exp(y))
