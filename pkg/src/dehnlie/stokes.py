"""Combinatorial Stokes integrals on Cayley paths of SOL-type groups.

The group is (K1 x K2) x| Z with (x, y, n)(x', y', n') = (x + l1^n x', y + l2^-n y', n + n'),
restricted to rational coordinates.  Norms are archimedean or p-adic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidInput, VariantUnavailable
from .linalg import frac


def valuation(q, p) -> int:
    q = frac(q)
    if q == 0:
        raise ValueError("valuation of zero")
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class NormModel:
    kind: str = "archimedean"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("archimedean", "p-adic"):
            raise InvalidInput(f"unknown norm kind {self.kind!r}")
        if self.kind == "p-adic" and (self.p is None or self.p < 2):
            raise InvalidInput("p-adic norms need a prime p")

    @classmethod
    def padic(cls, p):
        return cls("p-adic", int(p))

    @property
    def archimedean(self) -> bool:
        return self.kind == "archimedean"

    def __call__(self, q) -> Fraction:
        q = frac(q)
        if self.archimedean:
            return abs(q)
        if q == 0:
            return Fraction(0)
        return Fraction(self.p) ** -valuation(q, self.p)

    def __str__(self):
        return "R" if self.archimedean else f"Q{self.p}"


def _factor(n: int):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def log_ratio(a: Fraction, b: Fraction):
    """log a / log b as a Fraction when rational (a, b > 1), else None."""
    ea, eb = _factor(a.numerator), _factor(b.numerator)
    for p, e in _factor(a.denominator).items():
        ea[p] = ea.get(p, 0) - e
    for p, e in _factor(b.denominator).items():
        eb[p] = eb.get(p, 0) - e
    if set(ea) != set(eb):
        return None
    ratios = {Fraction(ea[p], eb[p]) for p in ea}
    return ratios.pop() if len(ratios) == 1 else None


class SolElement(NamedTuple):
    x: Fraction
    y: Fraction
    n: int


IDENTITY = SolElement(Fraction(0), Fraction(0), 0)


class KPair(NamedTuple):
    """Element of K1 x K2 with componentwise ring operations."""
    a: Fraction
    b: Fraction

    def __add__(self, o):
        return KPair(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        return KPair(self.a - o.a, self.b - o.b)

    def __mul__(self, o):
        return KPair(self.a * o.a, self.b * o.b)

    def __neg__(self):
        return KPair(-self.a, -self.b)


@dataclass(frozen=True)
class SolModel:
    norm1: NormModel
    norm2: NormModel
    l1: Fraction
    l2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l1", frac(self.l1))
        object.__setattr__(self, "l2", frac(self.l2))
        a, b = self.norm1(self.l1), self.norm2(self.l2)
        if not a > 1 or not b > 1:
            raise InvalidInput("need |l1| > 1 and |l2| > 1")
        if b < a:
            raise InvalidInput("need |l2| >= |l1| (swap the factors)")

    @property
    def mu(self):
        """log|l1| / log|l2| when rational, else None (then 0 < mu < 1)."""
        return log_ratio(self.norm1(self.l1), self.norm2(self.l2))

    def holder_bound(self, v) -> Fraction:
        """A rational upper bound for v^mu."""
        if self.norm1(self.l1) == self.norm2(self.l2):
            return Fraction(v)
        return max(Fraction(1), Fraction(v))

    def mul(self, g, h) -> SolElement:
        return SolElement(g.x + self.l1 ** g.n * h.x, g.y + self.l2 ** (-g.n) * h.y, g.n + h.n)

    def inv(self, g) -> SolElement:
        return SolElement(-self.l1 ** (-g.n) * g.x, -self.l2 ** g.n * g.y, -g.n)

    def knorm(self, v) -> Fraction:
        if isinstance(v, KPair):
            return max(self.norm1(v.a), self.norm2(v.b))
        return abs(frac(v))

    @property
    def generators(self):
        one, zero = Fraction(1), Fraction(0)
        return {
            "x": SolElement(one, zero, 0), "X": SolElement(-one, zero, 0),
            "y": SolElement(zero, one, 0), "Y": SolElement(zero, -one, 0),
            "t": SolElement(zero, zero, 1), "T": SolElement(zero, zero, -1),
        }


def real_model(l1=2, l2=2):
    return SolModel(NormModel(), NormModel(), l1, l2)


def padic_model(p, q, l1=None, l2=None):
    l1 = Fraction(1, p) if l1 is None else l1
    l2 = Fraction(1, q) if l2 is None else l2
    return SolModel(NormModel.padic(p), NormModel.padic(q), l1, l2)


def invert_label(label: str) -> str:
    return label.swapcase() if len(label) == 1 else label[0].swapcase() + label[1:]


def invert_word(word):
    return [invert_label(a) for a in reversed(word)]


def free_reduce(word):
    out = []
    for a in word:
        if out and out[-1] == invert_label(a):
            out.pop()
        else:
            out.append(a)
    return out


def _step(model, label, extra):
    gens = model.generators
    if label in gens:
        return gens[label]
    if extra and label in extra:
        return extra[label]
    if extra and invert_label(label) in extra:
        return model.inv(extra[invert_label(label)])
    raise InvalidInput(f"unknown generator {label!r}")


def word_vertices(model, word, start=IDENTITY, extra=None):
    verts = [start]
    for a in word:
        verts.append(model.mul(verts[-1], _step(model, a, extra)))
    return verts


def evaluate_word(model, word, extra=None) -> SolElement:
    return word_vertices(model, word, IDENTITY, extra)[-1]


@dataclass(frozen=True)
class ClosedPath:
    vertices: tuple
    word: tuple = ()

    def __post_init__(self):
        if not self.vertices or self.vertices[0] != self.vertices[-1]:
            raise InvalidInput("path is not closed")

    @classmethod
    def from_word(cls, model, word, start=IDENTITY, extra=None):
        return cls(tuple(word_vertices(model, word, start, extra)), tuple(word))

    def __len__(self):
        return len(self.vertices) - 1

    def translate(self, model, g) -> "ClosedPath":
        return ClosedPath(tuple(model.mul(g, c) for c in self.vertices), self.word)


def stokes_integral(path, beta, alpha):
    """Sum of beta(c_i) (alpha(c_{i+1}) - alpha(c_{i-1})) over i in Z/n."""
    cs = path.vertices[:-1] if isinstance(path, ClosedPath) else list(path)[:-1]
    n = len(cs)
    if n == 0:
        return Fraction(0)
    a = [alpha(c) for c in cs]
    total = None
    for i in range(n):
        term = beta(cs[i]) * (a[(i + 1) % n] - a[(i - 1) % n])
        total = term if total is None else total + term
    return total


# integrands

REAL, ULTRAMETRIC = "real", "ultrametric"


@dataclass(frozen=True)
class Integrands:
    variant: str
    A: object
    B: object

    def alpha(self, g):
        return self.A(g.x)

    def beta(self, g):
        return self.B(g.y)


def standard_integrands(model, variant=REAL) -> Integrands:
    """(A, B) with A Lipschitz in x and B Holder in y, B(0) = 1, B = 0 off the open unit ball."""
    n1, n2 = model.norm1, model.norm2
    if variant == REAL:
        return Integrands(REAL, lambda x: n1(x), lambda y: max(Fraction(0), 1 - n2(y)))
    if variant == ULTRAMETRIC:
        if n2.archimedean:
            raise VariantUnavailable("the ultrametric integrands need a non-archimedean K2")
        one, zero = Fraction(1), Fraction(0)

        def b2(y):
            y = frac(y)
            return KPair(one, 1 - y) if n2(y) < 1 else KPair(zero, zero)

        return Integrands(ULTRAMETRIC, lambda x: KPair(frac(x), zero), b2)
    raise VariantUnavailable(f"unknown variant {variant!r}")


# loop families


def gamma_step(model, k) -> SolElement:
    yk = Fraction(1) if model.norm2.archimedean else model.l2 ** k
    return SolElement(Fraction(0), yk, 0)


def gamma_word(k, n):
    w = ["t"] * n + ["x"] + ["T"] * n + ["y"] + ["t"] * n + ["X"] + ["T"] * n + ["Y"]
    for j in range(2, k + 1):
        w = w + [f"g{j}"] + invert_word(w) + [f"G{j}"]
    return w


def gamma_path(model, k, n) -> ClosedPath:
    if k < 1 or n < 1:
        raise InvalidInput("need k >= 1 and n >= 1")
    extra = {f"g{j}": gamma_step(model, j) for j in range(2, k + 1)}
    return ClosedPath.from_word(model, gamma_word(k, n), extra=extra)


def gamma_length(k, n) -> int:
    lam = 4 * n + 4
    for _ in range(k - 1):
        lam = 2 * lam + 2
    return lam


@dataclass(frozen=True)
class GammaCheck:
    computed: object
    closed_form: object
    computed_norm: Fraction
    predicted_norm: Fraction
    equal: bool


def gamma_integral_check(model, k, n, variant=REAL) -> GammaCheck:
    ig = standard_integrands(model, variant)
    path = gamma_path(model, k, n)
    value = stokes_integral(path, ig.beta, ig.alpha)
    b0 = ig.B(Fraction(0))
    da = ig.A(model.l1 ** n) - ig.A(Fraction(0))
    closed = b0 * da
    closed = closed + closed
    cn, pn = model.knorm(value), model.knorm(closed)
    return GammaCheck(value, closed, cn, pn, value == closed and cn == pn)


# triangle bounds and area lower bounds


def ball(model, radius):
    """Group elements of word length at most radius in {x, y, t}^{+-1}."""
    gens = list(model.generators.values())
    seen = {IDENTITY}
    frontier = [IDENTITY]
    for _ in range(radius):
        nxt = []
        for g in frontier:
            for s in gens:
                h = model.mul(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def triangle_bound(model, radius) -> Fraction:
    """C(R) with |integral over (g, gh, gh')| <= C(R) whenever |h|, |h'| <= R."""
    if radius < 1:
        raise InvalidInput("radius must be at least 1")
    vals = {(model.holder_bound(model.norm2(h.y)), model.norm1(h.x)) for h in ball(model, radius)}
    vals = list(vals)
    best = Fraction(0)
    for ya, xa in vals:
        for yb, xb in vals:
            c = ya * xb + yb * xa
            if c > best:
                best = c
    return best


def triangle_integral(model, g, h, h2, integrands):
    path = ClosedPath((g, model.mul(g, h), model.mul(g, h2), g))
    return stokes_integral(path, integrands.beta, integrands.alpha)


@dataclass(frozen=True)
class LowerBoundTable:
    variant: str
    radius: int
    constant: Fraction
    ultrametric: bool
    rows: list
    asymptotically_infinite_area: bool


def lower_bound_table(model, k, n_max, radius=4) -> LowerBoundTable:
    """Per n: the norm of the integral over gamma_{k,n} and an area lower bound.

    In the archimedean case the bound is |I| / C(R).  When both fields are
    ultrametric a loop filled by radius-R triangles has |I| <= C(R), so the
    bound is infinite ("none") as soon as |I| exceeds C(R).
    """
    ultra = not model.norm1.archimedean and not model.norm2.archimedean
    variant = ULTRAMETRIC if ultra else REAL
    c = triangle_bound(model, radius)
    rows = []
    for n in range(1, n_max + 1):
        chk = gamma_integral_check(model, k, n, variant)
        size = chk.computed_norm
        if ultra:
            bound = None if size > c else Fraction(0)
        else:
            bound = size / c
        rows.append((n, size, bound))
    # |2 l1^n| grows without bound since |l1| > 1, so some gamma_{k,n} escapes
    # every radius-R filling: the loops have asymptotically infinite area
    return LowerBoundTable(variant, radius, c, ultra, rows, ultra)
