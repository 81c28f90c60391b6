"""Exact convex geometry on finite sets of rational weights."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ZeroWeightPresent


def _is_zero(w):
    return all(x == 0 for x in w)


def feasible_point(a, b):
    """A vector x >= 0 with a x = b, or None.

    Phase one of the simplex method on exact rationals, with Bland's rule.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    rows = []
    for r, bi in zip(a, b):
        r = [Fraction(x) for x in r]
        bi = Fraction(bi)
        if bi < 0:
            r, bi = [-x for x in r], -bi
        rows.append(r + [Fraction(int(i == len(rows))) for i in range(m)] + [bi])
    width = n + m
    basis = [n + i for i in range(m)]
    cost = [-sum((rows[i][j] for i in range(m)), Fraction(0)) for j in range(width + 1)]
    for j in range(n, width):
        cost[j] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            break  # cannot happen in phase one: objective is bounded below
        i = best[1]
        p = rows[i][enter]
        rows[i] = [x / p for x in rows[i]]
        for k in range(m):
            if k != i and rows[k][enter] != 0:
                f = rows[k][enter]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[i])]
        basis[i] = enter
    if any(basis[i] >= n and rows[i][-1] != 0 for i in range(m)):
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][-1]
    return tuple(x)


@dataclass(frozen=True)
class HullCertificate:
    contains: bool
    coefficients: tuple | None = None
    functional: tuple | None = None

    def __bool__(self):
        return self.contains

    def verify(self, points) -> bool:
        points = [tuple(Fraction(x) for x in p) for p in points]
        if self.contains:
            lam = self.coefficients
            if len(lam) != len(points) or any(c < 0 for c in lam) or sum(lam) != 1:
                return False
            d = len(points[0])
            return all(sum(c * p[k] for c, p in zip(lam, points)) == 0 for k in range(d))
        ell = self.functional
        return all(sum(a * b for a, b in zip(ell, p)) > 0 for p in points)


def zero_in_convex_hull(points) -> HullCertificate:
    """Decide 0 in conv(points), with convex coefficients or a positive functional."""
    points = [tuple(Fraction(x) for x in p) for p in points]
    if not points:
        return HullCertificate(False, functional=())
    d = len(points[0])
    n = len(points)
    a = [[p[k] for p in points] for k in range(d)] + [[Fraction(1)] * n]
    b = [Fraction(0)] * d + [Fraction(1)]
    lam = feasible_point(a, b)
    if lam is not None:
        return HullCertificate(True, coefficients=lam)
    # l = l_plus - l_minus with l(p_i) - s_i = 1 and s_i >= 0
    a = []
    for i, p in enumerate(points):
        a.append(list(p) + [-x for x in p] + [Fraction(-int(i == k)) for k in range(n)])
    sol = feasible_point(a, [Fraction(1)] * n)
    if sol is None:
        raise AssertionError("neither certificate found; the two programs are dual")
    ell = tuple(sol[k] - sol[d + k] for k in range(d))
    return HullCertificate(False, functional=ell)


def quasi_opposite(a, b) -> bool:
    """True iff b = -t a for some t > 0 (both nonzero)."""
    d = len(a)
    for i in range(d):
        for j in range(i + 1, d):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return sum(x * y for x, y in zip(a, b)) < 0


def quasi_opposite_pairs(points):
    points = [tuple(Fraction(x) for x in p) for p in points]
    if any(_is_zero(p) for p in points):
        raise ZeroWeightPresent("quasi-opposite pairs are defined for nonzero weights only")
    out = []
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if quasi_opposite(points[i], points[j]):
                out.append((points[i], points[j]))
    return out


@dataclass(frozen=True)
class WeightSet:
    weights: tuple
    multiplicity: dict = field(default_factory=dict)
    principal: dict = field(default_factory=dict)
    field_tags: dict = field(default_factory=dict)
    principal_fields: dict = field(default_factory=dict)
    non_archimedean_fields: frozenset = frozenset()

    @classmethod
    def from_points(cls, points, principal=None):
        pts = []
        for p in points:
            p = tuple(Fraction(x) for x in p)
            if p not in pts:
                pts.append(p)
        principal = pts if principal is None else [tuple(Fraction(x) for x in p) for p in principal]
        return cls(weights=tuple(pts), multiplicity={p: 1 for p in pts},
                   principal={p: 1 for p in principal})

    @property
    def principal_weights(self):
        return [w for w in self.weights if w in self.principal]

    @property
    def principal_flags(self):
        return tuple(w in self.principal for w in self.weights)

    def principal_part(self) -> "WeightSet":
        keep = self.principal_weights
        return WeightSet(
            weights=tuple(keep),
            multiplicity={w: self.principal[w] for w in keep},
            principal=dict(self.principal),
            field_tags={w: self.principal_fields.get(w, frozenset()) for w in keep},
            principal_fields=dict(self.principal_fields),
            non_archimedean_fields=self.non_archimedean_fields,
        )

    def nonzero(self):
        return [w for w in self.weights if not _is_zero(w)]


@dataclass(frozen=True)
class TamenessFlags:
    tame: bool
    two_tame: bool
    stably_two_tame: bool
    sol_obstruction: bool
    non_archimedean_sol_obstruction: bool


def tameness_flags(ws: WeightSet) -> TamenessFlags:
    tame = not zero_in_convex_hull(ws.weights)
    principal = [w for w in ws.principal_weights if not _is_zero(w)]
    two_tame = not quasi_opposite_pairs(principal)
    stably = not quasi_opposite_pairs(ws.nonzero())
    na = [w for w in principal
          if ws.principal_fields.get(w, frozenset()) & ws.non_archimedean_fields]
    return TamenessFlags(
        tame=tame,
        two_tame=two_tame,
        stably_two_tame=stably,
        sol_obstruction=not two_tame,
        non_archimedean_sol_obstruction=bool(quasi_opposite_pairs(na)),
    )


def compacting_functional(ws):
    weights = ws.weights if isinstance(ws, WeightSet) else ws
    cert = zero_in_convex_hull(weights)
    return None if cert.contains else cert.functional
