"""Chevalley-Eilenberg boundaries on graded components, H2 and the Killing module in degree 0."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from . import linalg as la
from .algebra import wadd, wzero, weight


def _cache(alg):
    c = alg.__dict__.get("_homology_cache")
    if c is None:
        c = alg.__dict__["_homology_cache"] = {}
    return c


def _wedge_table(alg, n, tame):
    key = ("wedge", n, tame)
    cache = _cache(alg)
    if key not in cache:
        pool = alg.nonzero_indices() if tame else list(range(alg.dim))
        table = {}
        for t in combinations(pool, n):
            w = alg.zero_weight
            for i in t:
                w = wadd(w, alg.weight_of(i))
            table.setdefault(w, []).append(t)
        cache[key] = table
    return cache[key]


@dataclass(frozen=True)
class GradedWedgeBasis:
    degree: tuple
    arity: int
    elements: list

    def position(self):
        return {t: p for p, t in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)


def wedge_basis(alg, n, degree, tame=False) -> GradedWedgeBasis:
    degree = weight(degree)
    if n == 1:
        pool = alg.component(degree)
        if tame and wzero(degree):
            pool = []
        return GradedWedgeBasis(degree, 1, [(i,) for i in pool])
    if n == 0:
        return GradedWedgeBasis(degree, 0, [()] if wzero(degree) else [])
    return GradedWedgeBasis(degree, n, list(_wedge_table(alg, n, tame).get(degree, [])))


def occupied_degrees(alg, n):
    return sorted(_wedge_table(alg, n, False))


def _insert(k, rest):
    """Sign and sorted tuple of e_k ^ rest, or (0, None) if k already occurs."""
    if k in rest:
        return 0, None
    pos = sum(1 for r in rest if r < k)
    return (-1) ** pos, tuple(sorted(rest + (k,)))


def boundary_images(alg, t):
    """d_n of the basis wedge t as a dict {sorted tuple: coeff}."""
    n = len(t)
    out = {}
    for a in range(n):
        for b in range(a + 1, n):
            sign = (-1) ** (a + b)  # (-1)^{(a+1)+(b+1)}
            rest = t[:a] + t[a + 1:b] + t[b + 1:]
            for k, c in alg.bracket_basis(t[a], t[b]).items():
                s, key = _insert(k, rest)
                if s:
                    out[key] = out.get(key, 0) + sign * s * c
    return {k: v for k, v in out.items() if v != 0}


def boundary_matrix(alg, n, degree, tame=False) -> la.Matrix:
    """Matrix of d_n from the degree component of the n-th wedge power to the (n-1)-th."""
    src = wedge_basis(alg, n, degree, tame)
    tgt = wedge_basis(alg, n - 1, degree, tame and n == 3)
    pos = tgt.position()
    m = la.Matrix(len(tgt), len(src))
    for col, t in enumerate(src.elements):
        for key, c in boundary_images(alg, t).items():
            m.rows[pos[key]][col] += c
    return m


def _columns(m):
    return [m.column(j) for j in range(m.ncols)]


def chain_to_dict(alg, basis, v):
    """Readable chain: {"a^b": coeff}."""
    return {"^".join(alg.names[i] for i in t): c for t, c in zip(basis.elements, v) if c != 0}


@dataclass(frozen=True)
class DegreeZeroHomologyReport:
    dim_lambda2_0: int
    dim_lambda3_0: int
    dim_Z2_0: int
    dim_B2_0: int
    dim_H2_0: int
    h2_representatives: list
    dim_H2_tame_0: int
    per_field_dims: dict
    dim_lambda2_tame_0: int = 0
    dim_lambda3_tame_0: int = 0


def _h2_core(alg, tame=False):
    zero = alg.zero_weight
    w2 = wedge_basis(alg, 2, zero, tame)
    w3 = wedge_basis(alg, 3, zero, tame)
    d2 = boundary_matrix(alg, 2, zero, tame)
    d3 = boundary_matrix(alg, 3, zero, tame)
    cycles = la.kernel_basis(d2, ncols=len(w2))
    bounds = la.Reducer(_columns(d3), len(w2))
    reps = la.span_basis([bounds.reduce(z) for z in cycles], len(w2)) if cycles else []
    reps = [r for r in reps if not la.is_zero(r)]
    return w2, w3, cycles, bounds, reps


def h2_tame_degree_zero(alg):
    """(dim, representatives) of the tame homology in degree zero."""
    w2, _, _, _, reps = _h2_core(alg, tame=True)
    return len(reps), [chain_to_dict(alg, w2, r) for r in reps]


def h2_dim(alg) -> int:
    return len(_h2_core(alg)[4])


def h2_degree_zero(alg) -> DegreeZeroHomologyReport:
    w2, w3, cycles, bounds, reps = _h2_core(alg)
    tw2, tw3, _, _, treps = _h2_core(alg, tame=True)
    per_field = {f.id: h2_dim(alg.restrict_to_field(f.id)) for f in alg.fields}
    return DegreeZeroHomologyReport(
        dim_lambda2_0=len(w2),
        dim_lambda3_0=len(w3),
        dim_Z2_0=len(cycles),
        dim_B2_0=bounds.rank,
        dim_H2_0=len(reps),
        h2_representatives=[chain_to_dict(alg, w2, r) for r in reps],
        dim_H2_tame_0=len(treps),
        per_field_dims=per_field,
        dim_lambda2_tame_0=len(tw2),
        dim_lambda3_tame_0=len(tw3),
    )


def tame_cycles_surject(alg) -> bool:
    """Whether tame degree-0 cycles together with boundaries span all degree-0 cycles."""
    zero = alg.zero_weight
    w2, _, cycles, bounds, _ = _h2_core(alg)
    tw2 = wedge_basis(alg, 2, zero, True)
    tcycles = la.kernel_basis(boundary_matrix(alg, 2, zero, True), ncols=len(tw2))
    pos = w2.position()
    embedded = []
    for z in tcycles:
        v = [Fraction(0)] * len(w2)
        for t, c in zip(tw2.elements, z):
            v[pos[t]] = c
        embedded.append(tuple(v))
    red = la.Reducer(list(bounds.basis) + embedded, len(w2))
    return all(red.contains(z) for z in cycles)


def prop_six_check(alg) -> bool:
    """True iff every tame degree-0 2-cycle bounds in the full complex."""
    zero = alg.zero_weight
    w2, _, _, bounds, _ = _h2_core(alg)
    tw2 = wedge_basis(alg, 2, zero, True)
    if not tw2.elements:
        return True
    tcycles = la.kernel_basis(boundary_matrix(alg, 2, zero, True), ncols=len(tw2))
    pos = w2.position()
    for z in tcycles:
        v = [Fraction(0)] * len(w2)
        for t, c in zip(tw2.elements, z):
            v[pos[t]] = c
        if not bounds.contains(v):
            return False
    return True


# Killing module


@dataclass(frozen=True)
class KillingReport:
    dim_sym2_0: int
    dim_T_image_0: int
    dim_Kill_0: int
    dim_Kill_tame_0: int


def _sym_key(i, j):
    return (i, j) if i <= j else (j, i)


def killing_matrix(alg, tame=False):
    """Matrix of T(u.v (x) w) = u.[v,w] + v.[u,w] in degree zero, with its bases."""
    pool = alg.nonzero_indices() if tame else list(range(alg.dim))
    zero = alg.zero_weight
    sym = [p for p in combinations_with_replacement(pool, 2)
           if wzero(wadd(alg.weight_of(p[0]), alg.weight_of(p[1])))]
    pos = {p: r for r, p in enumerate(sym)}
    dom = []
    for (i, j) in combinations_with_replacement(pool, 2):
        wij = wadd(alg.weight_of(i), alg.weight_of(j))
        for k in pool:
            if wadd(wij, alg.weight_of(k)) == zero:
                dom.append((i, j, k))
    m = la.Matrix(len(sym), len(dom))
    for col, (i, j, k) in enumerate(dom):
        for u, v in ((i, j), (j, i)):
            for r, c in alg.bracket_basis(v, k).items():
                m.rows[pos[_sym_key(u, r)]][col] += c
    return m, sym, dom


def killing_degree_zero(alg) -> KillingReport:
    m, sym, _ = killing_matrix(alg)
    r = la.rank(m) if m.ncols and m.nrows else 0
    mt, tsym, _ = killing_matrix(alg, tame=True)
    rt = la.rank(mt) if mt.ncols and mt.nrows else 0
    return KillingReport(len(sym), r, len(sym) - r, len(tsym) - rt)


# HC1 pairing on Laurent polynomials


class LaurentPoly:
    """Finitely supported Laurent polynomial with rational coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=None):
        coefficients = coefficients or {}
        self.coefficients = {int(k): la.frac(v) for k, v in coefficients.items() if v != 0}

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    def __add__(self, other):
        out = dict(self.coefficients)
        for k, v in other.coefficients.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({k: v * la.frac(other) for k, v in self.coefficients.items()})
        out = {}
        for a, x in self.coefficients.items():
            for b, y in other.coefficients.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coefficients == other.coefficients

    def __repr__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"{v}*t^{k}" for k, v in sorted(self.coefficients.items()))


def hc1_pairing(f: LaurentPoly, g: LaurentPoly) -> Fraction:
    gc = g.coefficients
    return sum((k * v * gc.get(-k, 0) for k, v in f.coefficients.items()), Fraction(0))
