"""Graded Lie algebras over a product of fields, given by rational structure constants."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import linalg as la
from .errors import InvalidInput
from .weights import WeightSet

ARCHIMEDEAN = "archimedean"
NON_ARCHIMEDEAN = "non-archimedean"


def weight(coords) -> tuple:
    return tuple(la.frac(c) for c in coords)


def wadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def wneg(a):
    return tuple(-x for x in a)


def wzero(a) -> bool:
    return all(x == 0 for x in a)


@dataclass(frozen=True)
class FieldComponent:
    id: str
    kind: str = ARCHIMEDEAN
    residue_prime: int | None = None

    def __post_init__(self):
        if self.kind not in (ARCHIMEDEAN, NON_ARCHIMEDEAN):
            raise InvalidInput(f"field {self.id!r}: unknown kind {self.kind!r}")
        if self.kind == NON_ARCHIMEDEAN:
            if not isinstance(self.residue_prime, int) or self.residue_prime < 2:
                raise InvalidInput(f"field {self.id!r}: non-archimedean fields need a residue prime")
        elif self.residue_prime is not None:
            raise InvalidInput(f"field {self.id!r}: archimedean fields carry no residue prime")

    @property
    def archimedean(self) -> bool:
        return self.kind == ARCHIMEDEAN


@dataclass(frozen=True)
class BasisElement:
    name: str
    field: str
    weight: tuple


@dataclass(frozen=True)
class Violation:
    kind: str
    elements: tuple
    detail: str

    def __str__(self):
        return f"{self.kind} violation on ({', '.join(self.elements)}): {self.detail}"


class GradedLieAlgebra:
    """Structure constants on a graded basis.

    ``brackets`` maps index pairs to sparse combinations {k: coeff}.  A pair
    may be given in either order; it is stored as (i, j) with i < j.
    """

    def __init__(self, name, weight_dim, a_rank, fields, basis, brackets, a_abelian=True):
        self.name = name
        self.weight_dim = int(weight_dim)
        self.a_rank = int(a_rank)
        self.a_abelian = bool(a_abelian)
        self.fields = tuple(fields)
        self.basis = tuple(BasisElement(b.name, b.field, weight(b.weight)) for b in basis)
        ids = [f.id for f in self.fields]
        if len(set(ids)) != len(ids):
            raise InvalidInput("field ids are not unique")
        names = [b.name for b in self.basis]
        if len(set(names)) != len(names):
            raise InvalidInput("basis names are not unique")
        for b in self.basis:
            if b.field not in ids:
                raise InvalidInput(f"basis element {b.name!r} refers to unknown field {b.field!r}")
            if len(b.weight) != self.weight_dim:
                raise InvalidInput(f"basis element {b.name!r} has a weight of the wrong length")
        n = len(self.basis)
        table = {}
        seen = set()
        for (i, j), terms in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidInput(f"bracket index out of range: {(i, j)}")
            terms = {k: la.frac(c) for k, c in terms.items() if la.frac(c) != 0}
            for k in terms:
                if not 0 <= k < n:
                    raise InvalidInput(f"bracket term index out of range: {k}")
            if i == j:
                if terms:
                    raise InvalidInput(f"[{names[i]},{names[i]}] must vanish")
                continue
            if i > j:
                i, j = j, i
                terms = {k: -c for k, c in terms.items()}
            if (i, j) in seen:
                raise InvalidInput(f"bracket [{names[i]},{names[j]}] given twice")
            seen.add((i, j))
            if terms:
                table[(i, j)] = terms
        self.brackets = table
        self._index = {nm: i for i, nm in enumerate(names)}

    @classmethod
    def from_names(cls, name, weight_dim, a_rank, fields, basis, brackets, a_abelian=True):
        """Build from (name, field, weight) triples and {(a, b): {c: coeff}} keyed by names."""
        elems = [BasisElement(nm, f, weight(w)) for nm, f, w in basis]
        idx = {e.name: i for i, e in enumerate(elems)}
        try:
            table = {(idx[a], idx[b]): {idx[c]: q for c, q in terms.items()}
                     for (a, b), terms in brackets.items()}
        except KeyError as exc:
            raise InvalidInput(f"unknown basis name {exc.args[0]!r}") from None
        return cls(name, weight_dim, a_rank, fields, elems, table, a_abelian)

    # basic accessors

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def names(self):
        return [b.name for b in self.basis]

    def index(self, name) -> int:
        return self._index[name]

    def weight_of(self, i):
        return self.basis[i].weight

    def field_of(self, i):
        return self.basis[i].field

    def field(self, fid) -> FieldComponent:
        return next(f for f in self.fields if f.id == fid)

    @property
    def zero_weight(self):
        return (Fraction(0),) * self.weight_dim

    def degrees(self):
        return sorted({b.weight for b in self.basis})

    def component(self, w):
        w = weight(w)
        return [i for i, b in enumerate(self.basis) if b.weight == w]

    def nonzero_indices(self):
        return [i for i, b in enumerate(self.basis) if not wzero(b.weight)]

    def field_indices(self, fid):
        return [i for i, b in enumerate(self.basis) if b.field == fid]

    def unit(self, i):
        return la.unit_vec(self.dim, i)

    def vector(self, combo):
        """Vector from {name: coeff}."""
        v = [Fraction(0)] * self.dim
        for nm, c in combo.items():
            v[self.index(nm)] += la.frac(c)
        return tuple(v)

    # brackets

    def bracket_basis(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, u, v):
        out = [Fraction(0)] * self.dim
        su = [(i, a) for i, a in enumerate(u) if a != 0]
        sv = [(j, b) for j, b in enumerate(v) if b != 0]
        for i, a in su:
            for j, b in sv:
                if i == j:
                    continue
                terms = self.bracket_basis(i, j)
                if terms:
                    ab = a * b
                    for k, c in terms.items():
                        out[k] += ab * c
        return tuple(out)

    def bracket_units(self, i, j):
        out = [Fraction(0)] * self.dim
        for k, c in self.bracket_basis(i, j).items():
            out[k] = c
        return tuple(out)

    def is_abelian(self) -> bool:
        return not self.brackets

    # derived algebras

    def restrict_to_field(self, fid) -> "GradedLieAlgebra":
        idx = self.field_indices(fid)
        return self.restrict(idx, name=f"{self.name}[{fid}]", fields=[self.field(fid)])

    def restrict(self, indices, name=None, fields=None) -> "GradedLieAlgebra":
        """Subalgebra spanned by a set of basis elements (must be bracket-closed)."""
        indices = list(indices)
        pos = {i: p for p, i in enumerate(indices)}
        table = {}
        for (i, j), terms in self.brackets.items():
            if i in pos and j in pos:
                if any(k not in pos for k in terms):
                    raise InvalidInput("basis subset is not closed under brackets")
                table[(pos[i], pos[j])] = {pos[k]: c for k, c in terms.items()}
        basis = [self.basis[i] for i in indices]
        if fields is None:
            used = {b.field for b in basis}
            fields = [f for f in self.fields if f.id in used]
        return GradedLieAlgebra(name or self.name, self.weight_dim, self.a_rank, fields,
                                basis, table, self.a_abelian)

    def with_weights(self, weights, name=None) -> "GradedLieAlgebra":
        basis = [BasisElement(b.name, b.field, weight(w)) for b, w in zip(self.basis, weights)]
        return GradedLieAlgebra(name or self.name, self.weight_dim, self.a_rank, self.fields,
                                basis, self.brackets, self.a_abelian)

    def scale_weights(self, c) -> "GradedLieAlgebra":
        c = la.frac(c)
        return self.with_weights([tuple(c * x for x in b.weight) for b in self.basis])

    def change_basis(self, p: la.Matrix, name=None) -> "GradedLieAlgebra":
        """New basis f_a = sum_b p[b][a] e_b; each column must be homogeneous."""
        n = self.dim
        cols = [p.column(a) for a in range(n)]
        new_basis = []
        for a, col in enumerate(cols):
            support = [i for i, x in enumerate(col) if x != 0]
            if not support:
                raise InvalidInput("basis change matrix has a zero column")
            keys = {(self.basis[i].weight, self.basis[i].field) for i in support}
            if len(keys) != 1:
                raise InvalidInput("basis change mixes weights or fields")
            w, f = keys.pop()
            new_basis.append(BasisElement(f"f{a}:{self.basis[support[0]].name}", f, w))
        pinv = la.inverse(p)
        table = {}
        for a in range(n):
            for b in range(a + 1, n):
                br = self.bracket(cols[a], cols[b])
                if la.is_zero(br):
                    continue
                coords = pinv.apply(br)
                table[(a, b)] = {k: c for k, c in enumerate(coords) if c != 0}
        return GradedLieAlgebra(name or self.name, self.weight_dim, self.a_rank, self.fields,
                                new_basis, table, self.a_abelian)

    def __repr__(self):
        return f"GradedLieAlgebra({self.name!r}, dim={self.dim}, weight_dim={self.weight_dim})"


def validate(alg: GradedLieAlgebra):
    """List of violations of grading, field separation and the Jacobi identity."""
    out = []
    names = alg.names
    for (i, j), terms in sorted(alg.brackets.items()):
        target = wadd(alg.weight_of(i), alg.weight_of(j))
        bad = [names[k] for k in terms if alg.weight_of(k) != target]
        if bad:
            out.append(Violation("grading", (names[i], names[j]),
                                 f"terms {', '.join(bad)} are not of weight "
                                 f"{format_weight(target)}"))
        fi, fj = alg.field_of(i), alg.field_of(j)
        if fi != fj:
            out.append(Violation("field-separation", (names[i], names[j]),
                                 f"bracket of elements over fields {fi} and {fj} is nonzero"))
        else:
            bad = [names[k] for k in terms if alg.field_of(k) != fi]
            if bad:
                out.append(Violation("field-separation", (names[i], names[j]),
                                     f"terms {', '.join(bad)} lie outside field {fi}"))
    n = alg.dim
    units = [alg.unit(i) for i in range(n)]
    br = {}
    for i in range(n):
        for j in range(i + 1, n):
            br[(i, j)] = alg.bracket_units(i, j)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a = alg.bracket(units[i], br[(j, k)])
                b = alg.bracket(units[j], la.scale(-1, br[(i, k)]))
                c = alg.bracket(units[k], br[(i, j)])
                s = la.add(la.add(a, b), c)
                if not la.is_zero(s):
                    out.append(Violation("jacobi", (names[i], names[j], names[k]),
                                         "Jacobi sum is nonzero"))
    return out


def format_weight(w):
    return "(" + ", ".join(str(x) for x in w) + ")"


def graded_component_basis(alg, w):
    return alg.component(w)


def bracket_span(alg, left, right):
    """Canonical basis of span{[u, v] : u in left, v in right}."""
    vecs = []
    for u in left:
        for v in right:
            b = alg.bracket(u, v)
            if not la.is_zero(b):
                vecs.append(b)
    return la.span_basis(vecs, alg.dim)


def derived_algebra(alg):
    vecs = [alg.bracket_units(i, j) for (i, j) in alg.brackets]
    return la.span_basis(vecs, alg.dim)


@dataclass(frozen=True)
class CentralSeriesReport:
    terms: list
    stable_term: list
    nilpotency_length: int | None

    @property
    def is_nilpotent(self) -> bool:
        return self.nilpotency_length is not None

    @property
    def dims(self):
        return [len(t) for t in self.terms]


def descending_central_series(alg) -> CentralSeriesReport:
    full = [alg.unit(i) for i in range(alg.dim)]
    terms = [full]
    while terms[-1]:
        nxt = bracket_span(alg, full, terms[-1])
        if len(nxt) == len(terms[-1]):
            return CentralSeriesReport(terms, terms[-1], None)
        terms.append(nxt)
    return CentralSeriesReport(terms, terms[-1], len(terms) - 1)


def subalgebra_generated(alg, seed):
    basis = la.span_basis([la.vec(v) for v in seed], alg.dim) if seed else []
    while True:
        red = la.Reducer(basis, alg.dim)
        new = []
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                v = red.reduce(alg.bracket(basis[a], basis[b]))
                if not la.is_zero(v):
                    new.append(v)
                    red = la.Reducer(basis + new, alg.dim)
        if not new:
            return basis
        basis = la.span_basis(basis + new, alg.dim)


def ideal_generated(alg, seed):
    basis = la.span_basis([la.vec(v) for v in seed], alg.dim) if seed else []
    units = [alg.unit(i) for i in range(alg.dim)]
    while True:
        red = la.Reducer(basis, alg.dim)
        new = [v for v in (red.reduce(alg.bracket(u, b)) for u in units for b in basis)
               if not la.is_zero(v)]
        if not new:
            return basis
        basis = la.span_basis(basis + new, alg.dim)


def weight_set(alg) -> WeightSet:
    """All weights, with multiplicities, field tags and principal marking."""
    mult, tags = {}, {}
    for b in alg.basis:
        mult[b.weight] = mult.get(b.weight, 0) + 1
        tags.setdefault(b.weight, set()).add(b.field)
    principal, pfields = {}, {}
    for f in alg.fields:
        idx = alg.field_indices(f.id)
        for w in sorted({alg.weight_of(i) for i in idx}):
            comp = [i for i in idx if alg.weight_of(i) == w]
            rows = [[terms.get(k, 0) for k in comp]
                    for (i, j), terms in alg.brackets.items()
                    if i in idx and wadd(alg.weight_of(i), alg.weight_of(j)) == w]
            m = len(comp) - (la.rank(rows) if rows else 0)
            if m > 0:
                principal[w] = principal.get(w, 0) + m
                pfields.setdefault(w, set()).add(f.id)
    nonarch = frozenset(f.id for f in alg.fields if not f.archimedean)
    return WeightSet(
        weights=tuple(sorted(mult)),
        multiplicity=mult,
        principal=principal,
        field_tags={w: frozenset(t) for w, t in tags.items()},
        principal_fields={w: frozenset(t) for w, t in pfields.items()},
        non_archimedean_fields=nonarch,
    )


def principal_weights(alg) -> WeightSet:
    return weight_set(alg).principal_part()


class TameCheck(NamedTuple):
    holds: bool
    witness: object = None


def _zero_span(alg, excluded=()):
    vecs = []
    for i in alg.nonzero_indices():
        wi = alg.weight_of(i)
        if wi in excluded:
            continue
        for j in alg.component(wneg(wi)):
            if i < j:
                b = alg.bracket_units(i, j)
                if not la.is_zero(b):
                    vecs.append(b)
    return la.Reducer(vecs, alg.dim)


def is_1_tame(alg) -> TameCheck:
    red = _zero_span(alg)
    for z in alg.component(alg.zero_weight):
        if not red.contains(alg.unit(z)):
            return TameCheck(False, alg.unit(z))
    return TameCheck(True)


def is_doubly_1_tame(alg) -> TameCheck:
    zeros = alg.component(alg.zero_weight)
    if not zeros:
        return TameCheck(True)
    for a in [alg.zero_weight] + [w for w in alg.degrees() if not wzero(w)]:
        red = _zero_span(alg, excluded={a, wneg(a)})
        for z in zeros:
            if not red.contains(alg.unit(z)):
                return TameCheck(False, (a, alg.unit(z)))
    return TameCheck(True)


def direct_product(a, b, name=None):
    """Direct product of two algebras with the same weight space."""
    if a.weight_dim != b.weight_dim:
        raise InvalidInput("direct product needs equal weight dimensions")
    ids = {f.id for f in a.fields}
    fields = list(a.fields) + [f for f in b.fields if f.id not in ids]
    shift = a.dim
    basis = list(a.basis) + [BasisElement(f"{x.name}'", x.field, x.weight) for x in b.basis]
    table = dict(a.brackets)
    for (i, j), terms in b.brackets.items():
        table[(i + shift, j + shift)] = {k + shift: c for k, c in terms.items()}
    return GradedLieAlgebra(name or f"{a.name}x{b.name}", a.weight_dim, a.a_rank, fields,
                            basis, table, a.a_abelian)
