"""The degree-zero blow-up: universal graded central extension with kernel H2 in degree 0."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .algebra import (BasisElement, FieldComponent, GradedLieAlgebra, derived_algebra,
                      is_1_tame, validate, wadd, wzero)
from .homology import boundary_matrix, h2_dim, wedge_basis

QFORM = FieldComponent("Q")


@dataclass(frozen=True)
class BlowUpResult:
    source: GradedLieAlgebra
    blown_up: GradedLieAlgebra
    tau: la.Matrix
    kernel_basis: list
    kernel_dim: int
    notes: tuple = ()


def _wedge_vec(u, v, pos, size):
    out = [Fraction(0)] * size
    su = [(i, a) for i, a in enumerate(u) if a != 0]
    sv = [(j, b) for j, b in enumerate(v) if b != 0]
    for i, a in su:
        for j, b in sv:
            if i < j:
                out[pos[(i, j)]] += a * b
            elif j < i:
                out[pos[(j, i)]] -= a * b
    return out


def blow_up(alg: GradedLieAlgebra) -> BlowUpResult:
    zero = alg.zero_weight
    w2 = wedge_basis(alg, 2, zero)
    pos = w2.position()
    d3 = boundary_matrix(alg, 3, zero)
    bounds = la.Reducer([d3.column(j) for j in range(d3.ncols)], len(w2))
    free = [c for c in range(len(w2)) if c not in set(bounds.pivots)]

    nz = alg.nonzero_indices()
    new_index_nz = {i: p for p, i in enumerate(nz)}
    n_new = len(nz) + len(free)

    single_field = len(alg.fields) == 1
    fields = list(alg.fields) if single_field else [QFORM]
    basis = []
    for i in nz:
        b = alg.basis[i]
        basis.append(BasisElement(b.name, b.field if single_field else QFORM.id, b.weight))
    for c in free:
        i, j = w2.elements[c]
        basis.append(BasisElement(f"w({alg.names[i]},{alg.names[j]})", fields[0].id, zero))

    # tau: columns are images in the old algebra
    tau_cols = [alg.unit(i) for i in nz]
    tau_cols += [alg.bracket_units(*w2.elements[c]) for c in free]

    def to_new(old_vec):
        v = [Fraction(0)] * n_new
        for i, a in enumerate(old_vec):
            if a != 0:
                v[new_index_nz[i]] = a
        return v

    def zero_coords(chain):
        red = bounds.reduce(chain)
        v = [Fraction(0)] * n_new
        for p, c in enumerate(free):
            v[len(nz) + p] = red[c]
        return v

    brackets = {}
    for a in range(n_new):
        for b in range(a + 1, n_new):
            s = wadd(basis[a].weight, basis[b].weight)
            if wzero(s):
                coords = zero_coords(_wedge_vec(tau_cols[a], tau_cols[b], pos, len(w2)))
            else:
                coords = to_new(alg.bracket(tau_cols[a], tau_cols[b]))
            terms = {k: x for k, x in enumerate(coords) if x != 0}
            if terms:
                brackets[(a, b)] = terms

    blown = GradedLieAlgebra(f"{alg.name}~", alg.weight_dim, alg.a_rank, fields, basis,
                             brackets, alg.a_abelian)
    tau = la.Matrix.from_columns(tau_cols, alg.dim)
    # kernel of tau lies in degree 0 since tau is the identity on nonzero degrees
    tau0 = la.Matrix.from_columns(tau_cols[len(nz):], alg.dim)
    ker0 = la.kernel_basis(tau0, ncols=len(free)) if free else []
    kernel = [tuple([Fraction(0)] * len(nz) + list(k)) for k in ker0]
    notes = ()
    if not single_field:
        notes = ("computed over the rational form; the field components are merged",)
    return BlowUpResult(alg, blown, tau, kernel, len(kernel), notes)


def is_relatively_perfect_degree_zero(alg) -> bool:
    red = la.Reducer(derived_algebra(alg), alg.dim)
    return all(red.contains(alg.unit(z)) for z in alg.component(alg.zero_weight))


@dataclass(frozen=True)
class BlowUpVerification:
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self):
        return [k for k, v in self.checks.items() if not v]


def verify_blow_up(result: BlowUpResult) -> BlowUpVerification:
    src, tilde, tau = result.source, result.blown_up, result.tau
    checks = {}
    checks["jacobi"] = not [v for v in validate(tilde) if v.kind == "jacobi"]
    checks["grading"] = not [v for v in validate(tilde) if v.kind == "grading"]
    hom = True
    cols = [tau.column(a) for a in range(tilde.dim)]
    for a in range(tilde.dim):
        img = cols[a]
        if any(x != 0 and src.weight_of(i) != tilde.weight_of(a) for i, x in enumerate(img)):
            hom = False
        for b in range(a + 1, tilde.dim):
            lhs = tau.apply(tilde.bracket_units(a, b))
            if lhs != src.bracket(cols[a], cols[b]):
                hom = False
    checks["tau_homomorphism"] = hom
    units = [tilde.unit(i) for i in range(tilde.dim)]
    checks["kernel_central"] = all(la.is_zero(tilde.bracket(k, u))
                                   for k in result.kernel_basis for u in units)
    checks["kernel_degree_zero"] = all(
        all(x == 0 or wzero(tilde.weight_of(i)) for i, x in enumerate(k))
        for k in result.kernel_basis)
    checks["kernel_dim_equals_h2"] = result.kernel_dim == h2_dim(src)
    image = la.span_basis(cols, src.dim) if cols else []
    expected = la.span_basis([src.unit(i) for i in src.nonzero_indices()]
                             + derived_algebra(src), src.dim)
    checks["image"] = image == expected
    if is_relatively_perfect_degree_zero(src):
        checks["idempotent"] = blow_up(tilde).kernel_dim == 0
    if is_1_tame(src).holds:
        checks["one_tame_preserved"] = is_1_tame(tilde).holds
    return BlowUpVerification(checks)
