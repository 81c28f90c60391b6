"""Dehn-function classification of the standard solvable group attached to a graded algebra."""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import format_weight, validate, weight_set, wzero
from .errors import InvalidInput
from .homology import h2_dim, killing_degree_zero
from .weights import (TamenessFlags, compacting_functional, quasi_opposite_pairs,
                      tameness_flags)

NOT_COMPACTLY_PRESENTED = "NotCompactlyPresented"
EXPONENTIAL = "ExponentialDehn"
CUBIC = "PolyAtMostCubic"
QUADRATIC = "Quadratic"
LINEAR = "Linear"
VERDICTS = (NOT_COMPACTLY_PRESENTED, EXPONENTIAL, CUBIC, QUADRATIC, LINEAR)


@dataclass(frozen=True)
class ObstructionFlags:
    sol: bool
    sol_non_archimedean: bool
    homological: bool
    homological_non_archimedean: bool
    kill_zero_vanishes: bool
    tameness: TamenessFlags
    per_field_h2: dict
    per_field_kill: dict
    warnings: tuple = ()


def obstruction_flags(alg) -> ObstructionFlags:
    ws = weight_set(alg)
    tf = tameness_flags(ws)
    h2, kill = {}, {}
    for f in alg.fields:
        sub = alg.restrict_to_field(f.id)
        h2[f.id] = h2_dim(sub)
        kill[f.id] = killing_degree_zero(sub).dim_Kill_0
    nonarch = {f.id for f in alg.fields if not f.archimedean}
    warnings = []
    if any(wzero(w) for w in ws.principal):
        warnings.append("0 is a principal weight; the input is not the unipotent part "
                        "of a standard solvable group")
    return ObstructionFlags(
        sol=tf.sol_obstruction,
        sol_non_archimedean=tf.non_archimedean_sol_obstruction,
        homological=any(d > 0 for d in h2.values()),
        homological_non_archimedean=any(h2[f] > 0 for f in nonarch),
        kill_zero_vanishes=sum(kill.values()) == 0,
        tameness=tf,
        per_field_h2=h2,
        per_field_kill=kill,
        warnings=tuple(warnings),
    )


@dataclass(frozen=True)
class Classification:
    verdict: str
    justification: list
    flags: ObstructionFlags
    notes: list = field(default_factory=list)


def _pairs_text(pairs):
    return "; ".join(f"{format_weight(a)} and {format_weight(b)}" for a, b in pairs)


def classify(alg) -> Classification:
    violations = validate(alg)
    if violations:
        raise InvalidInput(f"algebra fails validation: {violations[0]}")
    if alg.a_rank < 1:
        raise InvalidInput("a_rank must be at least 1")
    fl = obstruction_flags(alg)
    ws = weight_set(alg)
    principal = [w for w in ws.principal_weights if not wzero(w)]
    nonarch = {f.id for f in alg.fields if not f.archimedean}
    just = []
    notes = list(fl.warnings)
    notes.append("graded data is taken at face value; for real triangulable groups the "
                 "obstruction concerns hypercentral extensions of the exponential radical")
    if not alg.a_abelian:
        notes.append("A is marked nonabelian; the refinement for nilpotent A is not attempted")

    if fl.sol_non_archimedean or fl.homological_non_archimedean:
        if fl.sol_non_archimedean:
            na = [w for w in principal if ws.principal_fields.get(w, frozenset()) & nonarch]
            just.append(("non-archimedean SOL obstruction: not compactly presented",
                         "quasi-opposite principal weights over non-archimedean fields: "
                         + _pairs_text(quasi_opposite_pairs(na))))
        if fl.homological_non_archimedean:
            dims = ", ".join(f"H2(u_{f})_0 = {d}" for f, d in fl.per_field_h2.items()
                             if f in nonarch and d)
            just.append(("non-archimedean 2-homological obstruction: not compactly presented",
                         dims))
        return Classification(NOT_COMPACTLY_PRESENTED, just, fl, notes)

    if fl.sol or fl.homological:
        if fl.sol:
            just.append(("SOL obstruction: exponential Dehn function",
                         "quasi-opposite principal weights: "
                         + _pairs_text(quasi_opposite_pairs(principal))))
        if fl.homological:
            dims = ", ".join(f"H2(u_{f})_0 = {d}" for f, d in fl.per_field_h2.items() if d)
            just.append(("2-homological obstruction: exponential Dehn function", dims))
        return Classification(EXPONENTIAL, just, fl, notes)

    just.append(("no SOL or 2-homological obstruction: polynomially bounded Dehn function",
                 "no quasi-opposite principal weights and H2(u_j)_0 = 0 for every field"))
    if alg.a_rank == 1:
        just.append(("rank one without SOL obstruction: hyperbolic, linear Dehn function",
                     "a_rank = 1"))
        return Classification(LINEAR, just, fl, notes)

    tf = fl.tameness
    if tf.tame or tf.stably_two_tame or fl.kill_zero_vanishes:
        if tf.tame:
            ell = compacting_functional(ws)
            just.append(("tame: quadratic Dehn function",
                         f"compacting functional {format_weight(ell)} is positive on all weights"))
        if tf.stably_two_tame:
            just.append(("stably 2-tame: quadratic Dehn function",
                         "no two weights are quasi-opposite"))
        if fl.kill_zero_vanishes:
            just.append(("vanishing Killing module in degree zero: quadratic Dehn function",
                         "Kill(u)_0 = 0"))
        notes.append("at most quadratic, and exactly quadratic since a_rank >= 2")
        return Classification(QUADRATIC, just, fl, notes)

    kill = sum(fl.per_field_kill.values())
    just.append(("no obstruction: Dehn function at most cubic",
                 f"not tame, not stably 2-tame, dim Kill(u)_0 = {kill}"))
    return Classification(CUBIC, just, fl, notes)
