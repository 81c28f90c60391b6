"""Command-line front end.

Exit codes: 0 success, 1 parse or validation error, 2 internal check failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import corpus, diagram, fileformat
from .algebra import (format_weight, is_1_tame, is_doubly_1_tame, validate, weight_set)
from .blowup import blow_up, is_relatively_perfect_degree_zero, verify_blow_up
from .classify import classify
from .errors import DehnlieError, InvalidInput, ParseError, ValidationError
from .homology import h2_degree_zero, killing_degree_zero
from .stokes import NormModel, SolModel, lower_bound_table
from .weights import compacting_functional, tameness_flags


def load_target(target):
    """An algebra from a file path or from ``example:NAME``."""
    if target.startswith("example:"):
        try:
            return corpus.load(target[len("example:"):])
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc)) from None
    return fileformat.load(target)


def load_valid(target):
    alg = load_target(target)
    violations = validate(alg)
    if violations:
        raise ValidationError(violations)
    return alg


def _q(x):
    return fileformat.fmt(x) if isinstance(x, (Fraction, int)) else x


def _w(w):
    return [fileformat.fmt(x) for x in w]


def analysis_report(alg) -> dict:
    ws = weight_set(alg)
    tf = tameness_flags(ws)
    ell = compacting_functional(ws)
    h2 = h2_degree_zero(alg)
    kill = killing_degree_zero(alg)
    bu = blow_up(alg)
    cl = classify(alg)
    weights = []
    for w in ws.weights:
        weights.append({
            "weight": _w(w),
            "basis": [b.name for b in alg.basis if b.weight == w],
            "principal_multiplicity": ws.principal.get(w, 0),
            "fields": sorted(ws.field_tags[w]),
        })
    return {
        "name": alg.name,
        "dim": alg.dim,
        "weight_dim": alg.weight_dim,
        "a_rank": alg.a_rank,
        "weights": weights,
        "tameness": {
            "tame": tf.tame,
            "two_tame": tf.two_tame,
            "stably_two_tame": tf.stably_two_tame,
            "sol_obstruction": tf.sol_obstruction,
            "non_archimedean_sol_obstruction": tf.non_archimedean_sol_obstruction,
            "compacting_functional": None if ell is None else _w(ell),
            "one_tame": is_1_tame(alg).holds,
            "doubly_one_tame": is_doubly_1_tame(alg).holds,
            "relatively_perfect_degree_zero": is_relatively_perfect_degree_zero(alg),
        },
        "homology": {
            "dim_lambda2_0": h2.dim_lambda2_0,
            "dim_lambda3_0": h2.dim_lambda3_0,
            "dim_Z2_0": h2.dim_Z2_0,
            "dim_B2_0": h2.dim_B2_0,
            "dim_H2_0": h2.dim_H2_0,
            "h2_representatives": [{k: _q(v) for k, v in r.items()}
                                   for r in h2.h2_representatives],
            "dim_lambda2_tame_0": h2.dim_lambda2_tame_0,
            "dim_lambda3_tame_0": h2.dim_lambda3_tame_0,
            "dim_H2_tame_0": h2.dim_H2_tame_0,
            "per_field_dim_H2_0": h2.per_field_dims,
        },
        "killing": {
            "dim_sym2_0": kill.dim_sym2_0,
            "dim_T_image_0": kill.dim_T_image_0,
            "dim_Kill_0": kill.dim_Kill_0,
            "dim_Kill_tame_0": kill.dim_Kill_tame_0,
            "per_field_dim_Kill_0": cl.flags.per_field_kill,
        },
        "blow_up": {"dim": bu.blown_up.dim, "kernel_dim": bu.kernel_dim},
        "classification": {
            "verdict": cl.verdict,
            "justification": [{"rule": r, "condition": c} for r, c in cl.justification],
            "notes": cl.notes,
        },
    }


def _yes(b):
    return "yes" if b else "no"


def format_report_text(rep) -> str:
    out = [f"algebra {rep['name']}: dim {rep['dim']}, weight_dim {rep['weight_dim']}, "
           f"a_rank {rep['a_rank']}", "", "weights:"]
    for w in rep["weights"]:
        mark = f"  principal x{w['principal_multiplicity']}" if w["principal_multiplicity"] else ""
        out.append(f"  ({', '.join(w['weight'])})  {', '.join(w['basis'])}"
                   f"  [{', '.join(w['fields'])}]{mark}")
    t = rep["tameness"]
    out += ["", "weight geometry:",
            f"  tame: {_yes(t['tame'])}"
            + (f" (functional ({', '.join(t['compacting_functional'])}))"
               if t["compacting_functional"] else ""),
            f"  2-tame: {_yes(t['two_tame'])}   stably 2-tame: {_yes(t['stably_two_tame'])}",
            f"  SOL obstruction: {_yes(t['sol_obstruction'])}   non-archimedean: "
            f"{_yes(t['non_archimedean_sol_obstruction'])}",
            f"  1-tame: {_yes(t['one_tame'])}   doubly 1-tame: {_yes(t['doubly_one_tame'])}   "
            f"relatively perfect in degree 0: {_yes(t['relatively_perfect_degree_zero'])}"]
    h = rep["homology"]
    out += ["", "degree-zero homology:",
            f"  dim (g^g)_0 = {h['dim_lambda2_0']}, dim (g^g^g)_0 = {h['dim_lambda3_0']}",
            f"  dim Z2_0 = {h['dim_Z2_0']}, dim B2_0 = {h['dim_B2_0']}, dim H2_0 = {h['dim_H2_0']}",
            f"  tame: dim (g'^g')_0 = {h['dim_lambda2_tame_0']}, "
            f"dim (g'^g'^g')_0 = {h['dim_lambda3_tame_0']}, dim H2'_0 = {h['dim_H2_tame_0']}",
            "  per field: " + ", ".join(f"{k}: {v}" for k, v in h["per_field_dim_H2_0"].items())]
    for r in h["h2_representatives"]:
        out.append("  cycle: " + " + ".join(f"{c}*{k}" for k, c in r.items()))
    k = rep["killing"]
    out += ["", "Killing module:",
            f"  dim Sym2_0 = {k['dim_sym2_0']}, rank T = {k['dim_T_image_0']}, "
            f"dim Kill_0 = {k['dim_Kill_0']}, tame dim = {k['dim_Kill_tame_0']}",
            "", f"blow-up: dim {rep['blow_up']['dim']}, kernel dim {rep['blow_up']['kernel_dim']}",
            "", f"verdict: {rep['classification']['verdict']}"]
    for j in rep["classification"]["justification"]:
        out.append(f"  - {j['rule']} [{j['condition']}]")
    for n in rep["classification"]["notes"]:
        out.append(f"  note: {n}")
    return "\n".join(out) + "\n"


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def run_analyze(target, fmt="text") -> str:
    rep = analysis_report(load_valid(target))
    return dump_json(rep) if fmt in ("structured", "json") else format_report_text(rep)


def _parse_model(spec, l1, l2):
    if spec == "real":
        n1 = n2 = NormModel()
    elif spec.startswith("padic:"):
        try:
            p, q = (int(x) for x in spec[len("padic:"):].split(","))
        except ValueError:
            raise InvalidInput("model must be real or padic:p,q") from None
        n1, n2 = NormModel.padic(p), NormModel.padic(q)
    else:
        raise InvalidInput("model must be real or padic:p,q")
    if l1 is None:
        l1 = Fraction(2) if n1.archimedean else Fraction(1, n1.p)
    if l2 is None:
        l2 = Fraction(2) if n2.archimedean else Fraction(1, n2.p)
    return SolModel(n1, n2, Fraction(l1), Fraction(l2))


def run_stokes(model_spec, l1, l2, k, nmax, radius=4, fmt="text") -> str:
    model = _parse_model(model_spec, l1, l2)
    table = lower_bound_table(model, k, nmax, radius)
    if fmt in ("structured", "json"):
        return dump_json({
            "model": {"norm1": str(model.norm1), "norm2": str(model.norm2),
                      "l1": fileformat.fmt(model.l1), "l2": fileformat.fmt(model.l2)},
            "k": k, "variant": table.variant, "radius": table.radius,
            "triangle_bound": fileformat.fmt(table.constant),
            "asymptotically_infinite_area": table.asymptotically_infinite_area,
            "rows": [{"n": n, "integral_norm": fileformat.fmt(s),
                      "area_lower_bound": None if b is None else fileformat.fmt(b)}
                     for n, s, b in table.rows],
        })
    out = [f"SOL model K1={model.norm1} K2={model.norm2} l1={fileformat.fmt(model.l1)} "
           f"l2={fileformat.fmt(model.l2)}, loops gamma_(k={k},n), {table.variant} integrands",
           f"triangle bound C({table.radius}) = {fileformat.fmt(table.constant)}", "",
           f"{'n':>4}  {'|integral|':>16}  {'area lower bound':>20}"]
    for n, s, b in table.rows:
        bound = "no radius-R filling" if b is None else fileformat.fmt(b)
        out.append(f"{n:>4}  {fileformat.fmt(s):>16}  {bound:>20}")
    if table.asymptotically_infinite_area:
        out += ["", "asymptotically infinite area: the group is not compactly presented"]
    return "\n".join(out) + "\n"


def build_parser():
    p = argparse.ArgumentParser(prog="dehnlie", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check grading, field separation and Jacobi")
    v.add_argument("target", help="algebra file or example:NAME")

    a = sub.add_parser("analyze", help="full obstruction report and classification")
    a.add_argument("target")
    a.add_argument("--format", choices=["text", "structured", "json"], default="text")

    b = sub.add_parser("blowup", help="write the degree-zero blow-up as an algebra file")
    b.add_argument("target")
    b.add_argument("-o", "--output", required=True)

    d = sub.add_parser("diagram", help="weight diagram as SVG or ASCII")
    d.add_argument("target")
    d.add_argument("-o", "--output", required=True)
    d.add_argument("--ascii", action="store_true")

    s = sub.add_parser("stokes", help="area lower bounds for SOL loops")
    s.add_argument("--model", default="real", help="real or padic:p,q")
    s.add_argument("--l1", type=Fraction, default=None)
    s.add_argument("--l2", type=Fraction, default=None)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--nmax", type=int, default=8)
    s.add_argument("--radius", type=int, default=4)
    s.add_argument("--format", choices=["text", "structured", "json"], default="text")

    e = sub.add_parser("examples", help="list or show corpus algebras")
    e.add_argument("action", nargs="?", default="list", choices=["list", "show"])
    e.add_argument("name", nargs="?")
    return p


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "validate":
            alg = load_target(args.target)
            violations = validate(alg)
            for viol in violations:
                print(viol, file=out)
            if violations:
                return 1
            print(f"{alg.name}: valid ({alg.dim}-dimensional)", file=out)
        elif args.command == "analyze":
            out.write(run_analyze(args.target, args.format))
        elif args.command == "blowup":
            res = blow_up(load_valid(args.target))
            check = verify_blow_up(res)
            if not check.ok:
                print("blow-up check failed: " + ", ".join(check.failures()), file=sys.stderr)
                return 2
            _write(args.output, fileformat.serialize(res.blown_up))
            print(f"{res.blown_up.name}: dim {res.blown_up.dim}, kernel dim {res.kernel_dim}",
                  file=out)
        elif args.command == "diagram":
            alg = load_valid(args.target)
            _write(args.output, diagram.render_diagram(alg, "ascii" if args.ascii else "svg"))
        elif args.command == "stokes":
            out.write(run_stokes(args.model, args.l1, args.l2, args.k, args.nmax, args.radius,
                                 args.format))
        elif args.command == "examples":
            if args.action == "list":
                for name in corpus.names():
                    print(f"{name:16} {corpus.DESCRIPTIONS[name]}", file=out)
            else:
                if not args.name:
                    print("examples show needs a NAME", file=sys.stderr)
                    return 1
                out.write(fileformat.serialize(load_target("example:" + args.name)))
    except (ParseError, ValidationError, InvalidInput, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DehnlieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
