"""JSON algebra files.  Rationals are written as strings "p/q"."""
from __future__ import annotations

import json
from fractions import Fraction

from .algebra import BasisElement, FieldComponent, GradedLieAlgebra, validate
from .errors import InvalidInput, ParseError, ValidationError

TOP_KEYS = {"name", "weight_dim", "a_rank", "fields", "basis", "brackets", "a_abelian"}
REQUIRED = TOP_KEYS - {"a_abelian"}


def fmt(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _rational(x, where):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"{where}: expected a rational string like \"p/q\"")
    try:
        return Fraction(x.strip()) if isinstance(x, str) else Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: not a rational number: {x!r}") from None


def _keys(obj, allowed, required, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    extra = sorted(set(obj) - allowed)
    if extra:
        raise ParseError(f"{where}: unknown key {extra[0]!r}")
    missing = sorted(required - set(obj))
    if missing:
        raise ParseError(f"{where}: missing key {missing[0]!r}")


def _list(obj, where):
    if not isinstance(obj, list):
        raise ParseError(f"{where}: expected a list")
    return obj


def _int(obj, where):
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ParseError(f"{where}: expected an integer")
    return obj


def from_dict(doc) -> GradedLieAlgebra:
    _keys(doc, TOP_KEYS, REQUIRED, "document")
    if not isinstance(doc["name"], str):
        raise ParseError("name: expected a string")
    wd = _int(doc["weight_dim"], "weight_dim")
    a_rank = _int(doc["a_rank"], "a_rank")
    a_abelian = doc.get("a_abelian", True)
    if not isinstance(a_abelian, bool):
        raise ParseError("a_abelian: expected true or false")
    fields = []
    for i, f in enumerate(_list(doc["fields"], "fields")):
        where = f"fields[{i}]"
        _keys(f, {"id", "kind", "residue_prime"}, {"id", "kind"}, where)
        rp = f.get("residue_prime")
        if rp is not None:
            rp = _int(rp, where + ".residue_prime")
        try:
            fields.append(FieldComponent(str(f["id"]), f["kind"], rp))
        except InvalidInput as exc:
            raise ParseError(f"{where}: {exc}") from None
    basis = []
    for i, b in enumerate(_list(doc["basis"], "basis")):
        where = f"basis[{i}]"
        _keys(b, {"name", "field", "weight"}, {"name", "field", "weight"}, where)
        w = tuple(_rational(x, f"{where}.weight") for x in _list(b["weight"], where + ".weight"))
        basis.append(BasisElement(str(b["name"]), str(b["field"]), w))
    index = {b.name: i for i, b in enumerate(basis)}

    def lookup(name, where):
        if name not in index:
            raise ParseError(f"{where}: unknown basis element {name!r}")
        return index[name]

    brackets = {}
    seen = set()
    for i, br in enumerate(_list(doc["brackets"], "brackets")):
        where = f"brackets[{i}]"
        _keys(br, {"left", "right", "terms"}, {"left", "right", "terms"}, where)
        a, b = lookup(br["left"], where + ".left"), lookup(br["right"], where + ".right")
        pair = frozenset((a, b))
        if pair in seen:
            raise ParseError(f"{where}: bracket [{br['left']},{br['right']}] listed twice")
        seen.add(pair)
        terms = {}
        for j, t in enumerate(_list(br["terms"], where + ".terms")):
            tw = f"{where}.terms[{j}]"
            _keys(t, {"basis", "coeff"}, {"basis", "coeff"}, tw)
            k = lookup(t["basis"], tw + ".basis")
            terms[k] = terms.get(k, 0) + _rational(t["coeff"], tw + ".coeff")
        brackets[(a, b)] = terms
    try:
        return GradedLieAlgebra(doc["name"], wd, a_rank, fields, basis, brackets, a_abelian)
    except InvalidInput as exc:
        raise ParseError(str(exc)) from None


def parse(text: str) -> GradedLieAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_dict(doc)


def load(path) -> GradedLieAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def load_validated(path) -> GradedLieAlgebra:
    alg = load(path)
    violations = validate(alg)
    if violations:
        raise ValidationError(violations)
    return alg


def to_dict(alg: GradedLieAlgebra) -> dict:
    doc = {
        "name": alg.name,
        "weight_dim": alg.weight_dim,
        "a_rank": alg.a_rank,
        "fields": [{"id": f.id, "kind": f.kind, **({"residue_prime": f.residue_prime}
                                                  if f.residue_prime is not None else {})}
                   for f in alg.fields],
        "basis": [{"name": b.name, "field": b.field, "weight": [fmt(x) for x in b.weight]}
                  for b in alg.basis],
        "brackets": [{"left": alg.names[i], "right": alg.names[j],
                      "terms": [{"basis": alg.names[k], "coeff": fmt(c)}
                                for k, c in sorted(terms.items())]}
                     for (i, j), terms in sorted(alg.brackets.items())],
    }
    if not alg.a_abelian:
        doc["a_abelian"] = False
    return doc


def serialize(alg: GradedLieAlgebra) -> str:
    return json.dumps(to_dict(alg), indent=2, ensure_ascii=False) + "\n"
