import json
import subprocess
import sys
from fractions import Fraction

import pytest

from dehnlie import corpus, diagram, fileformat
from dehnlie.algebra import GradedLieAlgebra, validate
from dehnlie.blowup import blow_up
from dehnlie.cli import main, run_analyze, run_stokes
from dehnlie.errors import ParseError, UnsupportedDimension, ValidationError


def _doc(name="heisenberg"):
    return fileformat.to_dict(corpus.load(name))


def _write(tmp_path, doc, name="alg.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(p)


# file format

@pytest.mark.parametrize("name", corpus.names())
def test_round_trip(name):
    alg = corpus.load(name)
    again = fileformat.parse(fileformat.serialize(alg))
    assert fileformat.to_dict(again) == fileformat.to_dict(alg)
    tilde = blow_up(again).blown_up
    reparsed = fileformat.parse(fileformat.serialize(tilde))
    assert not validate(reparsed)


def test_rationals_as_strings():
    text = fileformat.serialize(corpus.sol(Fraction(3, 2)))
    assert '"3/2"' in text or '"-3/2"' in text


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        fileformat.parse('{\n  "name": "x",\n  oops\n}')
    assert exc.value.line == 3 and exc.value.column == 3


def test_unknown_key_rejected():
    doc = _doc()
    doc["colour"] = "red"
    with pytest.raises(ParseError, match="colour"):
        fileformat.from_dict(doc)
    doc = _doc()
    doc["basis"][0]["extra"] = 1
    with pytest.raises(ParseError, match="basis\\[0\\]"):
        fileformat.from_dict(doc)


def test_missing_key_and_bad_rational():
    doc = _doc()
    del doc["fields"]
    with pytest.raises(ParseError, match="fields"):
        fileformat.from_dict(doc)
    doc = _doc()
    doc["basis"][0]["weight"] = ["1/0"]
    with pytest.raises(ParseError):
        fileformat.from_dict(doc)
    doc = _doc()
    doc["basis"][0]["weight"] = [0.5]
    with pytest.raises(ParseError):
        fileformat.from_dict(doc)


def test_duplicate_bracket_rejected():
    doc = _doc()
    br = dict(doc["brackets"][0])
    br["left"], br["right"] = br["right"], br["left"]
    doc["brackets"].append(br)
    with pytest.raises(ParseError, match="twice"):
        fileformat.from_dict(doc)


def test_unknown_basis_element():
    doc = _doc()
    doc["brackets"][0]["terms"][0]["basis"] = "nope"
    with pytest.raises(ParseError, match="nope"):
        fileformat.from_dict(doc)


def test_load_validated(tmp_path):
    doc = _doc()
    doc["basis"][2]["weight"] = ["5"]
    path = _write(tmp_path, doc)
    with pytest.raises(ValidationError) as exc:
        fileformat.load_validated(path)
    assert exc.value.violations[0].kind == "grading"


# diagrams

def test_ascii_higher_sol():
    art = diagram.render_ascii(corpus.higher_sol())
    assert "+" in art
    assert art.count("*") == 6
    lines = [l for l in art.splitlines() if l.strip()]
    assert len(lines) == 3


def test_ascii_abels_a4():
    art = diagram.render_ascii(corpus.abels_a4())
    for label in ("*12*", "*23*", "*34*", "13", "24", "_14_"):
        assert label in art
    assert "+" not in art


def test_ascii_multiplicity():
    art = diagram.render_ascii(corpus.abels_2())
    assert "(2)" in art and "_" in art


def test_svg():
    svg = diagram.render_svg(corpus.abels_a4())
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count('font-weight="bold"') == 3
    assert svg.count('text-decoration="underline"') == 1
    assert svg.count("<circle") == 6


def test_unsupported_dimension():
    h = corpus.heisenberg()
    basis = [type(b)(b.name, b.field, b.weight * 3) for b in h.basis]
    alg = GradedLieAlgebra("h3", 3, 1, h.fields, basis, h.brackets)
    with pytest.raises(UnsupportedDimension):
        diagram.render_diagram(alg)
    assert diagram.render_ascii(h)


# command line

def test_analyze_reports():
    rep = json.loads(run_analyze("example:abels-a4", "structured"))
    assert rep["homology"]["dim_H2_0"] == 0 and rep["killing"]["dim_Kill_0"] == 0
    assert rep["classification"]["verdict"] == "Quadratic"
    rep = json.loads(run_analyze("example:abels-2", "json"))
    assert rep["killing"]["dim_Kill_0"] == 1
    assert rep["classification"]["verdict"] == "PolyAtMostCubic"
    text = run_analyze("example:sol-1-1")
    assert "verdict: ExponentialDehn" in text


@pytest.mark.parametrize("name", corpus.names())
def test_structured_output_byte_stable(name):
    a = run_analyze("example:" + name, "structured")
    b = run_analyze("example:" + name, "structured")
    assert a == b
    json.loads(a)


def test_analyze_byte_stable_across_processes():
    cmd = [sys.executable, "-m", "dehnlie", "analyze", "example:abels-2", "--format", "structured"]
    outs = {subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
            for _ in range(2)}
    assert len(outs) == 1


def test_main_exit_codes(tmp_path, capsys):
    assert main(["validate", "example:heisenberg"]) == 0
    assert "valid" in capsys.readouterr().out
    bad = _write(tmp_path, "{ not json")
    assert main(["analyze", bad]) == 1
    assert "error" in capsys.readouterr().err
    doc = _doc()
    doc["basis"][2]["weight"] = ["5"]
    invalid = _write(tmp_path, doc, "invalid.json")
    assert main(["validate", invalid]) == 1
    assert "grading" in capsys.readouterr().out
    assert main(["analyze", invalid]) == 1
    assert main(["analyze", "example:no-such"]) == 1


def test_blowup_command(tmp_path, capsys):
    out = tmp_path / "bu.json"
    assert main(["blowup", "example:sol-1-1", "-o", str(out)]) == 0
    alg = fileformat.load_validated(str(out))
    assert alg.dim == 3
    assert "kernel dim 1" in capsys.readouterr().out


def test_diagram_command(tmp_path):
    out = tmp_path / "d.svg"
    assert main(["diagram", "example:abels-a4", "-o", str(out)]) == 0
    assert out.read_text().startswith("<svg")
    assert main(["diagram", "example:higher-sol", "-o", str(out), "--ascii"]) == 0
    assert "*1*" in out.read_text()


def test_examples_command(capsys):
    assert main(["examples"]) == 0
    listing = capsys.readouterr().out
    for name in ("sol-lambda", "sol-padic", "higher-sol", "abels-a4", "abels-2", "sl3-v10",
                 "sl3-v20", "sl3-v11", "example-13dim", "heisenberg", "filiform-4"):
        assert name in listing
    assert main(["examples", "show", "abels-a4"]) == 0
    assert fileformat.parse(capsys.readouterr().out).dim == 6
    assert main(["examples", "show"]) == 1


def test_file_target(tmp_path, capsys):
    path = _write(tmp_path, _doc("abels-a4"))
    assert main(["analyze", path, "--format", "structured"]) == 0
    assert json.loads(capsys.readouterr().out)["classification"]["verdict"] == "Quadratic"


def test_stokes_command(capsys):
    assert main(["stokes", "--model", "real", "--l1", "2", "--l2", "2", "--k", "2",
                 "--nmax", "4", "--radius", "2"]) == 0
    text = capsys.readouterr().out
    assert "32" in text
    rep = json.loads(run_stokes("padic:2,3", None, None, 1, 5, 2, "structured"))
    assert rep["asymptotically_infinite_area"]
    assert [r["integral_norm"] for r in rep["rows"]] == ["1", "2", "4", "8", "16"]
    assert main(["stokes", "--model", "bogus"]) == 1
    assert main(["stokes", "--l1", "3", "--l2", "2"]) == 1
