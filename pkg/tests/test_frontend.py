import json
from fractions import Fraction

import pytest

from qpcat.frontend import report as rp
from qpcat.frontend.cli import FAILED, INPUT_ERROR, OK, UNDETERMINED, main
from qpcat.frontend.dsl import ParseError, format_document, parse

EXAMPLE = """\
vertex 1 2 3;
arrow a : 1 -> 2 deg -1;
arrow b : 3 -> 1;
arrow c : 2 -> 3 deg 0;
n = 4;
potential = a b c;
"""


def _write(tmp_path, text, name="in.qp"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_example():
    doc = parse(EXAMPLE)
    assert doc.vertices == ["1", "2", "3"]
    assert doc.arrows[1] == ("b", "3", "1", 0)
    assert doc.n == 4
    assert doc.potential == [(Fraction(1), ("a", "b", "c"))]
    assert doc.build_potential().to_str() == "abc"


def test_parse_coefficients_and_comments():
    doc = parse("""# loops
vertex x;
arrow u : x -> x;
arrow v : x -> x;
n = 3;
potential = -2/3 u v u - v v v + 4 u u u;  # trailing
""")
    assert [c for c, _ in doc.potential] == [Fraction(-2, 3), Fraction(-1), Fraction(4)]


def test_zero_potential_and_no_arrows():
    doc = parse("vertex 1 2;\nn = 3;\npotential = 0;\n")
    assert doc.potential == [] and doc.arrows == []
    assert not doc.build_potential().terms


def test_missing_n():
    with pytest.raises(ParseError, match="missing 'n"):
        parse("vertex 1;\n")


def test_composability_error_has_position():
    text = "vertex 1 2 3;\narrow a : 1 -> 2;\narrow b : 2 -> 3;\narrow c : 3 -> 1;\nn = 3;\npotential = a b c;\n"
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == 6
    assert exc.value.col == 13
    assert "cannot follow" in exc.value.message


@pytest.mark.parametrize("text", [
    "vertex 1;\narrow a : 1 -> 9;\nn = 3;\n",
    "vertex 1;\nn = 3;\nn = 4;\n",
    "vertex 1 1;\nn = 3;\n",
    "vertex 1;\narrow a : 1 -> 1;\narrow a : 1 -> 1;\nn = 3;\n",
    "vertex 1;\nn = 3;\npotential = z;\n",
    "vertex 1 2;\narrow a : 1 -> 2;\nn = 3;\npotential = a;\n",
    "vertex 1;\nn = 3\n",
    "vertex 1;\nfoo;\n",
    "vertex 1;\nn = 3;\n@\n",
    "vertex 1;\narrow a : 1 -> 1 deg x;\nn = 3;\n",
])
def test_diagnostics_carry_position(text):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line >= 1 and exc.value.col >= 1
    assert str(exc.value).startswith(f"{exc.value.line}:{exc.value.col}: ")


def test_reserved_names_rejected():
    with pytest.raises(ParseError):
        parse("vertex 1;\narrow t_1 : 1 -> 1;\nn = 3;\n")


@pytest.mark.parametrize("diagrammatic", [False, True])
def test_round_trip(diagrammatic):
    text = EXAMPLE if not diagrammatic else EXAMPLE.replace("a b c", "c b a")
    doc = parse(text, diagrammatic=diagrammatic)
    again = parse(format_document(doc), diagrammatic=diagrammatic)
    assert again == doc
    assert again.build_potential().to_str() == "abc"


def test_diagrammatic_reads_left_to_right():
    doc = parse(EXAMPLE.replace("a b c", "c b a"), diagrammatic=True)
    assert doc.potential == parse(EXAMPLE).potential


# -- CLI

def test_cli_gamma(example_file, capsys):
    assert main(["gamma", example_file]) == OK
    out = capsys.readouterr().out
    assert "  d(a*) = bc" in out
    assert "  |t_1| = -3    1 -> 1" in out


def test_cli_check_ok(example_file, capsys):
    assert main(["check", example_file]) == OK
    assert "d^2 = 0 on generators: ok" in capsys.readouterr().out


def test_cli_check_wrong_degree(tmp_path, capsys):
    f = _write(tmp_path, EXAMPLE.replace("n = 4", "n = 3"))
    assert main(["check", f]) == FAILED
    assert "degree check: FAILED" in capsys.readouterr().out


def test_cli_h0_finite(example_file, capsys):
    assert main(["h0", example_file]) == OK
    out = capsys.readouterr().out
    assert "dimension: 5" in out
    assert "basis: e1 e2 e3 b c" in out


def test_cli_h0_infinite(tmp_path, capsys):
    f = _write(tmp_path, "vertex 1;\narrow x : 1 -> 1;\nn = 3;\npotential = 0;\n")
    assert main(["h0", f]) == FAILED
    assert "witness cycle: x" in capsys.readouterr().out


def test_cli_h0_undetermined(tmp_path, capsys):
    f = _write(tmp_path, "vertex 1;\narrow x : 1 -> 1;\narrow y : 1 -> 1;\nn = 3;\n"
                         "potential = x x y - x y y;\n")
    assert main(["h0", f, "--max-steps", "1", "--max-basis", "3"]) == UNDETERMINED


@pytest.mark.parametrize("argv", [
    ["gamma", "/nonexistent/file.qp"],
    ["frobnicate"],
    ["orbit", "--n", "3", "--m", "0"],
    ["orbit", "--type", "D", "--n", "3", "--m", "1"],
    ["orbit", "--n", "3", "--m", "1", "--checks", "bogus"],
])
def test_cli_input_errors(argv, capsys):
    assert main(argv) == INPUT_ERROR


def test_cli_parse_error_is_input_error(tmp_path, capsys):
    f = _write(tmp_path, "vertex 1;\n")
    assert main(["check", f]) == INPUT_ERROR
    assert ":2:1: missing" in capsys.readouterr().err


def test_cli_n_below_three(tmp_path, capsys):
    f = _write(tmp_path, "vertex 1;\nn = 2;\n")
    assert main(["gamma", f]) == INPUT_ERROR


def test_cli_orbit(capsys):
    assert main(["orbit", "--n", "3", "--m", "2"]) == OK
    out = capsys.readouterr().out
    assert "15 objects" in out and "0 violations" in out


def test_cli_report_requires_json(example_file):
    assert main(["report", example_file]) == INPUT_ERROR


def _json_run(argv, path):
    assert main(argv + ["--json", str(path)]) in (OK, FAILED, UNDETERMINED)
    return path.read_text()


@pytest.mark.parametrize("command", ["check", "gamma", "h0", "report"])
def test_json_deterministic(command, example_file, tmp_path, capsys):
    a = _json_run([command, example_file], tmp_path / "a.json")
    b = _json_run([command, example_file], tmp_path / "b.json")
    assert a == b
    rep = json.loads(a)
    assert rep["schema"] == rp.SCHEMA
    assert rep["command"] == command
    assert len(rep["input_sha256"]) == 64
    assert set(rep) >= {"schema", "command", "input_sha256", "verdicts", "bounds", "version"}


def test_json_report_content(example_file, tmp_path, capsys):
    rep = json.loads(_json_run(["report", example_file], tmp_path / "r.json"))
    v = rep["verdicts"]
    assert v["check"]["d_squared"]["passed"] is True
    assert v["h0"]["dimension"] == 5
    gens = {g["name"]: g for g in v["gamma"]["generators"]}
    assert gens["a*"]["d"] == [["bc", "1/1"]]
    assert rep["bounds"] == {"max_basis": 100000, "max_steps": 10000}


def test_json_orbit_deterministic(tmp_path, capsys):
    a = _json_run(["orbit", "--n", "3", "--m", "1"], tmp_path / "a.json")
    b = _json_run(["orbit", "--n", "3", "--m", "1"], tmp_path / "b.json")
    assert a == b
    assert json.loads(a)["verdicts"]["count"] == 9


def test_rat_format():
    assert rp.rat(Fraction(-2, 4)) == "-1/2"
    assert rp.rat(Fraction(3)) == "3/1"
