import csv
import io
import json
from fractions import Fraction

import pytest

from src.restriction_cli import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_UNDETERMINED,
    EXIT_UNSATISFIED,
    main,
    parse_args,
    parse_p2_character,
)
from src.utils.errors import ValidationError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def rows_by(document, key):
    return {row[key]: row for row in document["rows"]}


def test_parse_args_requires_a_subcommand():
    with pytest.raises(SystemExit):
        parse_args([])
    args = parse_args(["check-restriction", "-i", "doc.json", "--sweep", "--dmax", "7"])
    assert args.command == "check-restriction"
    assert args.sweep and args.d_max == 7
    assert args.output is None


@pytest.mark.parametrize("command", [
    ["check-restriction", "-i", "doc.json"],
    ["walls", "-i", "doc.json"],
    ["cohomology", "-i", "doc.json"],
    ["exceptional"],
])
def test_dmax_is_accepted_by_every_subcommand(command):
    assert parse_args(command + ["--dmax", "3"]).d_max == 3
    assert parse_args(command).d_max is None


def test_negative_dmax_is_an_input_error(capsys):
    code, out, err = run(capsys, "exceptional", "--dmax", "-1")
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert err.startswith("ERROR:")


def test_check_restriction_running_example(capsys, data_dir):
    code, out, _ = run(capsys, "check-restriction", "-i", str(data_dir / "p2_running.json"), "--output", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["header"]["curve"] == "4H"
    plane = rows_by(document, "criterion")["plane_general"]
    assert (plane["lhs"], plane["rhs"], plane["satisfied"]) == ("16", "11", "true")
    langer = rows_by(document, "criterion")["langer"]
    assert (langer["lhs"], langer["rhs"], langer["satisfied"]) == ("2", "2", "false")
    assert "C integral, user-asserted" in " ".join(document["header"]["hypotheses"])


def test_check_restriction_unsatisfied(capsys, data_dir):
    code, out, _ = run(capsys, "check-restriction", "-i", str(data_dir / "p2_unsatisfied.json"), "--output", "csv")
    assert code == EXIT_UNSATISFIED
    body = [line for line in out.splitlines() if not line.startswith("#")]
    records = list(csv.DictReader(io.StringIO("\n".join(body))))
    assert records
    assert all(record["satisfied"] == "false" for record in records)


def test_check_restriction_sweep(capsys, data_dir):
    code, out, _ = run(capsys, "check-restriction", "-i", str(data_dir / "p2_wall.json"),
                       "--sweep", "--dmax", "10", "--output", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    minimal = {row["criterion"]: row["minimal_d"] for row in document["rows"]}
    assert minimal == {"flenner": 1, "bogomolov": 3, "langer": 5, "general_surface": 5, "plane_general": 4}
    assert len(document["sweep"]) == 50
    assert document["header"]["d_max"] == 10


def test_check_restriction_table_is_deterministic(capsys, data_dir):
    path = str(data_dir / "p2_running.json")
    first = run(capsys, "check-restriction", "-i", path)
    second = run(capsys, "check-restriction", "-i", path)
    assert first == second
    assert "plane_general" in first[1]


def test_check_restriction_on_custom_lattice(capsys, data_dir):
    code, out, _ = run(capsys, "check-restriction", "-i", str(data_dir / "custom_plane.json"), "--output", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["header"]["surface"] == "custom(rank 1)"
    criteria = rows_by(document, "criterion")
    assert set(criteria) == {"flenner", "bogomolov", "langer", "general_surface", "general_surface_corollary"}
    assert (criteria["langer"]["lhs"], criteria["langer"]["rhs"]) == ("5/2", "2")
    assert (criteria["general_surface"]["lhs"], criteria["general_surface"]["rhs"]) == ("5/2", "2")
    assert "H ample, user-asserted" in document["header"]["hypotheses"]


def test_check_restriction_reads_stdin(capsys, data_dir, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO((data_dir / "p2_running.json").read_text(encoding="utf-8")))
    code, out, _ = run(capsys, "check-restriction", "-i", "-", "--output", "csv")
    assert code == EXIT_OK
    assert "plane_general" in out


def test_check_restriction_writes_file(capsys, data_dir, tmp_path):
    target = tmp_path / "out" / "report.json"
    code, out, _ = run(capsys, "check-restriction", "-i", str(data_dir / "p2_running.json"),
                       "--output", "json", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["rows"]


@pytest.mark.parametrize(
    "argv",
    [
        ("check-restriction", "-i", "bad_rational.json"),
        ("check-restriction", "-i", "missing.json"),
        ("check-restriction", "-i", "p2_running.json", "--output", "svg"),
        ("check-restriction", "-i", "p2_running.json", "--depth", "40"),
    ],
)
def test_input_errors_exit_two(capsys, data_dir, argv):
    argv = tuple(str(data_dir / a) if a.endswith(".json") else a for a in argv)
    code, out, err = run(capsys, *argv)
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert err.startswith("ERROR:")


def test_bad_rational_names_its_location(capsys, data_dir):
    _, _, err = run(capsys, "cohomology", "-i", str(data_dir / "bad_rational.json"))
    assert "character.ch2" in err
    assert "zero denominator" in err


def test_cohomology_running_example(capsys, data_dir):
    code, out, _ = run(capsys, "cohomology", "-i", str(data_dir / "p2_running.json"), "--output", "json")
    assert code == EXIT_OK
    values = {row["quantity"]: row["value"] for row in json.loads(out)["rows"]}
    assert values["case"] == "(0,2)"
    assert (values["h0(E|_C)"], values["h1(E|_C)"]) == ("2", "2")
    assert (values["e"], values["g"], values["rho"]) == ("4", "3", "5")
    assert (values["dim M(v)"], values["dim U_C(r,e)"], values["codim"]) == ("4", "9", "5")
    assert values["h2(E(-C))"] == "2"
    assert values["bn_violating"] == "false"
    assert values["bn_failed_hypotheses"] == "chi(E) > r"
    assert values["chi(E) > r"] == "false"
    assert "M(v) has Picard rank 2" in values["bn_hypotheses"].split("; ")


def test_cohomology_on_hirzebruch(capsys, data_dir):
    code, out, _ = run(capsys, "cohomology", "-i", str(data_dir / "hirzebruch_f1.json"), "--output", "json")
    assert code == EXIT_OK
    values = {row["quantity"]: row["value"] for row in json.loads(out)["rows"]}
    assert values["chi(E)"] == "7"
    assert values["branch(E)"] == "single group"
    assert (values["h0(E|_C)"], values["h1(E|_C)"]) == ("8", "0")
    assert values["dim M(v)"] == "9"
    assert values["bn_failed_hypotheses"] == "a >= 2; nu.F < 0; E|_C stable: 1/2 > 37/12"
    assert values["bn_violating"] == "false"
    assert values["chi(E) > r"] == "true"
    assert values["bn_inequality"] == "-3 < 7"


def test_cohomology_reports_unexpected_sections(capsys, tmp_path):
    document = tmp_path / "unexpected.json"
    document.write_text(json.dumps({
        "surface": {"kind": "p2"},
        "character": {"ch0": 2, "ch1": ["3"], "ch2": "-1/2"},
        "curve": {"dH": 12},
    }), encoding="utf-8")
    code, out, _ = run(capsys, "cohomology", "-i", str(document), "--output", "json")
    assert code == EXIT_OK
    values = {row["quantity"]: row["value"] for row in json.loads(out)["rows"]}
    assert (values["h0(E|_C)"], values["rho"]) == ("6", "-251")
    assert values["bn_violating"] == "true"
    assert values["bn_failed_hypotheses"] == ""
    assert values["chi(E) > r"] == "true"
    assert "bn_inequality" not in values


def test_cohomology_flags_missing_picard_rank(capsys, tmp_path):
    document = tmp_path / "picard.json"
    document.write_text(json.dumps({
        "surface": {"kind": "p2"},
        "character": {"ch0": 2, "ch1": ["2"], "ch2": "-1"},
        "curve": {"dH": 6},
    }), encoding="utf-8")
    code, out, _ = run(capsys, "cohomology", "-i", str(document), "--output", "json")
    assert code == EXIT_OK
    values = {row["quantity"]: row["value"] for row in json.loads(out)["rows"]}
    assert values["rho"] == "-3"
    assert values["bn_violating"] == "true"
    assert values["bn_failed_hypotheses"] == "M(v) has Picard rank 2"


def test_cohomology_undetermined(capsys, data_dir):
    code, out, err = run(capsys, "cohomology", "-i", str(data_dir / "undetermined.json"))
    assert code == EXIT_UNDETERMINED
    assert out == ""
    assert err.startswith("UNDETERMINED: case (1,1)")
    assert "h0(E|_C) in [2, 3]" in err
    assert "h1(E|_C) in [0, 1]" in err


def test_walls_as_json(capsys, data_dir):
    code, out, _ = run(capsys, "walls", "-i", str(data_dir / "p2_wall.json"), "--output", "json")
    assert code == EXIT_OK
    walls = rows_by(json.loads(out), "element")
    assert (walls["restriction wall"]["center"], walls["restriction wall"]["radius_sq"]) == ("-5/2", "17/4")
    assert (walls["Gieseker bound wall"]["center"], walls["Gieseker bound wall"]["radius_sq"]) == ("-9/4", "49/16")
    assert walls["window_left"]["kind"] == "vertical"


def test_walls_svg_with_csv_companion(capsys, data_dir, tmp_path):
    target = tmp_path / "walls.svg"
    code, out, _ = run(capsys, "walls", "-i", str(data_dir / "p2_wall.json"), "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert target.read_text(encoding="utf-8").lstrip().startswith("<?xml")
    companion = target.with_suffix(".csv").read_text(encoding="utf-8")
    assert "restriction wall,semicircle,-5/2,17/4," in companion


def test_walls_svg_needs_a_file(capsys, data_dir):
    code, _, err = run(capsys, "walls", "-i", str(data_dir / "p2_wall.json"), "--output", "svg")
    assert code == EXIT_INPUT_ERROR
    assert "--out" in err


def test_exceptional_enumeration(capsys):
    code, out, _ = run(capsys, "exceptional", "--depth", "2", "--output", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[:2] == ["# depth: 2", "# window: (0, 1)"]
    records = list(csv.DictReader(io.StringIO("\n".join(lines[2:]))))
    assert [r["alpha"] for r in records] == sorted((r["alpha"] for r in records), key=Fraction)
    assert len(records) == 3
    assert {(r["p"], r["q"]) for r in records} == {("1", "1"), ("1", "2"), ("3", "2")}


def test_exceptional_find(capsys):
    code, out, _ = run(capsys, "exceptional", "--find", "(2,0,-2)", "--output", "json")
    assert code == EXIT_OK
    row = json.loads(out)["rows"][0]
    assert row["alpha"] == "0"
    assert row["mu0"] == "(-3+1√13)/2"
    assert json.loads(out)["header"]["character"] == "(2, (0), -2)"


def test_exceptional_bad_window(capsys):
    code, _, err = run(capsys, "exceptional", "--window", "0", "1.5")
    assert code == EXIT_INPUT_ERROR
    assert "--window hi" in err


def test_parse_p2_character():
    v = parse_p2_character(" (2, 1, -3/2) ")
    assert (v.ch0, v.ch1.coefficients, v.ch2) == (2, (1,), Fraction(-3, 2))
    with pytest.raises(ValidationError):
        parse_p2_character("(2,1)")
