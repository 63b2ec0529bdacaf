import csv
import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from gridres import make_grid, resolving_strength
from gridres.cli import CONJECTURE_COLUMNS, TABLE_COLUMNS, main, parse_set

SCHEMA = json.loads(resources.files("gridres").joinpath("schemas/report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return code, report


def test_verify_pass_and_fail(capsys):
    code, rep = run_json(capsys, "verify", "--grid", "3x4x5", "--set", "(0,0,0);(2,0,0);(0,3,0)")
    assert code == 0 and rep["result"]["passed"] and rep["result"]["provenance"] == "verification"
    code, rep = run_json(capsys, "verify", "--grid", "2x2x2", "--set", "(0,0,0);(1,0,0)", "--k", "1")
    assert code == 1
    assert rep["result"]["strength"] == 0
    assert rep["result"]["witness"] == {"u": "(0,1,0)", "v": "(0,0,1)", "count": 0}


def test_verify_level(capsys):
    V = ";".join(f"({x},{y},{z})" for x in range(2) for y in range(2) for z in range(2))
    assert run_json(capsys, "verify", "--grid", "2x2x2", "--set", V, "--k", "4")[0] == 0
    assert run_json(capsys, "verify", "--grid", "2x2x2", "--set", V, "--k", "5")[0] == 1


def test_verify_set_file(capsys, tmp_path):
    f = tmp_path / "basis.txt"
    f.write_text("# corner basis\n(0,0,0)\n(2,0,0); (0,3,0)  # two more\n")
    code, rep = run_json(capsys, "verify", "--grid", "3x4x5", "--set", f"@{f}")
    assert code == 0 and len(rep["result"]["set"]) == 3


def test_parse_errors_report_position(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--grid", "3x3x3", "--set", "(0,0,0);(1,x,0)")
    assert code == 64 and "line 1" in err and "column 9" in err
    f = tmp_path / "bad.txt"
    f.write_text("(0,0,0)\n\n  (5,0,0)\n")
    code, _, err = run(capsys, "verify", "--grid", "3x3x3", "--set", f"@{f}")
    assert code == 64 and "line 3" in err


def test_construct_round_trip(capsys):
    for name, k in [("odd-k", "3"), ("even-k", "2"), ("face", "5")]:
        code, rep = run_json(capsys, "construct", name, "--grid", "3x3x3", "--k", k)
        assert code == 0 and rep["result"]["provenance"] == "construction"
        g = make_grid([3, 3, 3])
        S = parse_set(";".join(rep["result"]["set"]), g)
        assert len(S) == rep["result"]["size"]
        assert resolving_strength(S).strength >= rep["result"]["k_claimed"]


def test_construct_corner_and_four_point(capsys):
    code, rep = run_json(capsys, "construct", "corner-basis", "--grid", "3x4x5")
    assert code == 0 and rep["result"]["size"] == 3
    code, rep = run_json(capsys, "construct", "four-point", "--grid", "3x3x3", "--h", "2", "--h-prime", "0",
                         "--i", "1", "--j", "2")
    assert code == 0 and rep["result"]["size"] == 4 and rep["result"]["verified"]["strength"] >= 1


def test_construct_domain_errors(capsys):
    assert run(capsys, "construct", "odd-k", "--grid", "2x2x3", "--k", "2")[0] == 64
    assert run(capsys, "construct", "odd-k", "--grid", "2x2x3")[0] == 64


def test_construct_unverified_above_cap(capsys):
    code, rep = run_json(capsys, "construct", "odd-k", "--grid", "6x6x6", "--k", "3")
    assert code == 0 and rep["result"]["verified_flag"] is False
    code, rep = run_json(capsys, "construct", "odd-k", "--grid", "6x6x6", "--k", "3", "--verify-constructions")
    assert rep["result"]["verified_flag"] is True


def test_predict(capsys):
    code, rep = run_json(capsys, "predict", "--grid", "3x3x3", "--k", "10")
    assert code == 0
    r = rep["result"]
    assert r["status"] == "upper_bound_only" and r["value"] == 26 and r["conjectured"]["value"] == 24
    assert r["alpha_m"] == 10 and r["alpha_M"] == 12
    code, rep = run_json(capsys, "predict", "--grid", "2x2x2", "--k", "4")
    assert rep["result"]["status"] == "nonexistent"


def test_unit_factor_note(capsys):
    code, rep = run_json(capsys, "solve", "--grid", "1x4x5", "--k", "1")
    assert code == 0 and rep["grid"] == "4x5"
    assert any("unit factors" in n for n in rep["notes"])


def test_solve_exit_codes(capsys):
    code, rep = run_json(capsys, "solve", "--grid", "2x2x2", "--k", "3")
    assert code == 0 and rep["result"]["size"] == 7 and rep["result"]["provenance"] == "exact-search"
    code, rep = run_json(capsys, "solve", "--grid", "2x2x2", "--k", "5")
    assert code == 2 and rep["result"]["status"] == "nonexistent"
    code, rep = run_json(capsys, "solve", "--grid", "6x6x6", "--k", "6", "--time-budget", "0.01",
                         "--bounds", "trivial")
    assert code == 3 and rep["result"]["status"] == "budget_exceeded"
    code, rep = run_json(capsys, "solve", "--grid", "3x3x3", "--k", "4", "--mode", "greedy")
    assert code == 0 and rep["result"]["status"] == "feasible"


def test_solve_set_round_trip(capsys):
    _, rep = run_json(capsys, "solve", "--grid", "2x3x3", "--k", "4")
    S = parse_set(";".join(rep["result"]["set"]), make_grid([2, 3, 3]))
    assert resolving_strength(S).strength >= 4


def test_table_json_and_csv(capsys):
    code, rep = run_json(capsys, "table", "--grids", "2x2x2,2x2x3", "--k", "1..5")
    assert code == 0
    rows = rep["result"]["rows"]
    assert len(rows) == 10
    for row in rows:
        if row["predicted_status"] != "upper_bound_only":
            assert row["agreement"] is True, row
    code, out, _ = run(capsys, "table", "--grids", "2x2x2", "--k", "1,2", "--format", "csv")
    reader = csv.reader(io.StringIO(out))
    header = next(reader)
    assert tuple(header) == TABLE_COLUMNS
    body = list(reader)
    assert [r[1] for r in body] == ["1", "2"] and body[0][6] == "optimal"


def test_conjecture(capsys):
    code, rep = run_json(capsys, "conjecture", "--grid", "2x2x2")
    assert code == 0 and rep["result"]["rows"] == [] and rep["notes"]
    code, out, _ = run(capsys, "conjecture", "--grid", "2x3x3", "--format", "csv")
    header = next(csv.reader(io.StringIO(out)))
    assert tuple(header) == CONJECTURE_COLUMNS


def test_lemmas_small(capsys):
    code, rep = run_json(capsys, "lemmas", "--cases", "200", "--max-side", "4", "--seed", "3")
    assert code == 0 and rep["seed"] == 3
    assert all(s["violations"] == 0 for s in rep["result"]["suites"])


def test_text_format(capsys):
    code, out, _ = run(capsys, "predict", "--grid", "2x2x2", "--k", "2", "--format", "text")
    assert code == 0 and out.startswith("predict 2x2x2") and "value: 7" in out


def test_csv_rejected_for_non_tabular(capsys):
    assert run(capsys, "predict", "--grid", "2x2x2", "--k", "2", "--format", "csv")[0] == 64


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 64
    assert run(capsys, "verify", "--grid", "2x0x3", "--set", "(0,0,0)")[0] == 64
    assert run(capsys, "solve", "--grid", "2x2x2", "--k", "0")[0] == 64


def test_table_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("GRIDRES_TABLE_CAP", "5")
    assert run(capsys, "solve", "--grid", "2x2x2", "--k", "2")[0] == 64


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gridres", "predict", "--grid", "2x2x2", "--k", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["value"] == 7
