import csv
import io
import json
import subprocess
import sys

import pytest

from conifold.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_csv_row_2_4(capsys):
    code, out, _ = run(capsys, "refined-table", "--qmax", "4", "--tmax", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    row = next(r for r in rows if (r["l"], r["m"]) == ("2", "4"))
    assert row["coeffs"] == "1,2,1"
    assert row["s_min"] == "-2"
    assert row["P_lm"] == "4"
    assert json.loads(row["sl2"]) == {"2": 1, "0": 1}
    assert list(rows[0]) == ["l", "m", "s_min", "coeffs", "P_lm", "sl2"]


def test_table_trivial_box(capsys):
    code, out, _ = run(capsys, "refined-table", "--qmax", "0", "--tmax", "0", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [(r["l"], r["m"], r["coeffs"]) for r in rows] == [(0, 0, ["1"])]


def test_table_chamber_one(capsys):
    code, out, _ = run(capsys, "refined-table", "--chamber", "1", "--qmax", "3", "--tmax", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["l"], r["m"], r["coeffs"]) for r in rows] == [("0", "0", "1"), ("1", "1", "1")]


def test_table_text(capsys):
    code, out, _ = run(capsys, "refined-table", "--qmax", "4", "--tmax", "2")
    assert code == 0
    assert "t^(-1) + 2 + t" in out
    assert out.endswith("\n")


def test_table_to_file(tmp_path, capsys):
    path = tmp_path / "table.json"
    code, out, _ = run(capsys, "refined-table", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["box"] == [8, 4]


@pytest.mark.parametrize("which", ["all", "inverse", "exterior", "topstring", "sl2"])
def test_verify_passes(capsys, which):
    code, out, _ = run(capsys, "verify", which, "--qmax", "8", "--tmax", "4")
    assert code == 0
    assert "FAIL" not in out


def test_verify_smallest_box(capsys):
    assert run(capsys, "verify", "inverse", "--qmax", "1", "--tmax", "1")[0] == 0


def test_verify_single_chamber(capsys):
    code, out, _ = run(capsys, "verify", "exterior", "--chamber", "3", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1 and reports[0]["detail"] == "chamber=3"


def test_verify_negative_control(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "all", "--inject-sign-flip", "2,0", "--report", str(report))
    assert code == 1
    data = json.loads(report.read_text(encoding="utf-8"))
    inverse = next(r for r in data if r["identity"] == "inverse")
    assert inverse["status"] == "fail"
    assert (inverse["discrepancies"][0]["l"], inverse["discrepancies"][0]["m"]) == (1, 2)
    assert set(inverse) >= {"identity", "box", "status", "discrepancies"}
    assert "at (l=1, m=2)" in out


@pytest.mark.parametrize("argv", [
    ["refined-table", "--qmax", "-1"],
    ["refined-table", "--chamber", "-2"],
    ["refined-table", "--format", "xml"],
    ["verify", "nonsense"],
    ["verify", "all", "--tmax", "x"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("expr, text", [
    ("blowup(product(A1,Gm))", "t^2"),
    ("pt", "1"),
    ("E", "1 - 2*t^(1/2) + t"),
])
def test_weightpoly(capsys, expr, text):
    code, out, _ = run(capsys, "weightpoly", expr)
    assert code == 0
    assert out == text + "\n"


def test_weightpoly_json(capsys):
    code, out, _ = run(capsys, "weightpoly", "E", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"s_min": 0, "coeffs": ["1", "-2", "1"]}


def test_weightpoly_parse_error(capsys):
    code, out, err = run(capsys, "weightpoly", "sum(pt,pt")
    assert code == 2
    assert "offset 10" in err


def test_output_is_byte_identical_across_runs():
    cmd = [sys.executable, "-m", "conifold", "refined-table", "--format", "csv"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")
    cmd = [sys.executable, "-m", "conifold", "verify", "all", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True).stdout
    b = subprocess.run(cmd, capture_output=True).stdout
    assert a == b
