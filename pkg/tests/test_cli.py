import csv
import io
import json
import subprocess
import sys

import pytest

from golden import TABLE1, TABLE3, TABLE4
from latticepaths.cli import FAMILIES, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_rect_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "rect", "--size", "7", "--format", "csv")
    assert code == 0
    assert [[int(x) for x in row] for row in csv.reader(io.StringIO(out))] == TABLE1


def test_table_triangle_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "schroder", "--size", "8", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["p", "q", "value"]
    assert {(int(p), int(q)): int(v) for p, q, v in rows[1:]} == {
        (p, q): v for p, row in enumerate(TABLE4) for q, v in enumerate(row)
    }


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--family", "schroder", "--size", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"family": "schroder", "size": 2, "kind": "triangle", "rows": [["1"], ["1", "2"]]}


def test_table_md_single_cell(capsys):
    code, out, _ = run(capsys, "table", "--family", "catalan", "--size", "1", "--format", "md")
    assert code == 0
    assert out.splitlines()[-1] == "| 0 | 1 |"


@pytest.mark.parametrize("family", FAMILIES)
def test_table_json_round_trip(capsys, family):
    code, out, _ = run(capsys, "table", "--family", family, "--size", "9", "--format", "json")
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["--family", "delannoy", "-p", "4", "-q", "4", "--method", "closed"], "321"),
        (["--family", "rect", "-p", "0", "-q", "9", "--method", "recurrence"], "1"),
        (["--family", "schroder", "-p", "5", "-q", "5", "--method", "oracle"], "394"),
    ],
)
def test_value_examples(capsys, argv, expected):
    code, out, _ = run(capsys, "value", *argv)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize("family", FAMILIES)
def test_value_methods_agree(capsys, family):
    for p in range(10):
        for q in range(10):
            if family in ("catalan", "schroder") and q > p:
                continue
            if family in ("delannoy", "schroder") and max(p, q) > 7:
                continue
            outs = set()
            for method in ("recurrence", "closed", "oracle"):
                code, out, _ = run(capsys, "value", "--family", family, "-p", str(p), "-q", str(q), "--method", method)
                assert code == 0
                outs.add(out)
            assert len(outs) == 1, (family, p, q)


def test_value_above_diagonal_is_usage_error(capsys):
    code, _, err = run(capsys, "value", "--family", "catalan", "-p", "1", "-q", "2")
    assert code == 2
    assert "q <= p" in err


def test_value_budget_exceeded(capsys, monkeypatch):
    monkeypatch.setenv("LATTICE_ORACLE_BUDGET", "50")
    code, out, _ = run(capsys, "value", "--family", "delannoy", "-p", "6", "-q", "6", "--method", "oracle")
    assert code == 3
    assert out == ""


def test_verify_a1(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "A1", "--bound", "30")
    assert code == 0
    assert "A1: Verified" in out


def test_verify_gf2_json(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "GF2", "--bound", "10", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    (report,) = doc["reports"]
    assert report["status"] == "Refuted"
    assert report["errata_expected"] is True
    assert report["counterexamples"][0] == {"params": [3], "lhs": "22", "rhs": "24"}


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "all", "--bound", "15", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert len(doc["reports"]) == 28


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "--identity", "NOPE")
    assert code == 2
    assert "NOPE" in err


def test_decompose_q3(capsys):
    code, out, _ = run(capsys, "decompose", "--matrix", "Q", "--n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["product"] == [["1", "1", "1"], ["1", "2", "3"], ["1", "3", "6"]]
    assert doc["status"] == "Verified"


def test_decompose_k(capsys):
    code, out, _ = run(capsys, "decompose", "--matrix", "K", "--n", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["factors"] == {"P": [["1"]], "D": [["1"]], "P^T": [["1"]]}
    code, out, _ = run(capsys, "decompose", "--matrix", "K", "--n", "7", "--format", "json")
    doc = json.loads(out)
    assert doc["status"] == "Verified"
    assert [[int(x) for x in row] for row in doc["product"]] == TABLE3
    code, out, _ = run(capsys, "decompose", "--matrix", "K", "--n", "4")
    assert out.rstrip().endswith("Verified")


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "-p", "1", "-q", "1", "--steps", "hv", "--constraint", "none")
    assert code == 0
    assert out.splitlines() == ["RD", "DR", "count 2"]
    code, out, _ = run(capsys, "enumerate", "-p", "1", "-q", "1", "--steps", "hvd", "--constraint", "subdiagonal")
    assert out.splitlines() == ["DR", "X", "count 2"]
    code, out, _ = run(capsys, "enumerate", "-p", "2", "-q", "0", "--steps", "hv", "--constraint", "subdiagonal")
    assert out.splitlines() == ["DD", "count 1"]


def test_enumerate_limit(capsys):
    code, out, _ = run(capsys, "enumerate", "-p", "3", "-q", "3", "--limit", "2")
    lines = out.splitlines()
    assert code == 0
    assert lines[:2] == ["RRRDDD", "RRDRDD"]
    assert lines[-1] == "count 20"


def test_errata_md(capsys):
    code, out, _ = run(capsys, "errata", "--format", "md")
    assert code == 0
    assert "## GF2" in out
    assert "(gf2)" in out
    assert "(n+2)S_{n+2}=3(2n+1)S_{n+1}-(n-1)S_n" in out
    assert "| 3 | 22 | 24 |" in out


def test_errata_json(capsys):
    code, out, _ = run(capsys, "errata", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["bound"] == 20
    entries = {e["identity"]: e for e in doc["errata"]}
    assert set(entries) == {"GF2", "S32_PRINTED"}
    assert entries["S32_PRINTED"]["anchor"].endswith("(n+2)S_{n+2}=3(2n+1)S_{n+1}-(n-1)S_n")
    assert entries["S32_PRINTED"]["minimal_counterexample"] == {"params": [0], "lhs": "12", "rhs": "7"}
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_out_flag(capsys, tmp_path):
    target = tmp_path / "t.json"
    code, out, _ = run(capsys, "--out", str(target), "table", "--family", "rect", "--size", "3", "--format", "json")
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["rows"][2] == ["1", "3", "6"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["table", "--family", "rect", "--size", "0"],
        ["table", "--family", "nope", "--size", "3"],
        ["table", "--family", "rect", "--size", "x"],
        ["value", "--family", "rect", "-p", "-1", "-q", "2"],
        ["decompose", "--matrix", "Q", "--n", "0"],
        ["decompose", "--matrix", "Z", "--n", "2"],
        ["enumerate", "-p", "1", "-q", "1", "--steps", "diag"],
        ["verify", "--bound", "0"],
        ["errata", "--format", "csv"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "latticepaths", "value", "--family", "catalan", "-p", "7", "-q", "7"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "429"
