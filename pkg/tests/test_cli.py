import csv
import io
import json
import subprocess
import sys

import pytest

from trispectra import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "--graph", "tri", "--n", "4")
    data = json.loads(out)
    assert code == 0 and data["vertices"] == 10 and data["edges"] == 30


@pytest.mark.parametrize("fmt, marker", [("dot", "graph"), ("mtx", "%%MatrixMarket")])
def test_build_other_formats(capsys, fmt, marker):
    code, out, _ = run(capsys, "build", "--graph", "queens", "--n", "4", "--format", fmt)
    assert code == 0 and marker in out


def test_spectrum_verified(capsys):
    code, out, _ = run(capsys, "spectrum", "--graph", "tri", "--n", "6", "--verify", "--k", "2")
    data = json.loads(out)
    assert code == 0 and all(c["ok"] for c in data["verification"])
    assert data["total"] == 21


def test_spectrum_csv_and_queens(capsys):
    code, out, _ = run(capsys, "spectrum", "--graph", "g23h", "--n", "4", "--format", "csv")
    assert code == 0 and len(list(csv.reader(io.StringIO(out)))) > 1
    code, out, _ = run(capsys, "spectrum", "--graph", "queens", "--n", "5")
    ints = {d["value"]: d["mult"] for d in json.loads(out)["integers"]}
    assert code == 0 and ints[1] == 3


def test_family_outputs(capsys):
    code, out, _ = run(capsys, "family", "--family", "u", "--n", "10", "--lam", "0")
    assert code == 0 and json.loads(out)["sums"]
    code, out, _ = run(capsys, "family", "--family", "t", "--n", "4", "--at", "1", "1", "--format", "ascii")
    assert code == 0 and len(out.strip().splitlines()) == 4


@pytest.mark.parametrize("family", ["t", "u", "v", "x", "y"])
def test_verify_family(capsys, family):
    code, out, _ = run(capsys, "verify-family", "--family", family, "--n-min", "4", "--n-max", "9")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows and all(r["eigen_ok"] == "True" for r in rows)


def test_verify_family_failure_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli.fam, "sums_match", lambda fv: False)
    code, _, _ = run(capsys, "verify-family", "--family", "u", "--n", "8")
    assert code == 1


def test_basis_least(capsys):
    code, out, _ = run(capsys, "basis-least", "--n", "7")
    data = json.loads(out)
    assert code == 0 and data["rank"] == data["expected"] == 10


def test_decompose_and_verify(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "5")
    assert code == 0 and set(json.loads(out)["parts"]) == {"G1", "G2", "G13", "G3H", "G3V"}
    code, out, _ = run(capsys, "decompose", "--n", "4", "--format", "dot")
    assert code == 0 and "red" in out
    code, out, _ = run(capsys, "verify-decomposition", "--n-min", "4", "--n-max", "8")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_decomposition_failure_exit(capsys, monkeypatch):
    class Bad:
        def to_json(self):
            return {"ok": False}

    monkeypatch.setattr(cli, "verify_decomposition", lambda d: Bad())
    assert run(capsys, "verify-decomposition", "--n", "5")[0] == 1


def test_weyl(capsys):
    code, out, _ = run(capsys, "weyl-bounds", "--n", "4", "--k", "9")
    b = json.loads(out)["bounds"][0]
    assert code == 0 and b["lower_decimal"] >= -3 and b["upper_decimal"] <= 4
    code, out, _ = run(capsys, "weyl-bounds", "--n", "4", "--csv")
    assert code == 0 and len(out.strip().splitlines()) == 17


def test_conjecture(capsys):
    code, out, _ = run(capsys, "check-conjecture", "--n-min", "4", "--n-max", "8")
    data = json.loads(out)
    assert code == 0 and data["violated"] == []
    assert {v["status"] for v in data["verdicts"]} == {"holds"}


def test_reproduce_examples(capsys):
    code, out, _ = run(capsys, "reproduce-examples")
    data = json.loads(out)
    assert code == 0 and data["ok"] and len(data["checks"]) > 15


def test_reconcile_markdown(capsys):
    code, out, _ = run(capsys, "reconcile", "--target", "y-layers", "--n-max", "9", "--format", "markdown")
    assert code == 0 and "y-layers" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["family", "--family", "u", "--n", "10", "--lam", "5"],
        ["family", "--family", "v", "--n", "9", "--lam", "1"],
        ["decompose", "--n", "3"],
        ["build", "--graph", "tri"],
        ["spectrum", "--graph", "g12", "--n", "4", "--verify"],
        ["weyl-bounds", "--n", "4", "--k", "99"],
        ["family", "--family", "t", "--n", "4"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and not out and err.startswith("trispectra")


def test_argparse_errors(capsys):
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "build", "--graph", "hexagon", "--n", "3")[0] == 2


def test_bad_thread_cap(capsys, monkeypatch):
    monkeypatch.setenv("TRISPECTRA_THREADS", "many")
    assert run(capsys, "check-conjecture", "--n-max", "5", "--parallel")[0] == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "t4.json"
    code, out, _ = run(capsys, "spectrum", "--graph", "tri", "--n", "4", "--output", str(target))
    assert code == 0 and not out
    assert json.loads(target.read_text(encoding="utf-8"))["text"]


def test_parallel_matches_serial(capsys, monkeypatch):
    monkeypatch.setenv("TRISPECTRA_THREADS", "2")
    serial = run(capsys, "check-conjecture", "--n-min", "4", "--n-max", "7")
    parallel = run(capsys, "check-conjecture", "--n-min", "4", "--n-max", "7", "--parallel")
    assert serial == parallel


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "trispectra", "weyl-bounds", "--n", "5"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
