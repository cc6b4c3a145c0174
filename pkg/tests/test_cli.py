import csv
import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from hyperoct.cli import run
from hyperoct.report import strip_timing

GOLDEN = Path(__file__).parent / "golden"


def _run_json(argv, capsys):
    code = run(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.mark.parametrize("argv,name", [
    (["classify", "--qp", "1/3", "--qm", "1/3"], "classify_1_3_1_3.json"),
    (["moments", "--max", "4", "--routes", "all"], "moments_max4.json"),
    (["typed", "--q", "1/2"], "typed_1_2.json"),
])
def test_golden(argv, name, capsys):
    code, data = _run_json(argv, capsys)
    assert code == 0
    assert strip_timing(data) == json.loads((GOLDEN / name).read_text())


def test_byte_identical_without_timing(capsys):
    argv = ["fock-verify", "--check", "formula101", "--word-length", "3", "--json", "--no-timing", "--seed", "5"]
    assert run(argv) == 0
    a = capsys.readouterr().out
    assert run(argv) == 0
    b = capsys.readouterr().out
    assert a == b


def test_timing_present_by_default(capsys):
    code, data = _run_json(["classify-a", "--q", "1/2"], capsys)
    assert code == 0 and "seconds" in data["timing"]


def test_classify_extreme(capsys):
    code, data = _run_json(["classify", "--qp", "1/3", "--qm", "1/3"], capsys)
    ev = data["results"][0]["evidence"]
    assert code == 0 and (ev["verdict"], ev["M"], ev["N"], ev["eps"]) == ("extreme", 2, 1, 1)


def test_gram_not_psd_exits_1(capsys):
    code, data = _run_json(["gram", "--n", "3", "--qp", "1/3", "--qm", "0"], capsys)
    assert code == 1
    assert data["status"] == "fail"
    assert any(r["status"] == "fail" for r in data["results"])


def test_expand_literal_fails(capsys):
    assert run(["expand", "--n", "2", "--literal"]) == 1
    assert run(["expand", "--n", "3"]) == 0


@pytest.mark.parametrize("argv", [
    ["phi", "--word=-2,-4,-5,1,3,6"],
    ["phi", "--rho-plus", "3", "--rho-minus", "2", "--qp", "1/2", "--qm", "1/3"],
    ["classify-a", "--q", "2/3"],
    ["chartable", "--n", "2"],
    ["factorize", "--word=-2,1,3"],
    ["factorize", "--all", "3"],
    ["factorize", "--identity", "2"],
    ["schur-weyl", "--M", "2", "--N", "1", "--n", "2"],
    ["hirai", "--M", "2", "--N", "1", "--eps", "-1", "--n-max", "3"],
    ["hirai", "--degenerate", "1/2"],
    ["pairpart", "--count", "3"],
    ["pairpart", "--n", "3", "--eps", "**1"],
    ["pairpart", "--n", "2", "--blocks", "[[1,2],[-2,-1]]"],
    ["fock-verify", "--check", "exclusion", "--M", "2", "--N", "1"],
    ["moments", "--max", "6", "--specializations", "3", "--hankel"],
    ["typed", "--classes", "3"],
])
def test_subcommands_pass(argv, capsys):
    assert run(argv) == 0
    capsys.readouterr()


@pytest.mark.parametrize("argv", [
    [],
    ["nope"],
    ["classify", "--qp", "x", "--qm", "0"],
    ["classify", "--qp", "1/0", "--qm", "0"],
    ["classify", "--qp", "1/3"],
    ["classify", "--qp", "1/3", "--qm", "0", "--bogus"],
    ["gram", "--n", "5", "--qp", "1/3", "--qm", "1/3"],
    ["fock-verify", "--check", "commutation", "--max-level", "4"],
    ["schur-weyl", "--M", "4", "--N", "4", "--n", "5"],
    ["classify", "--qp", "1/3", "--qm", "0", "--budget", "0"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    assert "error" in capsys.readouterr().err.lower() or not argv


def test_budget_flag(capsys):
    # B(4) Gram has 384^2 units: inside the default budget, refused below it
    argv = ["gram", "--n", "4", "--qp", "2/5", "--qm", "1"]
    assert run(argv) == 1
    assert run(argv + ["--budget", "100000"]) == 2


def test_acceptance_sized_requests_fit_default_budget(capsys):
    assert run(["moments", "--max", "10", "--specializations", "6", "--hankel"]) == 0
    assert run(["fock-verify", "--check", "commutation"]) == 0


def test_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("HYPEROCT_BUDGET", "10")
    assert run(["gram", "--n", "2", "--qp", "1/3", "--qm", "1/3"]) == 2
    monkeypatch.setenv("HYPEROCT_BUDGET", "abc")
    assert run(["classify", "--qp", "1/3", "--qm", "1/3"]) == 2
    monkeypatch.delenv("HYPEROCT_BUDGET")
    assert run(["gram", "--n", "2", "--qp", "1/3", "--qm", "1/3"]) == 0


def test_csv_moments(capsys):
    assert run(["moments", "--max", "4", "--csv"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["two_n", "route", "e_qp", "e_qm", "num", "den"]
    assert ["2", "jacobi", "0", "1", "1", "1"] in rows


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    assert run(["classify", "--qp", "0", "--qm", "1/2", "--json", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["results"][0]["evidence"]["verdict"] == "degenerate"


def test_out_unwritable(tmp_path, capsys):
    assert run(["classify", "--qp", "0", "--qm", "0", "--out", str(tmp_path / "missing" / "x.json")]) == 2


def test_flags_after_subcommand_and_before(capsys):
    a = run(["--json", "--no-timing", "classify-a", "--q", "1/2"])
    out_a = capsys.readouterr().out
    b = run(["classify-a", "--q", "1/2", "--json", "--no-timing"])
    out_b = capsys.readouterr().out
    assert a == b == 0 and out_a == out_b


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperoct", "classify", "--qp", "1/3", "--qm", "0", "--json"],
                          capture_output=True, text=True, env={**os.environ})
    assert proc.returncode == 0
    ev = json.loads(proc.stdout)["results"][0]["evidence"]
    assert ev["verdict"] == "not_pd" and ev["witness_value"] == "-1/72"
