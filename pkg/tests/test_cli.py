from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import rq
from qrst import cli
from qrst.qt_algebra import RationalQT, rq_eq
from qrst.verify import CheckReport


def run(*argv: str) -> tuple[int, str, str]:
    out: list[str] = []
    err: list[str] = []
    code = cli.dispatch(list(argv), out=out.append, err=err.append)
    return code, "\n".join(out), "\n".join(err)


def run_json(*argv: str) -> dict:
    code, text, _ = run(*argv)
    assert code == 0
    return json.loads(text)


def poly(entry: dict) -> RationalQT:
    return RationalQT.from_json(json.dumps(entry["poly"]))


def without_timing(doc: dict) -> dict:
    doc = json.loads(json.dumps(doc))
    doc["metadata"].pop("timing")
    return doc


def test_square_kernel_json():
    doc = run_json("probs", "--shape", "2,2", "--formulation", "explicit")
    assert doc["schema_version"] == 1 and doc["command"] == "probs"
    result = doc["result"]
    assert result["rows"] == ["2,2", "2,1"] and result["columns"] == ["3,2", "2,2,1"]
    assert rq_eq(poly(result["forward"][0][0]), rq("(1-t**2)/(1-q**2*t**2)"))
    assert result["forward"][0][0]["factored"] == "[0,2]/([2,2])"


def test_probs_at_a_point_and_column_kernel():
    doc = run_json("probs", "--shape", "2,1", "--q", "1/2", "--t", "1/2")
    assert [e["value"] for e in doc["result"]["forward"][0]] == ["28/45", "2/9", "7/45"]
    doc = run_json("probs", "--shape", "1", "--column")
    assert rq_eq(poly(doc["result"]["forward"][0][0]), rq("q*(1-t)/(1-q*t)"))


def test_insert_single_box_is_a_point_mass():
    doc = run_json("insert", "--perm", "1", "--exact")
    dist = doc["result"]["distribution"]
    assert len(dist) == 1
    assert (dist[0]["P"], dist[0]["Q"]) == ("1", "1")
    assert rq_eq(poly(dist[0]["probability"]), rq("1+0*q"))


def test_insert_sampling_records_seed_and_generator():
    doc = run_json("insert", "--perm", "526134", "--sample", "--seed", "9", "--q", "0", "--t", "0", "--count", "3")
    meta = doc["metadata"]
    assert meta["seed"] == 9 and meta["q"] == "0" and meta["generator"].startswith("python-random")
    assert doc["result"]["samples"] == [{"P": "1,3,4;2,6;5", "Q": "1,3,6;2,5;4", "count": 3}]


def test_identical_invocations_give_identical_json():
    argv = ("insert", "--perm", "3142", "--sample", "--seed", "42", "--count", "50", "--q", "1/3", "--t", "2/3")
    assert without_timing(run_json(*argv)) == without_timing(run_json(*argv))
    a, b = run_json("hookwalk", "--shape", "3,1", "--sample", "--seed", "5", "--count", "20", "--q", "1/2", "--t", "1/2"), run_json(
        "hookwalk", "--shape", "3,1", "--sample", "--seed", "5", "--count", "20", "--q", "1/2", "--t", "1/2"
    )
    assert without_timing(a) == without_timing(b)


def test_backward_distribution():
    doc = run_json("backward", "--P", "1,3;2", "--Q", "1,2;3", "--q", "1/2", "--t", "1/3")
    got = {row["permutation"]: row["probability"]["at_point"] for row in doc["result"]["distribution"]}
    assert got == {"132": "1/6", "231": "1/2", "312": "1/12", "321": "1/4"}


def test_hookwalk_exact():
    doc = run_json("hookwalk", "--shape", "2,2", "--start", "3,3", "--exact")
    rows = {r["nu"]: poly(r["probability"]) for r in doc["result"]["absorption"]}
    assert rq_eq(rows["3,2"], rq("(1-t**2)/(1-q**2*t**2)"))


def test_growths_of_213():
    doc = run_json("growths", "--perm", "213")
    assert len(doc["result"]["growths"]) == 4


def test_verify_all_small():
    code, text, _ = run("verify", "all", "--max-size", "6")
    assert code == 0
    doc = json.loads(text)
    assert doc["result"]["passed"] and len(doc["result"]["reports"]) == 10


def test_verify_table():
    code, text, _ = run("verify", "symmetry", "--n", "3", "--format", "table")
    assert code == 0 and text.startswith("PASS  symmetry")


def test_verify_failure_exit_code(monkeypatch):
    failing = CheckReport("symmetry", "forced", "fail", witness='{"sigma": "21"}')
    monkeypatch.setattr(cli, "run_check", lambda name, size=None: failing)
    code, text, _ = run("verify", "symmetry", "--format", "table")
    assert code == 1 and "witness" in text


@pytest.mark.parametrize(
    "argv,flag",
    [
        (("insert", "--perm", "21", "--sample", "--q", "0.5", "--t", "1/2"), "--q"),
        (("probs", "--shape", "2,3"), "--shape"),
        (("insert", "--perm", "112"), "--perm"),
        (("verify", "kernel_laws", "--max-size", "20"), "--max-size"),
        (("insert", "--perm", "21", "--sample", "--q", "1/2", "--t", "2"), "q="),
        (("backward", "--P", "1,2", "--Q", "1;2"), "shape"),
    ],
)
def test_usage_errors(argv, flag, capsys):
    code, _, err = run(*argv)
    assert code == 2
    assert flag in err + capsys.readouterr().err


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qrst.cli", "probs", "--shape", "1", "--format", "table"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "(1 - t)/(1 - q*t)" in proc.stdout or "[0,1]" in proc.stdout
