import json
import os
import subprocess
from fractions import Fraction

import pytest

CLI = os.environ.get("QJSF_CLI", "qjsf")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def run_json(*args):
    proc = run(*args, "--format", "json")
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def coeffs(doc):
    return {c["index"]: c["value"] for c in doc["expansion"]["coeffs"]}


def test_interp_expansion_of_two():
    got = coeffs(run_json("interp", "--mu", "2", "--q", "1/2"))
    assert got["2"] == "1"
    assert Fraction(got["1"]) == -4
    assert Fraction(got["-"]) == Fraction(16, 3)


def test_sigma():
    doc = run_json("sigma", "--mu", "1,1", "--nu", "1", "--q", "1/3")
    assert doc["value"] == "-1/2"


def test_verify_vanishing():
    proc = run("verify", "--suite", "vanishing")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "all exact zeros" in proc.stdout


def test_unknown_suite_fails():
    assert run("verify", "--suite", "nonsense").returncode != 0


@pytest.mark.parametrize(
    "args",
    [
        ("rho", "--lambda", "1", "--mu", "-", "--beta", "1", "--gamma", "1/5+1/7i"),
        ("phi", "--lambda", "1", "--gamma", "3", "--delta", "5"),
        ("interp", "--mu", "1", "--q", "3/2"),
        ("interp", "--mu", "1", "--q", "abc"),
        ("interp", "--bogus"),
    ],
)
def test_bad_input_exits_2(args):
    proc = run(*args)
    assert proc.returncode == 2, proc.stdout + proc.stderr
    assert proc.stderr.strip()


def test_series_is_reported():
    doc = run_json("phi", "--lambda", "1", "--gamma", "5/2", "--delta", "3")
    assert doc["params"]["series"] == "complementary"
    pretty = run("phi", "--lambda", "1", "--gamma", "1/5+1/7i")
    assert "principal" in pretty.stdout


def test_phi_coefficients_are_real_and_unitriangular():
    got = coeffs(run_json("phi", "--lambda", "2,1", "--gamma", "1/5+1/7i"))
    assert got["2,1"] == "1"
    assert all(not v.endswith("i") for v in got.values())


def test_gram_csv():
    proc = run("gram", "--N", "2", "--K", "4", "--max-size", "1", "--gamma", "1/5+1/7i", "--format", "csv")
    assert proc.returncode == 0, proc.stderr
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "lambda,mu,value_re,value_im,tail_bound"
    assert len(lines) == 1 + 4


def test_gram_methods_agree():
    common = ("gram", "--N", "2", "--K", "4", "--max-size", "2", "--gamma", "1/5+1/7i")
    a = run_json(*common, "--method", "andreief")
    b = run_json(*common, "--method", "brute")
    assert a["gram"] == b["gram"]


def test_json_round_trip():
    doc = run_json("phi", "--lambda", "1,1", "--N", "3", "--gamma", "5/2", "--delta", "3")
    again = json.loads(json.dumps(doc))
    assert again == doc
    values = [Fraction(c["value"]) for c in doc["expansion"]["coeffs"]]
    assert values[-1] == 1


def test_float_output():
    doc = run_json("hnorm", "--mu", "2,1", "--q", "1/2", "--float")
    assert float(doc["value"]) == pytest.approx(3.5)
    assert run_json("hnorm", "--mu", "2,1", "--q", "1/2")["value"] == "7/2"
