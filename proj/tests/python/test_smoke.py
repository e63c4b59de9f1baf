from fractions import Fraction

import pytest

import qjsf


def test_interp_expansion():
    e = qjsf.interp_expansion("2", "1/2")
    assert e["2"] == "1"
    assert qjsf.fraction(e["1"]) == -4
    assert qjsf.fraction(e["-"]) == Fraction(16, 3)
    assert qjsf.interp_expansion([1, 1], "1/2", N=3)["1,1"] == "1"


def test_sigma_and_norm():
    assert qjsf.sigma([1, 1], [1], "1/3") == "-1/2"
    assert qjsf.h_norm("2,1", "1/2") == "7/2"


def test_eval_three_ways():
    out = qjsf.interp_eval([2, 1], ["1/3", "2", "-5/4"], "1/2")
    assert out["determinant"] == out["tableaux"] == out["schur"]


def test_node_vector():
    assert qjsf.node_vector([1], 2, "1/2") == ["2", "1/2"]


def test_params_and_phi():
    p = qjsf.Params("1/2", 1, -1, "1/5+1/7i", "1/5-1/7i")
    assert p.series == "principal"
    e = qjsf.phi_expansion([1], p)
    assert e["1"] == "1"
    assert not any(v.endswith("i") for v in e.values())
    x = ["1/3", "-2"]
    assert qjsf.phi_eval([1], x, p) == qjsf.phi_eval([1], list(reversed(x)), p)
    assert qjsf.fraction(qjsf.phi_norm([1], p)) > 0


def test_inadmissible():
    with pytest.raises(qjsf.InadmissibleParameters):
        qjsf.Params("1/2", 1, 1, "1", "1")
    with pytest.raises(ValueError):
        qjsf.Params("1/2", 1, -1, "3", "5")


def test_gram():
    p = qjsf.Params("1/2", 1, -1, "1/5+1/7i", "1/5-1/7i")
    a = qjsf.gram(p, 2, K=4, max_size=1)
    b = qjsf.gram(p, 2, K=4, max_size=1, method="brute")
    assert a["values"] == b["values"]
    assert a["index"] == ["-", "1"]
    assert a["values"][0][0] == "1"


def test_verify():
    assert "golden" in qjsf.suite_names()
    (outcome,) = qjsf.verify("golden")
    assert outcome["passed"]
