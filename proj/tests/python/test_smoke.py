import pytest

import rrat


def test_catalog_and_group_info():
    assert "S3" in rrat.catalog_names()
    info = rrat.group_info("D8")
    assert info["order"] == 8
    assert info["subgroups"] == 10
    assert not info["abelian"]


def test_noether_verdicts():
    v = rrat.verdict_noether("C8", "Q")
    assert v["answer"] == "No"
    assert any(s["cite"] == "Theorem 2.9" for s in v["trace"])
    assert rrat.replay_noether(v, "C8", "Q")
    assert rrat.verdict_noether("S3", "C")["answer"] == "Yes"


def test_tampered_trace_does_not_replay():
    v = rrat.verdict_noether("C8", "Q")
    v["answer"] = "Yes"
    assert not rrat.replay_noether(v, "C8", "Q")


def test_lenstra_lattice():
    lat = rrat.lenstra_lattice(3)
    assert rrat.cohomology(lat, "all")["summary"] == "coflabby, not flabby"
    res = rrat.resolve(lat)
    assert not rrat.invertible(res["F"])["invertible"]
    assert rrat.verdict_torus(lat)["answer"] == "No"


def test_regular_lattice_is_invertible_with_witness():
    d = rrat.invertible(rrat.regular_lattice("S3"))
    assert d["invertible"]
    assert d["witness"] is not None


def test_monomial():
    action = {"group": "C2", "rank": 1, "generators": [1], "matrices": [[[-1]]], "d": 4, "coeff": {"1": [1]}}
    e = rrat.extension_class(action)
    assert (e["vanishes_at_d"], e["vanishes_stably"]) == (False, True)
    assert rrat.verdict_monomial_universal("V4")["answer"] == "No"
    assert rrat.verdict_monomial_universal("S3")["answer"] == "Yes"


def test_smith_normal_form():
    s = rrat.smith_normal_form([[2, 4], [6, 8]])
    assert s["D"] == [[2, 0], [0, 4]]


def test_reproduce():
    assert rrat.reproduce_voskresenskii(3)["passed"]
    assert rrat.reproduce_endo_miyata(6, 3, 1)["passed"]


def test_errors():
    with pytest.raises(rrat.InputError):
        rrat.group_info("C0")
    with pytest.raises(ValueError):
        rrat.verdict_noether("C8", "R")
    with pytest.raises(rrat.InputError):
        rrat.invertible({"group": "C2", "rank": 1, "matrices": [[[2]]]})
