"""End-to-end smoke tests for the Python package."""

import json

import pytest

import izeta


def test_version():
    assert izeta.__version__ == "0.1.0"


def test_raw_run_returns_the_machine_report():
    code, out, err = izeta.run({"poly": "x", "motivic": True, "format": "json"})
    assert code == 0
    assert err == ""
    doc = json.loads(out)
    assert doc["schema"] == "izeta-report-v1"
    assert doc["ok"] is True


def test_topological_zeta_of_the_cusp():
    z = izeta.topological_zeta("y^2 - x^3", region="origin")
    assert z == "(4*s + 5) / ((s + 1) * (6*s + 5))"


def test_motivic_zeta_renders_canonically():
    assert izeta.motivic_zeta("x") == izeta.motivic_zeta("x")
    assert "L" in izeta.motivic_zeta("x*y")


def test_motivic_report_carries_the_structured_form():
    doc = izeta.report(poly="x", motivic=True)
    row = doc["results"][0]
    assert row["kind"] == "motivic"
    data = row["zeta_data"]
    assert {"numerator", "gates"} <= set(data)
    assert data["gates"] == [[1, 1]]
    for rec in data["numerator"]:
        assert isinstance(rec["s"], int)
        for u, v, c in rec["terms"]:
            assert isinstance(u, int) and isinstance(v, int)
            int(c)  # exact integer encoded as a decimal string


def test_padic_zeta_of_a_coordinate():
    assert izeta.padic_zeta("x", 3) == "(2/3) / ((1 - 1/3*T))"


def test_spectrum():
    assert izeta.spectrum("y^2 - x^3") == {"5/6": 1, "7/6": 1}
    assert izeta.spectrum("y^2 - x^5") == {
        "7/10": 1,
        "9/10": 1,
        "11/10": 1,
        "13/10": 1,
    }
    assert izeta.spectrum("x") == {}


def test_functional_equation_verdicts():
    assert izeta.functional_equation("x*y", 2) is True
    assert izeta.functional_equation("x", 2) is False


def test_oracle_counts_match_the_closed_form():
    rows = izeta.oracle_counts("x*y", q=2, depth=3)
    assert [row["count"] for row in rows] == [1, 4, 12, 32]
    assert all(row["tallies"] == [row["count"]] for row in rows)


def test_direct_jet_counting():
    assert izeta.count_jets("x", 1, 3, 2) == 2
    assert izeta.count_jets("x*y", 2, 2, 3) == 32
    assert izeta.count_jets("x", 1, 3, 0, region="origin") == 0


def test_twisted_tally():
    r = izeta.twisted_tally("x^2", 1, 3, 2, 2)
    assert r["count"] == 6
    assert r["tallies"] == [6, 0]
    assert r["generator"] == 2
    assert r["region"] == "whole-space"


def test_generators():
    assert izeta.gf_generators(7) == [3, 5]


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError):
        izeta.report(poly="x +", motivic=True)
    with pytest.raises(ValueError):
        izeta.count_jets("y", 1, 3, 1)
    with pytest.raises(izeta.InputError):
        izeta.twisted_tally("x", 1, 3, 4, 1)


def test_budget_exhaustion_raises_budget_error():
    with pytest.raises(izeta.BudgetError):
        izeta.report(oracle="x + y", q=5, depth=6)
    with pytest.raises(izeta.BudgetError):
        izeta.count_jets("x + y", 2, 5, 6)
