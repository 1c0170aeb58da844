"""Smoke tests for the python bindings."""

import alt1verify as a1


def test_suite_subset_passes():
    results = a1.run_suite("jacobi.*")
    assert len(results) == 4
    assert all(r["status"] == "pass" for r in results)


def test_discrepancies_carry_both_values():
    results = a1.run_suite("grouplaw.prop7.*")
    disc = [r for r in results if r["status"] == "paper_discrepancy"]
    assert {r["id"] for r in disc} == {
        "grouplaw.prop7.a1",
        "grouplaw.prop7.a4",
        "grouplaw.prop7.a5",
    }
    for r in disc:
        assert r["printed"] and r["derived"]


def test_h2_dimensions():
    assert a1.h2_dim("alt1") == 0
    assert a1.h2_dim("sl2") == 0
    assert a1.h2_dim("abelian2") == 1


def test_casimir_strings():
    s = a1.casimir("zeta_standard")
    assert "dzeta" in s and "dt" in s
    assert a1.casimir("fixed_mass").count("d") == 0  # order zero


def test_hermite():
    he = a1.hermite(4)
    assert he[2] == "-1 + 1*x^2"
    assert he[4] == "3 + -6*x^2 + 1*x^4"


def test_appell_from_moments():
    p = a1.appell(2, ["0", "1"])
    assert p[2] == "-1 + 1*x^2"


def test_gram_spots():
    entries = {tuple(e[:4]): e[4] for e in a1.fock_gram(1)}
    assert entries[(0, 1, 0, 1)] == "2*x"
    assert entries[(1, 0, 1, 0)] == "0"


def test_flow_deviation():
    dev = a1.splitting_flow_deviation([0.25, -0.25, 0.2, -0.3, 0.1, 0.25], 500, True)
    assert dev < 1e-9


def test_correlator_scan():
    entries = a1.correlator_scan("phi_st")
    by_gen = {e["generator"]: e for e in entries}
    assert any("M0" in g and by_gen[g]["zero"] for g in by_gen)
    assert any("D" in g and not by_gen[g]["zero"] for g in by_gen)


def test_unknown_inputs_raise():
    import pytest

    with pytest.raises(a1.Alt1Error):
        a1.run_suite("nosuchcheck")
    with pytest.raises(a1.Alt1Error):
        a1.h2_dim("nope")
