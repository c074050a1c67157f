from fractions import Fraction

import pytest

import ricci


def test_build_and_query_graph():
    g = ricci.build_graph("cycle:5")
    assert g.vertex_count == 5
    assert g.edge_count == 5
    assert g.degree("g0") == 2
    assert sorted(g.neighbors("g0")) == ["g1", "g4"]
    assert g.distance("g0", "g2") == 2


def test_curvature_values():
    h1 = ricci.build_graph("h1")
    assert ricci.kappa_lly(h1, "y1", "y2") == Fraction(0)
    assert ricci.kappa_zero(h1, "y1", "y2") == Fraction(-1, 3)
    assert ricci.opt_value(h1, "y1", "y2") == 4
    assert ricci.max_over_optimal(h1, "y1", "y2") == 2

    k4 = ricci.build_graph("complete:4")
    assert ricci.kappa_lly(k4, "g0", "g1") == Fraction(4, 3)
    assert ricci.kappa_alpha(k4, "g0", "g1", 0) == Fraction(2, 3)


def test_product_counterexample():
    p = ricci.build_graph("strong(cycle:4,h1)")
    assert p.vertex_count == 32
    assert ricci.opt_value(p, "(g0,y1)", "(g1,y2)") == 13
    assert ricci.kappa_lly(p, "(g0,y1)", "(g1,y2)") == Fraction(-1, 11)


def test_edge_report():
    g = ricci.build_graph("cycle:5")
    rep = ricci.edge_report(g, "g0", "g1")
    assert rep["degree"] == 2
    assert rep["opt"] == 2
    assert rep["kappa_lly"] == "1/2"
    assert rep["cross_check"] is True

    k4 = ricci.build_graph("complete:4")
    assert ricci.edge_report(k4, "g0", "g1")["max"] is None


def test_sweep():
    res = ricci.sweep("complete:3", "cycle:5", kind="strong")
    assert res["failed"] == 0
    assert res["passed"] == res["checks"] > 0
    assert res["failures"] == []

    res = ricci.sweep("complete:2", "cycle:4", kind="cartesian", theorems=["T4"])
    assert res["failed"] == 0
    assert res["checks"] == 24


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        ricci.build_graph("cycle:2")
    g = ricci.build_graph("cycle:5")
    with pytest.raises(ValueError):
        ricci.kappa_lly(g, "g0", "nope")
