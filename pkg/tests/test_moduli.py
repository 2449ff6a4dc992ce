import random
from fractions import Fraction

import pytest

from reconalg import cfrac, moduli, pathalg, relations
from conftest import coprime_pairs


def test_chart_values():
    atlas = moduli.charts(7, 2)
    assert atlas[0].coord_c == (7, 0)
    assert atlas[0].coord_d == (-2, 1)
    atlas = moduli.charts(40, 11)
    assert atlas[2].coord_c == (4, -4)
    assert atlas[2].coord_d == (-1, 11)
    # last chart: (x/y^{j_n}, y^r)
    s = cfrac.ij_series(40, 11)
    assert atlas[-1].coord_c == (1, -s.j[s.n])
    assert atlas[-1].coord_d == (0, 40)


def test_chart_determinants_sweep():
    for r, a in coprime_pairs(60):
        for chart in moduli.charts(r, a):
            assert chart.determinant() == r


def test_transition_check_sweep():
    for r, a in coprime_pairs(60):
        n = len(cfrac.hj_expand(r, a))
        for t in range(1, n + 1):
            assert moduli.transition_check(r, a, t)
    with pytest.raises(ValueError):
        moduli.transition_check(7, 2, 0)


def test_chart_representation_zero_point():
    q = pathalg.build_quiver_cached(7, 2)
    rep = moduli.chart_representation(7, 2, 0, (0, 0))
    by = {x.name: rep[x.id] for x in q.arrows}
    assert by["k1"] == by["k2"] == by["a1,2"] == 0
    rels = relations.generate_relations(q)
    assert moduli.satisfies_relations(rep, rels)
    assert moduli.stability_check(q, rep)


def test_chart_representation_closed_form():
    q = pathalg.build_quiver_cached(7, 2)
    p, s = Fraction(2), Fraction(3)
    rep = moduli.chart_representation(7, 2, 0, (p, s))
    by = {x.name: rep[x.id] for x in q.arrows}
    assert by["c1,0"] == p and by["a0,1"] == s
    assert by["k1"] == p * s
    assert by["k2"] == p * s**2
    assert by["a1,2"] == p * s**3


def test_chart_representation_random_points():
    rng = random.Random(7)
    for r, a in [(7, 2), (11, 3)]:
        q = pathalg.build_quiver_cached(r, a)
        rels = relations.generate_relations(q)
        for t in range(q.n + 1):
            for _ in range(20):
                point = (
                    Fraction(rng.randint(-8, 8), rng.randint(1, 8)),
                    Fraction(rng.randint(-8, 8), rng.randint(1, 8)),
                )
                rep = moduli.chart_representation(r, a, t, point)
                assert moduli.satisfies_relations(rep, rels)
                assert moduli.stability_check(q, rep)


def test_chart_representation_rejects_n1():
    with pytest.raises(ValueError):
        moduli.chart_representation(3, 1, 0, (1, 1))


def test_stability_negative():
    q = pathalg.build_quiver_cached(7, 2)
    assert not moduli.stability_check(q, {x.id: Fraction(0) for x in q.arrows})
    only_a01 = {x.id: Fraction(0) for x in q.arrows}
    only_a01[q.arrow_by_name("a0,1").id] = Fraction(1)
    assert not moduli.stability_check(q, only_a01)


def test_chart_overlap_iso():
    lam = moduli.chart_overlap_iso(7, 2, 1, (1, 1))
    assert lam[0] == 1 and all(v != 0 for v in lam.values())
    # q = 1, p = 0 -> target point (1, 0)
    lam = moduli.chart_overlap_iso(7, 2, 1, (0, 1))
    assert lam[0] == 1
    with pytest.raises(ValueError):
        moduli.chart_overlap_iso(7, 2, 1, (1, 0))


def test_overlap_random_points():
    rng = random.Random(11)
    for r, a in [(7, 2), (11, 3)]:
        q = pathalg.build_quiver_cached(r, a)
        for t in range(1, q.n + 1):
            for _ in range(10):
                point = (
                    Fraction(rng.randint(-8, 8), rng.randint(1, 8)),
                    Fraction(rng.randint(1, 8), rng.randint(1, 8)),
                )
                lam = moduli.chart_overlap_iso(r, a, t, point)
                assert lam[0] == 1


def test_preprojective_overlap_exponent():
    # a = r - 1: every label is 2, so the overlap target is (1/q, p*q^2)
    q = pathalg.build_quiver_cached(5, 4)
    for t in range(1, q.n + 1):
        lam = moduli.chart_overlap_iso(5, 4, t, (Fraction(3), Fraction(1)))
        assert lam[0] == 1


def test_dual_graph():
    assert moduli.dual_graph(40, 11).node_labels == (-4, -3, -4)
    assert moduli.dual_graph(7, 2).node_labels == (-4, -2)
    assert moduli.dual_graph(5, 4).node_labels == (-2, -2, -2, -2)
    for r, a in coprime_pairs(60):
        g = moduli.dual_graph(r, a)
        assert [-x for x in g.node_labels] == cfrac.hj_expand(r, a)


def test_dual_graph_dot():
    dot = moduli.dual_graph_dot(7, 2)
    assert dot.startswith("graph")
    assert '"-4"' in dot and "1 -- 2" in dot
