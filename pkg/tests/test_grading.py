import random

from reconalg import grading, quiver, relations
from reconalg.cfrac import Monomial, hj_expand, ij_series
from conftest import all_label_lists


def test_weight():
    assert grading.weight(7, 2, Monomial(1, 0)) == 1
    assert grading.weight(7, 2, Monomial(0, 1)) == 2
    assert grading.weight(7, 2, Monomial(7, 0)) == 0
    assert grading.weight(7, 2, Monomial(3, 2)) == 0


def test_hom_indicator_basics():
    s = ij_series(7, 2)
    # identity cell: empty bidegree maps vertex to itself
    for p in range(3):
        assert grading.hom_indicator(7, 2, s, p, p, 0, 0) == 1
    # x^7 and y^7 act on every vertex
    for p in range(3):
        assert grading.hom_indicator(7, 2, s, p, p, 7, 0) == 1
        assert grading.hom_indicator(7, 2, s, p, p, 0, 7) == 1
    # indicator is 0/1 valued and respects the congruence definition
    for p in range(3):
        for t in range(3):
            for z1 in range(8):
                for z2 in range(8):
                    val = grading.hom_indicator(7, 2, s, p, t, z1, z2)
                    expected = 1 if (z1 + 2 * z2 - s.i[t] + s.i[p]) % 7 == 0 else 0
                    assert val == expected


def test_phi_40_11():
    q = quiver.build_quiver(hj_expand(40, 11))
    table = grading.phi(q)
    by_name = {q.arrows[i].name: str(m) for i, m in table.items()}
    assert by_name == {
        "c0,3": "x",
        "c3,2": "x^3",
        "c2,1": "x^7",
        "c1,0": "x^29",
        "a0,1": "y",
        "a1,2": "y^3",
        "a2,3": "y^7",
        "a3,0": "y^29",
        "k1": "x^18y",
        "k2": "x^7y^2",
        "k3": "x^3y^3",
        "k4": "x^2y^7",
        "k5": "xy^18",
    }


def test_phi_73_27_anticlockwise():
    q = quiver.build_quiver(hj_expand(73, 27))
    table = grading.phi(q)
    labels = [str(table[q.anticlockwise_into((t + 1) % (q.n + 1)).id])
              for t in range(q.n + 1)]
    assert labels == ["y", "y^2", "y^8", "y^8", "y^27", "y^27"]


def test_phi_n1():
    q = quiver.build_quiver([5])
    table = grading.phi(q)
    by_name = {q.arrows[i].name: str(m) for i, m in table.items()}
    assert by_name == {
        "a1": "x", "a2": "y", "c1": "x^4", "c2": "x^3y",
        "k1": "x^2y^2", "k2": "xy^3", "k3": "y^4",
    }


def test_path_monomial():
    q = quiver.build_quiver([4, 2])
    table = grading.phi(q)
    ids = [q.arrow_by_name("c0,2").id, q.arrow_by_name("c2,1").id]
    m = grading.path_monomial(table, tuple(ids))
    assert str(m) == "x^2"
    ids = [q.arrow_by_name("c1,0").id, q.arrow_by_name("a0,1").id]
    assert str(grading.path_monomial(table, tuple(ids))) == "x^5y"


def test_check_homogeneity_positive_sweep():
    for labels in ([4, 2], [4, 3, 4], [5], [2, 2, 2], [3, 2, 5, 2]):
        q = quiver.build_quiver(labels)
        rels = relations.generate_relations(q)
        rep = grading.check_homogeneity(q, rels, grading.phi(q))
        assert rep.ok and rep.checked == len(rels) and not rep.failures


def test_check_homogeneity_detects_corruption():
    q = quiver.build_quiver([4, 2])
    rels = relations.generate_relations(q)
    table = grading.phi(q)
    bad = dict(table)
    some_id = q.arrow_by_name("k1").id
    bad[some_id] = Monomial(1, 1)
    rep = grading.check_homogeneity(q, rels, bad)
    assert not rep.ok and rep.failures


def test_check_homogeneity_random_labels():
    rng = random.Random(12345)
    for _ in range(50):
        n = rng.randint(1, 5)
        labels = [rng.randint(2, 6) for _ in range(n)]
        q = quiver.build_quiver(labels)
        rels = relations.generate_relations(q)
        assert grading.check_homogeneity(q, rels, grading.phi(q)).ok


def test_phi_weight_consistency_sweep():
    # every arrow monomial has the weight its endpoints require
    for labels in all_label_lists(3, 5):
        q = quiver.build_quiver(labels)
        table = grading.phi(q)
        for arrow in q.arrows:
            m = table[arrow.id]
            got = grading.weight(q.r, q.a, m)
            need = (q.series.i[arrow.head] - q.series.i[arrow.tail]) % q.r
            assert got == need


def test_specials_dot():
    q = quiver.build_quiver([4, 2])
    dot = grading.specials_dot(q)
    assert dot.startswith("digraph")
    assert "R" in dot and "x^5" in dot
