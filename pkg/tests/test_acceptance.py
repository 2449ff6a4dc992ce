"""Acceptance suite: one test per criterion, all exact (tolerance zero)
except where a truncation margin is declared by the verifier itself.

Run with `pytest -v tests/test_acceptance.py` to get one pass/fail line
per criterion.
"""
import json
import random
import subprocess
import sys

from reconalg import (
    cfrac,
    grading,
    homology,
    moduli,
    pathalg,
    quiver,
    relations,
)
from conftest import all_label_lists, coprime_pairs
from test_relations import EXPECTED_4_2, EXPECTED_4_3_4, named

VERIFY_CASES = [(2, 1), (3, 1), (4, 3), (5, 3), (7, 2), (11, 3), (40, 11)]


def test_criterion_01_continued_fractions_and_series():
    assert cfrac.hj_expand(7, 2) == [4, 2]
    assert cfrac.hj_expand(40, 11) == [4, 3, 4]
    assert cfrac.hj_expand(693, 256) == [3, 4, 2, 4, 2, 3, 3]
    s = cfrac.ij_series(40, 11)
    assert s.i == (40, 11, 4, 1, 0)
    assert s.j == (0, 1, 4, 11, 40)
    s = cfrac.ij_series(73, 27)
    assert s.i == (73, 27, 8, 5, 2, 1, 0)
    assert s.j == (0, 1, 3, 11, 19, 46, 73)


def test_criterion_02_duality():
    assert cfrac.riemenschneider_dual(40, 11) == [2, 2, 3, 3, 2, 2]
    assert cfrac.riemenschneider_dual(40, 11) == cfrac.hj_expand(40, 29)
    for r, a in coprime_pairs(200):
        assert cfrac.riemenschneider_dual(r, a) == cfrac.hj_expand(r, r - a)


def test_criterion_03_presentation_sizes():
    q = quiver.build_quiver([4, 2])
    rels = relations.generate_relations(q)
    assert (q.num_vertices, len(q.arrows), len(rels)) == (3, 8, 7)
    assert {named(q, rel) for rel in rels} == EXPECTED_4_2
    q = quiver.build_quiver([4, 3, 4])
    rels = relations.generate_relations(q)
    assert (q.num_vertices, len(q.arrows), len(rels)) == (4, 13, 14)
    assert {named(q, rel) for rel in rels} == EXPECTED_4_3_4


def test_criterion_04_arrow_monomials():
    q = quiver.build_quiver(cfrac.hj_expand(40, 11))
    table = grading.phi(q)
    monomials = sorted(str(m) for m in table.values())
    assert monomials == sorted([
        "x^29", "x^18y", "x^7y^2", "x^3y^3", "x^2y^7", "xy^18", "y^29",
        "x", "y", "x^3", "x^7", "y^3", "y^7",
    ])
    by_name = {q.arrows[i].name: str(m) for i, m in table.items()}
    assert by_name["c1,0"] == "x^29" and by_name["a3,0"] == "y^29"
    assert by_name["k1"] == "x^18y" and by_name["k5"] == "xy^18"

    q = quiver.build_quiver(cfrac.hj_expand(73, 27))
    table = grading.phi(q)
    acw = [str(table[q.anticlockwise_into((t + 1) % (q.n + 1)).id])
           for t in range(q.n + 1)]
    assert acw == ["y", "y^2", "y^8", "y^8", "y^27", "y^27"]


def test_criterion_05_graded_cells_match_weight_oracle():
    for r, a in VERIFY_CASES:
        D = min(2 * r + 2, 85)
        report = pathalg.verify_endomorphism_presentation(r, a, D)
        assert report.ok, (r, a, report.failures[:3])
        assert report.failures == []


def test_criterion_06_relation_homogeneity():
    for r, a in VERIFY_CASES:
        q = pathalg.build_quiver_cached(r, a)
        rels = relations.generate_relations(q)
        assert grading.check_homogeneity(q, rels, grading.phi(q)).ok
    rng = random.Random(2026)
    for _ in range(50):
        labels = [rng.randint(2, 6) for _ in range(rng.randint(1, 5))]
        q = quiver.build_quiver(labels)
        rels = relations.generate_relations(q)
        assert grading.check_homogeneity(q, rels, grading.phi(q)).ok


def test_criterion_07_resolutions_and_global_dimension():
    for r, a in [(4, 3), (7, 2), (11, 3)]:
        D = 2 * r + 2
        q = pathalg.build_quiver_cached(r, a)
        rels = relations.generate_relations(q)
        engine = pathalg.ClassEngine(q, rels, D)
        for t in range(q.num_vertices):
            cx = homology.resolution_of_simple(q, rels, t)
            report = homology.verify_exactness(q, cx, engine, D)
            assert report.ok, (r, a, t, report.failures[:3])
        gd = homology.global_dimension(r, a)
        if (r, a) == (4, 3):
            assert gd.pd_table == {0: 2, 1: 2, 2: 2, 3: 2}
        else:
            assert gd.pd_table[0] == 3
            assert all(gd.pd_table[t] == 2 for t in range(1, q.num_vertices))
    for r, a in coprime_pairs(50):
        expected = 2 if a == r - 1 else 3
        assert homology.global_dimension(r, a).value == expected


def test_criterion_08_moduli():
    from fractions import Fraction

    for r, a in coprime_pairs(100):
        n = len(cfrac.hj_expand(r, a))
        for t in range(1, n + 1):
            assert moduli.transition_check(r, a, t)
        g = moduli.dual_graph(r, a)
        assert [-x for x in g.node_labels] == cfrac.hj_expand(r, a)
    rng = random.Random(88)
    for r, a in [(7, 2), (11, 3)]:
        q = pathalg.build_quiver_cached(r, a)
        rels = relations.generate_relations(q)
        for t in range(q.n + 1):
            for _ in range(100):
                point = (
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                )
                rep = moduli.chart_representation(r, a, t, point)
                assert moduli.satisfies_relations(rep, rels)
                assert moduli.stability_check(q, rep)
        for t in range(1, q.n + 1):
            for _ in range(50):
                point = (
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(1, 9), rng.randint(1, 9)),
                )
                lam = moduli.chart_overlap_iso(r, a, t, point)
                assert lam[0] == 1


def test_criterion_09_reversal_covariance():
    for labels in all_label_lists(5, 6):
        rev = list(reversed(labels))
        q = quiver.build_quiver(labels)
        qr = quiver.build_quiver(rev)
        iso = quiver.reverse_iso(labels)
        mapped = {
            frozenset(
                (
                    tuple(iso[i] for i in rel.lhs.arrows),
                    tuple(iso[i] for i in rel.rhs.arrows),
                )
            )
            for rel in relations.generate_relations(q)
        }
        target = {
            frozenset((rel.lhs.arrows, rel.rhs.arrows))
            for rel in relations.generate_relations(qr)
        }
        assert mapped == target, labels


def test_criterion_10_determinism():
    q = pathalg.build_quiver_cached(11, 3)
    rels = relations.generate_relations(q)
    for source in range(q.num_vertices):
        for bucket in pathalg.enumerate_paths(q, source, 14).values():
            fwd = pathalg.congruence_closure(bucket, rels, order="forward")
            rev = pathalg.congruence_closure(bucket, rels, order="reverse")
            assert fwd == rev
    cmd = [sys.executable, "-m", "reconalg.cli",
           "verify-endo", "--r", "11", "--a", "3", "--json"]
    first = subprocess.run(cmd, capture_output=True, timeout=300)
    second = subprocess.run(cmd, capture_output=True, timeout=300)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
