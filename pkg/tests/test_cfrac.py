from fractions import Fraction

import pytest

from reconalg import cfrac
from conftest import all_label_lists, coprime_pairs


def cf_value(labels):
    """Independent oracle: evaluate the continued fraction right-to-left."""
    val = Fraction(labels[-1])
    for alpha in reversed(labels[:-1]):
        val = alpha - 1 / val
    return val


def test_hj_expand_known_values():
    assert cfrac.hj_expand(7, 2) == [4, 2]
    assert cfrac.hj_expand(40, 11) == [4, 3, 4]
    assert cfrac.hj_expand(693, 256) == [3, 4, 2, 4, 2, 3, 3]
    assert cfrac.hj_expand(2, 1) == [2]
    assert cfrac.hj_expand(5, 4) == [2, 2, 2, 2]
    assert cfrac.hj_expand(5, 1) == [5]


def test_hj_expand_roundtrip_sweep():
    for r, a in coprime_pairs(120):
        labels = cfrac.hj_expand(r, a)
        assert all(alpha >= 2 for alpha in labels)
        assert cf_value(labels) == Fraction(r, a)
        assert cfrac.hj_value(labels) == (r, a)


def test_hj_value_matches_oracle_on_label_sweep():
    for labels in all_label_lists(4, 5):
        val = cf_value(labels)
        assert cfrac.hj_value(labels) == (val.numerator, val.denominator)


def test_validate_rejects_bad_input():
    with pytest.raises(ValueError):
        cfrac.validate_group_params(6, 4)  # not coprime
    with pytest.raises(ValueError):
        cfrac.validate_group_params(5, 5)
    with pytest.raises(ValueError):
        cfrac.validate_group_params(0, 1)
    with pytest.raises(ValueError):
        cfrac.validate_labels([2, 1, 3])
    with pytest.raises(ValueError):
        cfrac.validate_labels([])


def test_ij_series_40_11():
    s = cfrac.ij_series(40, 11)
    assert s.i == (40, 11, 4, 1, 0)
    assert s.j == (0, 1, 4, 11, 40)
    assert s.n == 3


def test_ij_series_73_27():
    s = cfrac.ij_series(73, 27)
    assert s.i == (73, 27, 8, 5, 2, 1, 0)
    assert s.j == (0, 1, 3, 11, 19, 46, 73)


def test_ij_series_invariants_sweep():
    for r, a in coprime_pairs(80):
        s = cfrac.ij_series(r, a)
        n = s.n
        assert s.i[0] == r and s.i[1] == a and s.i[n] == 1 and s.i[n + 1] == 0
        assert s.j[0] == 0 and s.j[1] == 1 and s.j[n + 1] == r
        for p in range(n + 1):
            assert s.i[p] * s.j[p + 1] - s.i[p + 1] * s.j[p] == r
            assert (a * s.j[p] - s.i[p]) % r == 0


def test_dual_pair():
    # reversing the label list gives the expansion of r/b with ab = 1 mod r
    for r, a in coprime_pairs(60):
        rb, b = cfrac.dual_pair(r, a)
        assert rb == r
        assert (a * b) % r == 1
        assert cfrac.hj_expand(r, b) == list(reversed(cfrac.hj_expand(r, a)))


def test_riemenschneider_dual_known():
    assert cfrac.riemenschneider_dual(40, 11) == [2, 2, 3, 3, 2, 2]
    assert cfrac.riemenschneider_dual(7, 2) == [2, 2, 3]
    assert cfrac.riemenschneider_dual(5, 4) == [5]


def test_riemenschneider_dual_sweep():
    for r, a in coprime_pairs(100):
        if a == r - 1 and r == 2:
            continue
        dual = cfrac.riemenschneider_dual(r, a)
        assert dual == cfrac.hj_expand(r, r - a)


def test_extra_arrow_tails():
    assert cfrac.extra_arrow_tails([4, 3, 4]) == (1, 1, 1, 2, 3, 3, 3)
    assert cfrac.extra_arrow_tails([2, 2]) == (1, 2)
    assert cfrac.extra_arrow_tails([4]) == (1, 1, 1, 1)


def test_invariant_generators():
    gens = cfrac.invariant_generators(7, 2)
    assert [str(m) for m in gens] == ["x^7", "x^5y", "x^3y^2", "xy^3", "y^7"]
    gens = cfrac.invariant_generators(40, 11)
    assert [str(m) for m in gens] == [
        "x^40", "x^29y", "x^18y^2", "x^7y^3",
        "x^3y^7", "x^2y^18", "xy^29", "y^40",
    ]
    # each generator is invariant: weight 0 mod r
    for r, a in coprime_pairs(40):
        for m in cfrac.invariant_generators(r, a):
            assert (m.ex + a * m.ey) % r == 0


def test_monomial_algebra():
    m = cfrac.Monomial(2, 3) * cfrac.Monomial(1, 0)
    assert (m.ex, m.ey) == (3, 3)
    assert str(cfrac.Monomial(0, 0)) == "1"
    assert str(cfrac.Monomial(1, 1)) == "xy"
    with pytest.raises(ValueError):
        cfrac.Monomial(-1, 0)
