from math import comb

import pytest
from hypothesis import given, strategies as st

from qtcatalan.partitions import count_partitions, iter_partitions
from qtcatalan.rho import (
    RhoPoly,
    WeightMismatchError,
    compare_monomials,
    determinant,
    h_series,
    leading,
    naive_determinant,
    permutation_sign,
)

r = RhoPoly.rho

monomials = st.lists(st.integers(1, 5), max_size=4).map(lambda xs: tuple(sorted(xs)))
polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=5).map(RhoPoly)


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == 0


def test_constants_and_printing():
    assert RhoPoly.constant(0).is_zero()
    assert r(0) == 1
    assert str(RhoPoly()) == "0"
    assert str(2 * r(1) ** 2 - r(2) + 3) == "-r2 + 2*r1^2 + 3"


def test_leading_uses_tuple_order():
    f = r(2) * r(3) + r(1) * r(4)
    # (1, 4) < (2, 3) as increasing tuples
    assert leading(f) == ((2, 3), 1)
    assert leading(RhoPoly.constant(7)) == ((), 7)
    with pytest.raises(ValueError):
        leading(RhoPoly())
    with pytest.raises(ValueError):
        leading(r(1) + r(2))


def test_compare_monomials():
    assert compare_monomials((1, 1, 3), (1, 2, 2)) < 0
    assert compare_monomials((5,), (1, 4)) > 0
    assert compare_monomials((2, 2), (2, 2)) == 0
    with pytest.raises(WeightMismatchError):
        compare_monomials((1,), (2,))


@pytest.mark.parametrize("k", range(1, 11))
def test_term_order_is_total_per_weight(k):
    mons = [tuple(p) for p in iter_partitions(k)]
    assert len(mons) == count_partitions(k)
    for a in mons:
        for b in mons:
            c = compare_monomials(a, b)
            assert (c == 0) == (a == b)
            assert c == -compare_monomials(b, a)


@given(st.integers(0, 8), st.integers(0, 8))
def test_h_series_coefficient_sum(b, w):
    total = sum(c for _, c in h_series(b, w).items())
    expected = comb(w + b - 1, b - 1) if b else int(w == 0)
    assert total == expected


def test_h_series_small():
    assert h_series(2, 2) == 2 * r(2) + r(1) ** 2
    assert h_series(1, 3) == r(3)
    assert h_series(3, 0) == 1
    assert h_series(0, 1) == 0


@given(st.integers(1, 4), st.data())
def test_determinant_matches_leibniz(n, data):
    entries = st.dictionaries(monomials, st.integers(-2, 2), max_size=2).map(RhoPoly)
    m = [[data.draw(entries) for _ in range(n)] for _ in range(n)]
    assert determinant(m) == naive_determinant(m)


def test_permutation_sign():
    assert permutation_sign([0, 1, 2]) == 1
    assert permutation_sign([1, 0, 2]) == -1
    assert permutation_sign([2, 0, 1]) == 1


@given(polys)
def test_json_round_trip(f):
    if f.is_homogeneous():
        assert RhoPoly.from_json(f.to_json()) == f


def test_json_weight_check():
    with pytest.raises(ValueError):
        RhoPoly.from_json_obj({"weight": 3, "terms": [{"mono": [1], "coeff": "1"}]})


def test_big_integers_survive():
    big = RhoPoly.monomial((2,), 10**40)
    assert RhoPoly.from_json(big.to_json()).coeff((2,)) == 10**40
