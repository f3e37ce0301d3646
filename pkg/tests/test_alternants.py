import random

import pytest
from hypothesis import given, settings, strategies as st

from qtcatalan.alternants import check_sum_lemma, column_determinant, delta
from qtcatalan.checks import random_d
from qtcatalan.diagrams import DiagramError
from qtcatalan.phi import SizeGuardError


def test_vandermonde_in_x():
    # det[x_i^{j}] for j = 0, 1 is x_2 - x_1
    a = column_determinant([(0, 0), (1, 0)])
    assert a.terms == {(0, 0, 1, 0): 1, (1, 0, 0, 0): -1}


def test_bidegree_and_alternation():
    d = [(0, 0), (1, 0), (0, 1)]
    a = delta(d)
    assert a.bidegree == (1, 1)
    assert a.swap_variables(0, 2) == -a


def test_repeated_column_vanishes():
    assert not column_determinant([(1, 0), (1, 0)])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 4), st.integers(0, 2), st.integers(0, 2))
def test_power_sum_identity(seed, n, c, e):
    assert check_sum_lemma(random_d(random.Random(seed), n), c, e)


def test_guards():
    with pytest.raises(SizeGuardError):
        delta([(i, 0) for i in range(7)])
    with pytest.raises(DiagramError):
        delta([(-1, 1), (0, 0)])
    with pytest.raises(ValueError):
        check_sum_lemma([(0, 0)], -1, 0)
