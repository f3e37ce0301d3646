import pytest
from hypothesis import given, strategies as st

from qtcatalan.partitions import (
    Partition,
    count_partitions,
    count_partitions_bounded,
    enumerate_partitions_bounded,
    iter_partitions,
    partition_number,
    substring_decompose,
)


def test_small_partition_numbers():
    assert [count_partitions(k) for k in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_p_zero_is_one():
    assert count_partitions(0) == 1
    assert count_partitions_bounded(0, 0) == 1
    assert count_partitions_bounded(5, 0) == 1
    assert count_partitions_bounded(0, 3) == 0


def test_negative_arguments():
    with pytest.raises(ValueError):
        count_partitions(-1)
    with pytest.raises(ValueError):
        count_partitions_bounded(2, -1)
    assert partition_number(-3) == 0


def test_partition_validation():
    assert Partition((1, 1, 3)) == (1, 1, 3)
    assert Partition.from_parts([3, 1, 1]) == (1, 1, 3)
    with pytest.raises(ValueError):
        Partition((3, 1))
    with pytest.raises(ValueError):
        Partition((0, 1))


@given(st.integers(0, 25), st.integers(0, 25))
def test_bounded_count_matches_enumeration(b, k):
    parts = enumerate_partitions_bounded(b, k)
    assert len(parts) == count_partitions_bounded(b, k)
    assert len(set(parts)) == len(parts)
    assert all(p.weight == k and p.length <= b for p in parts)


@given(st.integers(1, 20), st.integers(1, 20))
def test_bounded_recurrence(b, k):
    # p(b, k) = p(b - 1, k) + p(b, k - b)
    rest = count_partitions_bounded(b, k - b) if k >= b else 0
    assert count_partitions_bounded(b, k) == count_partitions_bounded(b - 1, k) + rest


def test_enumeration_is_descending_with_max_first():
    parts = enumerate_partitions_bounded(3, 5)
    assert parts == sorted(parts, reverse=True)
    assert parts[0] == (5,)


@given(st.integers(1, 14))
def test_iter_partitions_complete(k):
    assert sum(1 for _ in iter_partitions(k)) == count_partitions(k)


@pytest.mark.parametrize(
    "nu, blocks",
    [
        ((1,), [(1,)]),
        ((1, 1, 1, 1), [(1, 1, 1), (1,)]),
        ((1, 1, 1, 1, 1, 1), [(1, 1, 1), (1, 1, 1)]),
        ((2, 3, 4), [(2, 3), (4,)]),
        ((1, 1, 1, 2, 2, 3, 4), [(1, 1, 1), (2, 2), (3, 4)]),
    ],
)
def test_substring_decompose(nu, blocks):
    dec = substring_decompose(nu)
    assert [tuple(b) for b in dec.blocks] == blocks
    assert sorted(x for b in dec.blocks for x in b) == list(nu)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=12))
def test_substring_decompose_shape(parts):
    dec = substring_decompose(sorted(parts))
    ones = [b for b in dec.blocks if b[0] == 1]
    big = [b for b in dec.blocks if b[0] > 1]
    assert all(len(b) == 3 for b in ones[:-1]) and all(1 <= len(b) <= 3 for b in ones)
    assert all(len(b) == 2 for b in big[:-1]) and all(1 <= len(b) <= 2 for b in big)
    assert dec.m == len(parts) - dec.ones_count
