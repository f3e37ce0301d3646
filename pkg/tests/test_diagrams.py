import pytest
from hypothesis import given, strategies as st

from qtcatalan.diagrams import (
    FLAVOR_D,
    FLAVOR_DPRIME,
    DiagramError,
    blocks,
    format_diagram,
    is_staircase,
    make_diagram,
    parse_diagram,
    partition_type,
    point_key,
    special_staircase,
    transpose,
)


def test_parse_and_canonical_order():
    d = parse_diagram("(0,2);(-1,1);(1,1);(0,0);(0,1)")
    assert d.flavor == FLAVOR_DPRIME
    assert format_diagram(d) == "(-1,1);(0,0);(0,1);(0,2);(1,1)"
    assert d.sizes == (0, 0, 1, 2, 2)
    assert d.bidegree == (0, 5)
    assert d.deficit == 5


def test_flavor_defaults_to_D():
    assert parse_diagram("(0,0);(1,0)").flavor == FLAVOR_D


@pytest.mark.parametrize(
    "text",
    ["(0,0);(0,0)", "(0,-1)", "(-2,1)", "(0,0);garbage"],
)
def test_invalid_diagrams(text):
    with pytest.raises(DiagramError):
        parse_diagram(text)


def test_D_rejects_negative_x():
    with pytest.raises(DiagramError):
        make_diagram([(-1, 1)], FLAVOR_D)


grid = st.tuples(st.integers(-6, 6), st.integers(0, 6)).filter(lambda p: p[0] + p[1] >= 0)


@given(grid, grid)
def test_point_order_is_total(p, q):
    if p != q:
        assert (point_key(p) < point_key(q)) != (point_key(q) < point_key(p))


@given(st.lists(grid, min_size=1, max_size=6, unique=True))
def test_make_diagram_sorted(points):
    d = make_diagram(points)
    keys = [point_key(p) for p in d.points]
    assert keys == sorted(keys)
    assert parse_diagram(format_diagram(d), FLAVOR_DPRIME) == d


def test_blocks_split_and_shift():
    # sizes 0, 1, 1, 3: marks at 1, 2, 4
    d = make_diagram([(0, 0), (0, 1), (1, 0), (3, 0)])
    bs = blocks(d)
    assert [b.n for b in bs] == [1, 2, 1]
    assert bs[1].points == ((-1, 1), (0, 0))
    assert sum(b.n for b in bs) == d.n
    for b in bs:
        assert b.sizes[0] == 0


def test_blocks_need_origin():
    with pytest.raises(DiagramError):
        blocks(make_diagram([(0, 1), (1, 0)]))


def test_special_staircase_partition_type():
    for s_, expected in ((0, ()), (1, (1,)), (2, (2,))):
        form = special_staircase(1, 5, [2], [s_])
        assert is_staircase(form.diagram)
        assert partition_type(form) == expected
    assert partition_type(make_diagram([(i, 0) for i in range(4)], FLAVOR_D)) == ()


def test_special_staircase_guards():
    with pytest.raises(DiagramError):
        special_staircase(1, 4, [0], [0])
    with pytest.raises(DiagramError):
        special_staircase(2, 5, [3, 2], [0, 0])


def test_transpose_swaps_bidegree():
    d = make_diagram([(0, 0), (2, 1), (0, 3)], FLAVOR_D)
    assert transpose(d).bidegree == (4, 2)
    assert transpose(transpose(d)) == d
