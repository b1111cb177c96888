import itertools

import pytest
from hypothesis import given, strategies as st

from infgon.disk import INF, CoincidentPoints, DiskModel, MarkedPoint, UnknownPoint


def test_successor_steps_along_ray():
    m = DiskModel(1)
    assert m.ccw_successor(MarkedPoint(1, 0)) == MarkedPoint(1, 1)
    assert m.ccw_successor(MarkedPoint(2 % 1 + 1, -1)) == MarkedPoint(1, 0)


def test_successor_fixes_accumulation_points():
    m = DiskModel(1, completed=True)
    assert m.ccw_successor(MarkedPoint(1, INF)) == MarkedPoint(1, INF)


def test_successor_rejects_unmarked_accumulation():
    m = DiskModel(1)
    with pytest.raises(UnknownPoint):
        m.ccw_successor(MarkedPoint(1, INF))


def test_cyclic_order_within_one_ray():
    m = DiskModel(1)
    a, b, c = MarkedPoint(1, 0), MarkedPoint(1, 1), MarkedPoint(1, 5)
    assert m.cyclic_lt(a, b, c)
    # ccw from 5: 6, 7, ... wrap ... -1, 0, 1, 2, 3 -- so 0 comes first
    assert m.cyclic_lt(MarkedPoint(1, 5), MarkedPoint(1, 0), MarkedPoint(1, 3))
    assert not m.cyclic_lt(MarkedPoint(1, 5), MarkedPoint(1, 3), MarkedPoint(1, 0))


def test_cyclic_order_after_accumulation():
    m = DiskModel(3, completed=True)
    assert m.cyclic_lt(MarkedPoint(1, 2), MarkedPoint(1, INF), MarkedPoint(2, -4))


def test_cyclic_order_rejects_coincident():
    m = DiskModel(1)
    with pytest.raises(CoincidentPoints):
        m.cyclic_lt(MarkedPoint(1, 0), MarkedPoint(1, 0), MarkedPoint(1, 1))


def test_open_arc_membership():
    m = DiskModel(1)
    assert m.in_open_arc(MarkedPoint(1, 2), MarkedPoint(1, 0), MarkedPoint(1, 3))
    assert not m.in_open_arc(MarkedPoint(1, 0), MarkedPoint(1, 0), MarkedPoint(1, 3))
    # wrap-around arc from 5 ccw to 3 misses only the point 4
    assert not m.in_open_arc(MarkedPoint(1, 4), MarkedPoint(1, 5), MarkedPoint(1, 3))
    assert m.in_open_arc(MarkedPoint(1, 7), MarkedPoint(1, 5), MarkedPoint(1, 3))


def test_window_contents():
    assert DiskModel(1).window(1) == [
        MarkedPoint(1, -1),
        MarkedPoint(1, 0),
        MarkedPoint(1, 1),
    ]
    assert DiskModel(1, completed=True).window(1) == [
        MarkedPoint(1, -1),
        MarkedPoint(1, 0),
        MarkedPoint(1, 1),
        MarkedPoint(1, INF),
    ]
    assert len(DiskModel(2).window(1)) == 6


@st.composite
def _model_and_points(draw, k=3):
    n = draw(st.integers(1, 3))
    completed = draw(st.booleans())
    m = DiskModel(n, completed)
    pts = m.window(4)
    idx = draw(
        st.lists(st.integers(0, len(pts) - 1), min_size=k, max_size=k, unique=True)
    )
    return m, [pts[i] for i in idx]


@given(_model_and_points())
def test_cyclic_order_is_total_and_rotation_invariant(mp):
    m, (x, y, z) = mp
    assert m.cyclic_lt(x, y, z) != m.cyclic_lt(x, z, y)
    assert m.cyclic_lt(x, y, z) == m.cyclic_lt(y, z, x) == m.cyclic_lt(z, x, y)


def test_successor_is_order_adjacent():
    m = DiskModel(2, completed=True)
    pts = m.window(3)
    for p in pts:
        if p.is_inf():
            continue
        s = m.ccw_successor(p)
        for x in pts:
            if x in (p, s):
                continue
            assert not (m.cyclic_lt(p, x, s))


def test_windows_are_nested_and_ordered():
    m = DiskModel(2, completed=True)
    small, big = m.window(2), m.window(3)
    assert set(small) <= set(big)
    for a, b, c in zip(big, big[1:], big[2:]):
        assert m.cyclic_lt(a, b, c)


def test_point_json_round_trip():
    for p in [MarkedPoint(2, -7), MarkedPoint(1, INF)]:
        assert MarkedPoint.from_json(p.to_json()) == p


def test_model_json_round_trip():
    for m in [DiskModel(1), DiskModel(3, completed=True)]:
        assert DiskModel.from_json(m.to_json()) == m
