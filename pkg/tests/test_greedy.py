import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from contiguard.fixtures import random_simple_polygon
from contiguard.geometry import BoundaryArc, BoundaryPoint, arc_contains, point
from contiguard.greedy import (
    CCW, CW, StarShapedInput, choose_guard_position, farthest_coverable, greedy_guarding,
)
from contiguard.visibility import EmptyRegion, Region, covering_region, kernel
from contiguard.verify import verify_guarding


def test_choose_guard_position_examples():
    sq = Region.from_points([point(0, 0), point(2, 0), point(2, 2), point(0, 2)])
    assert choose_guard_position(sq) == point(0, 0)
    assert choose_guard_position(Region.from_points([point(3, 1)])) == point(3, 1)
    assert choose_guard_position(Region.from_points([point(1, 5), point(1, 2)])) == point(1, 2)
    with pytest.raises(EmptyRegion):
        choose_guard_position(Region.empty())


def test_farthest_ccw_on_u8(u8):
    p = BoundaryPoint(1)
    q, w = farthest_coverable(u8, p, CCW)
    assert w.contains(point(5, 1))
    # stops before the notch vertex (2,4)
    assert 1 < q.lam < 6
    assert covering_region(u8, BoundaryArc(p, BoundaryPoint(6))).is_empty
    assert w.same_set(covering_region(u8, BoundaryArc(p, q)))


def test_farthest_cw_contains_start(u8):
    p = BoundaryPoint(1)
    q, _ = farthest_coverable(u8, p, CCW)
    back, _ = farthest_coverable(u8, q, CW)
    assert arc_contains(BoundaryArc(back, q), p, u8.n)


def test_farthest_refuses_star_shaped(l6):
    with pytest.raises(StarShapedInput):
        farthest_coverable(l6, BoundaryPoint(0), CCW)


def test_farthest_rejects_bad_direction(u8):
    with pytest.raises(ValueError):
        farthest_coverable(u8, BoundaryPoint(0), "up")


def test_greedy_examples(sq, u8, comb2):
    g = greedy_guarding(sq, BoundaryPoint(2, mpq(1, 3)))
    assert len(g) == 1 and g.guards[0].arc.full
    assert len(greedy_guarding(u8, BoundaryPoint(1))) == 2
    assert len(greedy_guarding(comb2, BoundaryPoint(0))) in (4, 5)


def test_greedy_output_verifies_and_is_minimal(u8):
    for e in range(u8.n):
        for t in (0, mpq(1, 2)):
            g = greedy_guarding(u8, BoundaryPoint(e, t))
            r = verify_guarding(u8, g)
            assert r.valid and r.minimal
            assert len(g) in (2, 3)


def test_greedy_is_deterministic(u8):
    a = greedy_guarding(u8, BoundaryPoint(3, mpq(1, 3)))
    b = greedy_guarding(u8.transformed(), BoundaryPoint(3, mpq(1, 3)))
    assert a.positions == b.positions
    assert [g.arc for g in a] == [g.arc for g in b]


def _maximal(P, prev, q, direction):
    """Covering region of the chain pushed past q (to the next vertex and halfway) is empty."""
    n = P.n
    if direction == CCW:
        nxt = BoundaryPoint((q.edge + 1) % n)
        half = BoundaryPoint.from_lam(q.lam + ((nxt.lam - q.lam) % n) / 2, n)
        return all(covering_region(P, BoundaryArc(prev, x)).is_empty for x in (nxt, half))
    nxt = BoundaryPoint(q.edge if q.t else (q.edge - 1) % n)
    half = BoundaryPoint.from_lam(q.lam - ((q.lam - nxt.lam) % n) / 2, n)
    return all(covering_region(P, BoundaryArc(x, prev)).is_empty for x in (nxt, half))


@settings(max_examples=20, deadline=None)
@given(st.integers(6, 12), st.integers(0, 10**6), st.integers(0, 11), st.integers(0, 3))
def test_greedy_breakpoints_are_maximal(n, seed, e, k):
    P = random_simple_polygon(n, seed)
    if kernel(P):
        return
    s = BoundaryPoint(e % n, mpq(k, 4))
    g = greedy_guarding(P, s)
    assert verify_guarding(P, g).valid
    p1b, p2, *rest = g.breakpoints
    assert _maximal(P, s, p2, CCW)
    assert _maximal(P, p2, p1b, CW)
    prev = p2
    for q in rest:
        assert _maximal(P, prev, q, CCW)
        prev = q
