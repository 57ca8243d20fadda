import random

from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from contiguard.bounds import combinatorial_cover
from contiguard.exact import exact_guarding
from contiguard.fixtures import random_simple_polygon
from contiguard.geometry import BoundaryArc, BoundaryPoint, locate, point
from contiguard.greedy import GuardSet, make_guard
from contiguard.verify import (
    _sample_boundary, oracle_sees, reference_minimum, uncovered_intervals,
    verify_guarding, visibility_oracle_check,
)
from contiguard.visibility import sees


def hand_u8(u8, second_end=(2, 2)):
    a = lambda x, y: locate(u8, point(x, y))  # noqa: E731
    return GuardSet(u8, (
        make_guard(u8, point(1, 1), BoundaryArc(a(2, 2), a(6, 0))),
        make_guard(u8, point(5, 1), BoundaryArc(a(6, 0), a(*second_end))),
    ))


def test_verify_examples(sq, u8):
    s = BoundaryPoint(0)
    full = GuardSet(sq, (make_guard(sq, point(2, 2), BoundaryArc(s, s, full=True)),))
    assert verify_guarding(sq, full).valid
    r = verify_guarding(u8, hand_u8(u8))
    assert r.valid and r.minimal
    bad = verify_guarding(u8, hand_u8(u8, second_end=(2, 4)))
    assert not bad.valid and bad.guard_ok == (True, False)


def test_uncovered_intervals():
    n = 4
    arc = lambda a, b: BoundaryArc(BoundaryPoint.from_lam(mpq(a), n), BoundaryPoint.from_lam(mpq(b), n))  # noqa: E731
    assert uncovered_intervals([arc(0, 2), arc(2, 0)], n) == ()
    assert uncovered_intervals([arc(0, 1), arc(2, 3)], n) == ((1, 2), (3, 4))
    assert uncovered_intervals([arc(1, 2), arc(3, "7/2")], n) == ((mpq(7, 2), 1), (2, 3))
    assert uncovered_intervals([], n) == ((0, 4),)


def test_redundant_guard_is_flagged(u8):
    g = hand_u8(u8)
    extra = GuardSet(u8, g.guards + (g.guards[0],))
    r = verify_guarding(u8, extra)
    assert r.valid and not r.minimal


def test_reference_minimum_examples(sq, u8, comb2):
    assert reference_minimum(sq, 1)[0] == 1
    size, g = reference_minimum(u8, 3)
    assert size in (2, 3) and size >= len(exact_guarding(u8))
    assert verify_guarding(u8, g).valid
    assert reference_minimum(comb2, 3)[0] in (4, 5)


def test_oracle_check_examples(sq, l6):
    assert visibility_oracle_check(sq, point(2, 2), 100, 0)
    assert visibility_oracle_check(l6, point(3, 1), 200, 0)


def test_oracle_sampling_is_seeded(l6):
    a = [_sample_boundary(l6, point(3, 1), r) for r in [random.Random(5)] for _ in range(30)]
    b = [_sample_boundary(l6, point(3, 1), r) for r in [random.Random(5)] for _ in range(30)]
    assert a == b


def test_oracle_sees_examples(l6):
    assert oracle_sees(l6, point(0, 0), point(2, 4))
    assert not oracle_sees(l6, point(4, 2), point(2, 4))
    assert oracle_sees(l6, point(0, 2), point(4, 2))


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 12), st.integers(0, 10**6), st.integers(0, 10**6))
def test_oracle_sees_agrees_with_sees(n, seed, s2):
    P = random_simple_polygon(n, seed)
    rng = random.Random(s2)
    for _ in range(10):
        a = BoundaryPoint(rng.randrange(n), mpq(rng.randrange(8), 8)).point(P)
        b = BoundaryPoint(rng.randrange(n), mpq(rng.randrange(8), 8)).point(P)
        assert sees(P, a, b) == oracle_sees(P, a, b)


@settings(max_examples=15, deadline=None)
@given(st.integers(5, 12), st.integers(0, 10**6), st.integers(1, 3))
def test_sandwich_and_validity(n, seed, d):
    P = random_simple_polygon(n, seed)
    e = exact_guarding(P)
    r, g = reference_minimum(P, d)
    assert len(e) <= r <= len(e) + 1
    rep = verify_guarding(P, e)
    assert rep.valid and rep.minimal
    assert verify_guarding(P, g).valid
    assert verify_guarding(P, combinatorial_cover(P)).valid
