from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from contiguard.exact import (
    compute_extensions, compute_F, compute_Q, compute_S, exact_guarding,
)
from contiguard.fixtures import random_simple_polygon
from contiguard.geometry import BoundaryPoint, locate, point, validate_polygon
from contiguard.greedy import greedy_guarding
from contiguard.verify import verify_guarding
from contiguard.visibility import sees

P_ = point


def segs(exts):
    return {frozenset(e.segment) for e in exts}


def test_extensions_examples(sq, l6, u8):
    assert compute_extensions(sq) == []
    assert segs(compute_extensions(l6)) == {frozenset((P_(2, 2), P_(0, 2))), frozenset((P_(2, 2), P_(2, 0)))}
    exts = compute_extensions(u8)
    assert segs(e for e in exts if e.kind == "edge") == {
        frozenset((P_(4, 2), P_(4, 0))), frozenset((P_(4, 2), P_(6, 2))),
        frozenset((P_(2, 2), P_(2, 0))), frozenset((P_(2, 2), P_(0, 2)))}
    assert segs(e for e in exts if e.kind == "vertex") == {frozenset((P_(0, 2), P_(6, 2)))}


def test_extensions_stay_inside(randoms):
    for P in randoms:
        for ext in compute_extensions(P):
            a, b = ext.segment
            assert sees(P, a, b)
            if ext.kind == "edge":
                assert a in P.reflex_vertices
            else:
                r1, r2 = ext.sources
                assert sees(P, a, r1) and sees(P, r2, b)


def test_Q_examples(sq, l6, u8):
    assert set(compute_Q(sq)) == set(sq.vertices)
    assert set(compute_Q(l6)) == set(l6.vertices) | {P_(0, 2), P_(2, 0)}
    assert set(compute_Q(u8)) == set(u8.vertices) | {P_(4, 0), P_(6, 2), P_(2, 0), P_(0, 2)}


def test_F_examples(sq, l6, u8):
    assert compute_F(sq, P_(0, 0)) == [BoundaryPoint(0)]
    pts = {b.point(l6) for b in compute_F(l6, P_(2, 0))}
    assert {P_(2, 2), P_(2, 4), P_(2, 0)} <= pts
    pts = {b.point(u8) for b in compute_F(u8, P_(0, 2))}
    assert {P_(2, 2), P_(4, 2), P_(6, 2), P_(0, 2)} <= pts


def test_S_examples(sq, l6):
    assert compute_S(sq) == [BoundaryPoint(i) for i in range(4)]
    s = set(compute_S(l6))
    assert {BoundaryPoint(i) for i in range(6)} <= s
    assert {locate(l6, P_(0, 2)), locate(l6, P_(2, 0))} <= s


def test_S_size_recorded_for_comb(comb2):
    # polynomial bound only; the count is a regression value
    assert len(compute_S(comb2)) <= comb2.n ** 5


def test_exact_examples(sq, u8):
    assert len(exact_guarding(sq)) == 1
    g = exact_guarding(u8)
    assert len(g) == 2
    r = verify_guarding(u8, g)
    assert r.valid and r.minimal


def test_exact_is_never_beaten_by_greedy(randoms):
    for P in randoms:
        best = len(exact_guarding(P))
        for e in range(P.n):
            for t in (0, mpq(1, 2)):
                assert best <= len(greedy_guarding(P, BoundaryPoint(e, t))) <= best + 1


def test_early_stop_matches_full_scan(randoms):
    for P in randoms[:6]:
        a = exact_guarding(P)
        b = exact_guarding(P, early_stop=False)
        assert a == b


def test_parallel_matches_sequential(u8):
    assert exact_guarding(u8, workers=2) == exact_guarding(u8)


def _rotate(P, k):
    vs = list(P.vertices)
    return validate_polygon(vs[k:] + vs[:k])


@settings(max_examples=10, deadline=None)
@given(st.integers(5, 10), st.integers(0, 10**6), st.integers(1, 9))
def test_candidates_invariant_under_relabeling(n, seed, k):
    P = random_simple_polygon(n, seed)
    R = _rotate(P, k % n)
    assert set(compute_Q(P)) == set(compute_Q(R))
    assert {b.point(P) for b in compute_S(P)} == {b.point(R) for b in compute_S(R)}
    assert set(P.vertices) <= set(compute_Q(P))
    assert {BoundaryPoint(i) for i in range(n)} <= set(compute_S(P))


@settings(max_examples=8, deadline=None)
@given(st.integers(5, 10), st.integers(0, 10**6), st.integers(1, 7), st.integers(1, 5),
       st.integers(-9, 9), st.integers(-9, 9))
def test_exact_equivariant(n, seed, num, den, dx, dy):
    P = random_simple_polygon(n, seed)
    k = mpq(num, den)
    Q = P.transformed(k, dx, dy)
    a, b = exact_guarding(P), exact_guarding(Q)
    assert len(a) == len(b)
    assert [P_(x * k + dx, y * k + dy) for x, y in a.positions] == list(b.positions)


def test_vertex_only_starts_sandwich(u8, randoms):
    # no polygon found yet where every vertex start misses the optimum; keep the sandwich
    for P in [u8] + randoms:
        best = len(exact_guarding(P))
        from_vertices = min(len(greedy_guarding(P, BoundaryPoint(i))) for i in range(P.n))
        assert best <= from_vertices <= best + 1
