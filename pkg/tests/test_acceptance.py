"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""
import random

import pytest
from gmpy2 import mpq

from contiguard.bounds import combinatorial_cover
from contiguard.exact import exact_guarding
from contiguard.fixtures import l_shape, random_polygons, square, u_shape
from contiguard.geometry import (
    BoundaryArc, BoundaryPoint, Point, arc_vertices, locate, point, triangulate,
)
from contiguard.greedy import GuardSet, greedy_guarding, make_guard
from contiguard.verify import verify_guarding, visibility_oracle_check
from contiguard.visibility import MultipleComponents, covering_region, kernel

RANDOM_COUNT = 50


@pytest.fixture(scope="module")
def named(comb):
    out = {"SQ": square(), "L6": l_shape(), "U8": u_shape()}
    for k in (1, 2, 3):
        out[f"COMB({k})"] = comb(k)
    for k in (1, 2):
        out[f"COMB-odd({k})"] = comb(k, odd=True)
    return out


@pytest.fixture(scope="module")
def randoms():
    return random_polygons(RANDOM_COUNT, seed=11, n_min=4, n_max=14)


def starts(P):
    for e in range(P.n):
        for j in range(4):
            yield BoundaryPoint(e, mpq(j, 4))


@pytest.fixture(scope="module")
def sandwich_runs(named, randoms):
    runs = []
    for P in list(named.values()) + randoms:
        best = exact_guarding(P)
        runs.append((P, best, [(s, greedy_guarding(P, s)) for s in starts(P)]))
    return runs


def test_criterion_1_greedy_sandwich(sandwich_runs, record):
    bad = [(P.n, s, len(g), len(best)) for P, best, gs in sandwich_runs for s, g in gs
           if not len(best) <= len(g) <= len(best) + 1]
    total = sum(len(gs) for _, _, gs in sandwich_runs)
    record(1, not bad, f"{len(sandwich_runs)} polygons, {total} greedy runs, {len(bad)} outside [OPT, OPT+1]")
    assert not bad


def test_criterion_2_shared_endpoint_start(record):
    P = u_shape()
    a = lambda x, y: locate(P, point(x, y))  # noqa: E731
    opt = GuardSet(P, (make_guard(P, point(1, 1), BoundaryArc(a(2, 2), a(6, 0))),
                       make_guard(P, point(5, 1), BoundaryArc(a(6, 0), a(2, 2)))))
    sizes = [len(greedy_guarding(P, a(6, 0))), len(greedy_guarding(P, a(2, 2)))]
    ok = verify_guarding(P, opt).valid and sizes == [2, 2]
    record(2, ok, f"greedy from (6,0) and (2,2) on U8 -> {sizes}")
    assert ok


def test_criterion_3_upper_bound(named, randoms, record):
    bad = []
    for P in list(named.values()) + randoms:
        g = combinatorial_cover(P)
        if len(g) > (P.n - 2) // 2 or not verify_guarding(P, g).valid:
            bad.append(P.n)
    record(3, not bad, f"{len(named) + len(randoms)} polygons, {len(bad)} violations")
    assert not bad


def test_criterion_4_comb_tightness(named, record):
    got = {k: len(exact_guarding(P)) for k, P in named.items() if k.startswith("COMB")}
    want = {"COMB(1)": 2, "COMB(2)": 4, "COMB(3)": 6, "COMB-odd(1)": 2, "COMB-odd(2)": 4}
    record(4, got == want, f"{got}")
    assert got == want


def test_criterion_5_covering_region_order_free(randoms, record):
    rng = random.Random(5)
    pool = [P for P in randoms if not kernel(P)]
    failures = 0
    for _ in range(20):
        P = rng.choice(pool)
        start = BoundaryPoint(rng.randrange(P.n), mpq(rng.randrange(4), 4))
        end = BoundaryPoint.from_lam(start.lam + mpq(rng.randrange(2, 4 * P.n), 4), P.n)
        arc = BoundaryArc(start, end)
        try:
            fwd = covering_region(P, arc)
            count = len(arc_vertices(P, arc))
            rev = covering_region(P, arc, order=list(reversed(range(count))))
        except MultipleComponents:
            failures += 1
            continue
        agree = fwd.same_set(rev) or (fwd.is_empty and rev.is_empty)
        if not agree or len(fwd.components()) > 1 or len(rev.components()) > 1:
            failures += 1
    record(5, failures == 0, f"20 (polygon, arc) pairs, {failures} mismatches or splits")
    assert failures == 0


def _past(P, q, ccw):
    n = P.n
    if ccw:
        nxt = BoundaryPoint((q.edge + 1) % n)
        return [nxt, BoundaryPoint.from_lam(q.lam + ((nxt.lam - q.lam) % n) / 2, n)]
    nxt = BoundaryPoint(q.edge if q.t else (q.edge - 1) % n)
    return [nxt, BoundaryPoint.from_lam(q.lam - ((q.lam - nxt.lam) % n) / 2, n)]


def test_criterion_6_breakpoints_maximal(sandwich_runs, record):
    checked = bad = 0
    for P, _, gs in sandwich_runs:
        if kernel(P):
            continue
        for s, g in gs:
            p1b, p2, *rest = g.breakpoints
            chains = [(s, p2, True), (p2, p1b, False)]
            prev = p2
            for q in rest:
                chains.append((prev, q, True))
                prev = q
            for frm, q, ccw in chains:
                for x in _past(P, q, ccw):
                    arc = BoundaryArc(frm, x) if ccw else BoundaryArc(x, frm)
                    checked += 1
                    if not covering_region(P, arc).is_empty:
                        bad += 1
    record(6, bad == 0, f"{checked} extensions past breakpoints, {bad} coverable")
    assert bad == 0


def _centroid(P):
    a, b, c = (P.vertex(i) for i in triangulate(P)[0])
    return Point((a[0] + b[0] + c[0]) / 3, (a[1] + b[1] + c[1]) / 3)


def test_criterion_7_visibility_oracle(named, randoms, record):
    polys = list(named.values()) + randoms[:20]
    bad = [i for i, P in enumerate(polys)
           if not (visibility_oracle_check(P, _centroid(P), 200, seed=i)
                   and visibility_oracle_check(P, P.vertex(0), 200, seed=i))]
    record(7, not bad, f"{len(polys)} polygons x 2 viewpoints x 200 trials, {len(bad)} disagreements")
    assert not bad


def test_criterion_8_star_shaped(named, randoms, record):
    bad = [P.n for P in list(named.values()) + randoms
           if (len(exact_guarding(P)) == 1) != (not kernel(P).is_empty)]
    record(8, not bad, f"{len(named) + len(randoms)} polygons, {len(bad)} mismatches")
    assert not bad


def _fresh(P):
    return type(P)(P.vertices, P.reflex, P.was_reversed)


def test_criterion_9_determinism_and_equivariance(named, record):
    scale, dx, dy = mpq(5, 2), 7, -3
    bad = []
    for name, P in named.items():
        a = exact_guarding(_fresh(P))
        b = exact_guarding(_fresh(P))
        same = a.positions == b.positions and [g.arc for g in a] == [g.arc for g in b]
        T = P.transformed(scale, dx, dy)
        t = exact_guarding(T)
        mapped = [Point(x * scale + dx, y * scale + dy) for x, y in a.positions]
        if not same or len(t) != len(a) or list(t.positions) != mapped:
            bad.append(name)
    record(9, not bad, f"{len(named)} fixtures, failures: {bad or 'none'}")
    assert not bad
