"""Farthest-coverable-point search and the greedy contiguous guarding."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .geometry import (
    ZERO, BoundaryArc, BoundaryPoint, GeometryError, Point, Polygon, locate,
)
from .visibility import EmptyRegion, Region, kernel, visibility_polygon

__all__ = [
    "Guard", "GuardSet", "StarShapedInput", "farthest_coverable",
    "choose_guard_position", "greedy_guarding", "CCW", "CW",
]

CCW = "ccw"
CW = "cw"


class StarShapedInput(GeometryError, ValueError):
    pass


@dataclass(frozen=True)
class Guard:
    position: Point
    arc: BoundaryArc
    # points the two wedge rays pass through (arc start and arc end)
    wedge: tuple = ()


@dataclass(frozen=True)
class GuardSet:
    """Guards in ccw order of their arcs, plus how the set was produced.

    ``breakpoints`` is only filled by the greedy algorithm: the cw endpoint
    p'_1 first, then p_2, p_3, ..., p_m.
    """
    polygon: Polygon
    guards: tuple
    start: Optional[BoundaryPoint] = None
    breakpoints: tuple = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.guards)

    def __iter__(self):
        return iter(self.guards)

    @property
    def size(self) -> int:
        return len(self.guards)

    @property
    def positions(self) -> tuple:
        return tuple(g.position for g in self.guards)


def make_guard(polygon: Polygon, position: Point, arc: BoundaryArc) -> Guard:
    return Guard(position, arc, (arc.start.point(polygon), arc.end.point(polygon)))


def choose_guard_position(witness: Region) -> Point:
    """Lexicographically smallest (x, then y) point of a nonempty region."""
    if witness.is_empty:
        raise EmptyRegion("cannot place a guard in an empty region")
    return witness.lexmin()


def _chain_core(polygon: Polygon, first: int, count: int) -> Region:
    """Intersection of visibility polygons of ``count`` consecutive vertices from ``first``."""
    n = polygon.n
    first %= n
    memo = polygon._memo
    key = ("core", first, count)
    hit = memo.get(key)
    if hit is not None:
        return hit
    # extend the longest cached prefix
    k = count - 1
    while k >= 1 and ("core", first, k) not in memo:
        k -= 1
    if k == 0:
        region = visibility_polygon(polygon, polygon.vertex(first))
        memo[("core", first, 1)] = region
        k = 1
    else:
        region = memo[("core", first, k)]
    while k < count:
        if not region.is_empty:
            region = region & visibility_polygon(polygon, polygon.vertex(first + k))
        k += 1
        memo[("core", first, k)] = region
    return region


def _is_star(polygon: Polygon) -> bool:
    return not kernel(polygon).is_empty


def farthest_coverable(polygon: Polygon, p: BoundaryPoint, direction: str = CCW):
    """Farthest boundary point ``q`` from ``p`` (ccw or cw) such that the chain
    between them can be covered by one guard.

    Returns ``(q, witness)`` where ``witness`` is the covering region of the
    chain.  The chain grows vertex by vertex while its covering region stays
    nonempty; on the first failing edge the answer is located among the
    points where lines from region corners through reflex vertices (and lines
    through reflex pairs) cross that edge, each re-verified exactly.
    """
    if direction not in (CCW, CW):
        raise ValueError(f"direction must be 'ccw' or 'cw', got {direction!r}")
    memo = polygon._memo
    key = ("far", p, direction)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if _is_star(polygon):
        raise StarShapedInput("polygon is star-shaped; one guard covers everything")

    n = polygon.n
    ccw = direction == CCW
    p_pt = p.point(polygon)
    vis_p = visibility_polygon(polygon, p_pt)
    lmax = n - 1 if p.is_vertex else n
    if ccw:
        a = p.edge + 1
        block_start = lambda length: a  # noqa: E731
        vert = lambda k: polygon.vertex(a + k)  # noqa: E731
    else:
        a = p.edge - 1 if p.is_vertex else p.edge
        block_start = lambda length: a - length + 1  # noqa: E731
        vert = lambda k: polygon.vertex(a - k)  # noqa: E731

    def region_for(length):
        core = _chain_core(polygon, block_start(length), length)
        return vis_p & core if core else core

    # largest number of chain vertices whose covering region is nonempty
    lo, hi = 1, lmax
    best = region_for(1)
    assert best, "a boundary point always sees the next vertex"
    while lo < hi:
        mid = (lo + hi + 1) // 2
        r = region_for(mid)
        if r:
            lo, best = mid, r
        else:
            hi = mid - 1
    length = lo
    start = vert(length - 1)
    stop = vert(length) if length < lmax else p_pt

    cands = _edge_candidates(polygon, best, start, stop)
    # coverable parameters form a prefix [0, u*]; binary search the sorted candidates
    lo, hi = 0, len(cands) - 1
    witness = best
    while lo < hi:
        mid = (lo + hi + 1) // 2
        u = cands[mid]
        x = Point(start[0] + u * (stop[0] - start[0]), start[1] + u * (stop[1] - start[1]))
        r = best & visibility_polygon(polygon, x)
        if r:
            lo, witness = mid, r
        else:
            hi = mid - 1
    u = cands[lo]
    x = Point(start[0] + u * (stop[0] - start[0]), start[1] + u * (stop[1] - start[1]))
    q = locate(polygon, x)
    result = (q, witness)
    memo[key] = result
    return result


def _edge_candidates(polygon: Polygon, region: Region, start: Point, stop: Point) -> list:
    """Sorted parameters u in [0, 1) along ``start -> stop`` where the farthest
    coverable point may sit."""
    ex, ey = stop[0] - start[0], stop[1] - start[1]
    reflex = polygon.reflex_vertices
    us = {ZERO}

    def add(c, r):
        dx, dy = r[0] - c[0], r[1] - c[1]
        den = dx * ey - dy * ex
        if den == 0:
            return
        u = -(dx * (start[1] - c[1]) - dy * (start[0] - c[0])) / den
        if 0 < u < 1:
            us.add(u)

    for c in region.points():
        for r in reflex:
            if c != r:
                add(c, r)
    for i, r in enumerate(reflex):
        for s in reflex[i + 1:]:
            add(r, s)
    return sorted(us)


def greedy_guarding(polygon: Polygon, p1: BoundaryPoint) -> GuardSet:
    """Greedy contiguous guarding from starting point ``p1``; at most OPT + 1 guards."""
    n = polygon.n
    ker = kernel(polygon)
    if ker:
        arc = BoundaryArc(p1, p1, full=True)
        return GuardSet(polygon, (make_guard(polygon, choose_guard_position(ker), arc),), p1)

    p2, _ = farthest_coverable(polygon, p1, CCW)
    p1b, w1 = farthest_coverable(polygon, p2, CW)
    guards = [make_guard(polygon, choose_guard_position(w1), BoundaryArc(p1b, p2))]
    target = (p1b.lam - p2.lam) % n
    travelled = ZERO
    prev = p2
    breakpoints = [p1b, p2]
    while True:
        q, w = farthest_coverable(polygon, prev, CCW)
        step = (q.lam - prev.lam) % n
        breakpoints.append(q)
        pos = choose_guard_position(w)
        if travelled + step >= target:
            guards.append(make_guard(polygon, pos, BoundaryArc(prev, p1b)))
            break
        guards.append(make_guard(polygon, pos, BoundaryArc(prev, q)))
        travelled += step
        prev = q
    return GuardSet(polygon, tuple(guards), p1, tuple(breakpoints))
