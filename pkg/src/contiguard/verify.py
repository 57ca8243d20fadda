"""Independent checks for guard sets and visibility."""
from __future__ import annotations

import random
from dataclasses import dataclass

from gmpy2 import mpq

from .geometry import (
    BoundaryPoint, Overlap, Point, Polygon, ray_first_hit,
    segment_intersection,
)
from .greedy import GuardSet, greedy_guarding
from .visibility import covers, visibility_polygon

__all__ = [
    "VerificationReport", "verify_guarding", "uncovered_intervals",
    "reference_minimum", "oracle_sees", "visibility_oracle_check",
]


@dataclass(frozen=True)
class VerificationReport:
    guard_ok: tuple
    # open lambda intervals (a, b) not covered; b < a means the gap wraps past 0
    uncovered: tuple
    removable: tuple

    @property
    def valid(self) -> bool:
        return not self.uncovered and all(self.guard_ok)

    @property
    def minimal(self) -> bool:
        return not self.removable


def _linear(arc, n):
    if arc.full:
        return [(mpq(0), mpq(n))]
    s, e = arc.start.lam, arc.end.lam
    if s <= e:
        return [(s, e)]
    return [(s, mpq(n)), (mpq(0), e)]


def uncovered_intervals(arcs, n: int) -> tuple:
    """Gaps in the circular union of closed arcs, exact in lambda."""
    spans = sorted(iv for arc in arcs for iv in _linear(arc, n))
    gaps = []
    reach = mpq(0)
    for a, b in spans:
        if a > reach:
            gaps.append((reach, a))
        reach = max(reach, b)
    if reach < n:
        gaps.append((reach, mpq(n)))
    # glue a gap touching n to one starting at 0
    if len(gaps) >= 2 and gaps[0][0] == 0 and gaps[-1][1] == n:
        gaps = [(gaps[-1][0], gaps[0][1])] + gaps[1:-1]
    return tuple(gaps)


def verify_guarding(polygon: Polygon, guards: GuardSet) -> VerificationReport:
    n = polygon.n
    gs = list(guards)
    ok = tuple(covers(polygon, g.position, g.arc) for g in gs)
    arcs = [g.arc for g in gs]
    gaps = uncovered_intervals(arcs, n)
    removable = ()
    if not gaps:
        removable = tuple(i for i in range(len(arcs))
                          if not uncovered_intervals(arcs[:i] + arcs[i + 1:], n))
    return VerificationReport(ok, gaps, removable)


def reference_minimum(polygon: Polygon, samples_per_edge: int):
    """Best greedy run over vertices plus evenly spaced points on each edge."""
    if samples_per_edge < 1:
        raise ValueError("samples_per_edge must be positive")
    starts = []
    for i in range(polygon.n):
        starts.append(BoundaryPoint(i, 0))
        starts.extend(BoundaryPoint(i, mpq(j, samples_per_edge + 1)) for j in range(1, samples_per_edge + 1))
    best = None
    for s in starts:
        g = greedy_guarding(polygon, s)
        if best is None or len(g) < len(best):
            best = g
    return len(best), best


# --------------------------------------------------------------------------
# from-scratch visibility built on segment_intersection only


def _inside_by_parity(polygon: Polygon, m: Point) -> bool:
    """Crossing parity of a ray from ``m`` that misses every vertex; ``m`` is off the boundary."""
    vs = polygon.vertices
    xs = [v[0] for v in vs]
    ys = [v[1] for v in vs]
    span = max(xs) - min(xs) + max(ys) - min(ys) + abs(m[0]) + abs(m[1]) + 1
    k = 1
    while True:
        slope = mpq(k, 7919)
        if all(v[1] - m[1] != slope * (v[0] - m[0]) for v in vs):
            break
        k += 1
    far = Point(m[0] + 4 * span, m[1] + 4 * span * slope)
    hits = sum(1 for e in polygon.edges() if segment_intersection((m, far), e) is not None)
    return hits % 2 == 1


def oracle_sees(polygon: Polygon, a: Point, b: Point) -> bool:
    """Closed visibility from scratch: split ``ab`` at every boundary contact and
    test each open piece that is not an overlap with an edge."""
    if a == b:
        return True
    d = (b[0] - a[0], b[1] - a[1])
    dd = d[0] * d[0] + d[1] * d[1]

    def param(p):
        return ((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]) / dd

    cuts = {mpq(0), mpq(1)}
    overlaps = []
    for e in polygon.edges():
        hit = segment_intersection((a, b), e)
        if hit is None:
            continue
        if isinstance(hit, Overlap):
            s0, s1 = sorted((param(hit.start), param(hit.end)))
            cuts.update((s0, s1))
            overlaps.append((s0, s1))
        else:
            cuts.add(param(hit))
    cuts = sorted(cuts)
    for s0, s1 in zip(cuts, cuts[1:]):
        if any(o0 <= s0 and s1 <= o1 for o0, o1 in overlaps):
            continue
        s = (s0 + s1) / 2
        m = Point(a[0] + s * d[0], a[1] + s * d[1])
        if not _inside_by_parity(polygon, m):
            return False
    return True


def _sample_boundary(polygon: Polygon, q: Point, rng: random.Random) -> BoundaryPoint:
    n = polygon.n
    if rng.random() < 0.5:
        return BoundaryPoint(rng.randrange(n), mpq(rng.randrange(1000), 1000))
    # a point where a ray from q grazes a vertex: visibility changes there
    v = polygon.vertex(rng.randrange(n))
    if v != q:
        hit = ray_first_hit(polygon, q, v, skip=v)
        if hit is not None:
            return hit
    return BoundaryPoint(rng.randrange(n), 0)


def visibility_oracle_check(polygon: Polygon, q: Point, trials: int, seed: int) -> bool:
    """Compare membership in the visibility polygon of ``q`` with :func:`oracle_sees`
    on ``trials`` boundary points drawn from ``random.Random(seed)``."""
    rng = random.Random(seed)
    region = visibility_polygon(polygon, q)
    for _ in range(trials):
        x = _sample_boundary(polygon, q, rng).point(polygon)
        if region.contains(x) != oracle_sees(polygon, q, x):
            return False
    return True
