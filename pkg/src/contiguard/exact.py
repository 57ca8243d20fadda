"""Polynomial-time optimal contiguous guarding.

Run the greedy algorithm from every point of a start set S and keep the
smallest result.  S is built from candidate guard locations Q (vertices,
extension endpoints and extension crossings) by shooting rays from each
candidate through the reflex vertices it sees.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .geometry import (
    BoundaryPoint, Overlap, Point, PointOutsidePolygon, Polygon, _ray_contacts,
    locate, ray_first_hit, segment_intersection,
)
from .greedy import GuardSet, greedy_guarding
from .visibility import kernel, sees

__all__ = [
    "Extension", "CandidateSets", "compute_extensions", "compute_Q", "compute_F",
    "compute_S", "candidate_sets", "exact_guarding",
]


@dataclass(frozen=True)
class Extension:
    """A chord of the polygon through reflex vertices.

    ``kind`` is ``"edge"`` (an edge prolonged past its reflex endpoint
    ``sources[0]``) or ``"vertex"`` (the line through two mutually visible
    reflex vertices, clipped to the polygon).
    """
    segment: tuple
    kind: str
    sources: tuple


@dataclass
class CandidateSets:
    Q: list
    S: list
    provenance: dict = field(default_factory=dict)


def _reflect(c: Point, a: Point) -> Point:
    """Point beyond ``c`` on the ray from ``a`` through ``c``."""
    return Point(2 * c[0] - a[0], 2 * c[1] - a[1])


def compute_extensions(polygon: Polygon) -> list:
    memo = polygon._memo
    if "extensions" in memo:
        return list(memo["extensions"])
    v = polygon.vertices
    n = polygon.n
    out = []
    ridx = polygon.reflex_indices
    for i in ridx:
        r = v[i]
        for nb in (v[i - 1], v[(i + 1) % n]):
            hit = ray_first_hit(polygon, r, _reflect(r, nb))
            if hit is not None:
                out.append(Extension((r, hit.point(polygon)), "edge", (r,)))
    for a_i, i in enumerate(ridx):
        for j in ridx[a_i + 1:]:
            r1, r2 = v[i], v[j]
            if not sees(polygon, r1, r2):
                continue
            y = ray_first_hit(polygon, r1, _reflect(r1, r2))
            z = ray_first_hit(polygon, r2, _reflect(r2, r1))
            ya = y.point(polygon) if y is not None else r1
            zb = z.point(polygon) if z is not None else r2
            out.append(Extension((ya, zb), "vertex", (r1, r2)))
    memo["extensions"] = tuple(out)
    return out


def compute_Q(polygon: Polygon) -> list:
    """Vertices, boundary contacts of extensions, and pairwise extension crossings.

    Returned in lexicographic order.
    """
    return sorted(_q_with_provenance(polygon))


def _q_with_provenance(polygon: Polygon) -> dict:
    memo = polygon._memo
    if "Q" in memo:
        return memo["Q"]
    prov: dict = {}
    for i, p in enumerate(polygon.vertices):
        prov.setdefault(p, f"vertex {i}")
    exts = compute_extensions(polygon)
    for k, ext in enumerate(exts):
        a, b = ext.segment
        d = Point(b[0] - a[0], b[1] - a[1])
        for sa, sb in _ray_contacts(polygon, a, d):
            if sa > 1:
                break
            for s in {sa, min(sb, sa.__class__(1))}:
                prov.setdefault(Point(a[0] + s * d[0], a[1] + s * d[1]), f"extension {k} meets boundary")
    for i in range(len(exts)):
        for j in range(i + 1, len(exts)):
            hit = segment_intersection(exts[i].segment, exts[j].segment)
            if hit is None:
                continue
            pts = (hit.start, hit.end) if isinstance(hit, Overlap) else (hit,)
            for p in pts:
                prov.setdefault(p, f"extensions {i} and {j} cross")
    memo["Q"] = prov
    return prov


def compute_F(polygon: Polygon, q: Point) -> list:
    """Possible first arc endpoints for a guard at ``q``.

    For every reflex vertex r seen from q: r itself and the first boundary
    point hit by the ray q->r past r.  ``q`` is included when it lies on the
    boundary.
    """
    if polygon.classify(q) < 0:
        raise PointOutsidePolygon(f"{q} lies outside the polygon")
    out = set()
    own = locate(polygon, q)
    if own is not None:
        out.add(own)
    for r in polygon.reflex_vertices:
        if r == q or not sees(polygon, q, r):
            continue
        out.add(locate(polygon, r))
        hit = ray_first_hit(polygon, q, r, skip=r)
        if hit is not None:
            out.add(hit)
    return sorted(out)


def compute_S(polygon: Polygon) -> list:
    """Union of F(q) over Q, plus every vertex, sorted by lambda."""
    return candidate_sets(polygon).S


def candidate_sets(polygon: Polygon) -> CandidateSets:
    memo = polygon._memo
    if "cands" in memo:
        return memo["cands"]
    prov = _q_with_provenance(polygon)
    Q = sorted(prov)
    S = {BoundaryPoint(i, 0) for i in range(polygon.n)}
    for q in Q:
        S.update(compute_F(polygon, q))
    result = CandidateSets(Q, sorted(S), dict(prov))
    memo["cands"] = result
    return result


def _greedy_sizes(args):
    polygon, starts = args
    return [(len(g), g) for g in (greedy_guarding(polygon, s) for s in starts)]


def exact_guarding(polygon: Polygon, workers: Optional[int] = None, early_stop: bool = True) -> GuardSet:
    """Minimum contiguous guarding.

    Greedy runs from every start point in S; the smallest result wins, ties
    broken by the smallest start lambda.  With ``early_stop`` the scan halts
    once the best size matches a proven lower bound (2 for a polygon that is
    not star-shaped, or any greedy size minus one); the answer is identical
    to the full scan.  ``workers > 1`` farms chunks of S out to processes in
    lambda order, again with an identical answer.
    """
    ker = kernel(polygon)
    if ker:
        return greedy_guarding(polygon, BoundaryPoint(0, 0))
    starts = compute_S(polygon)
    best: Optional[GuardSet] = None
    lower = 2

    def consider(g: GuardSet):
        nonlocal best, lower
        lower = max(lower, len(g) - 1)
        if best is None or len(g) < len(best):
            best = g

    if not workers or workers <= 1:
        for s in starts:
            consider(greedy_guarding(polygon, s))
            if early_stop and len(best) <= lower:
                break
        return best

    chunk = max(1, len(starts) // (workers * 4))
    batches = [starts[i:i + chunk] for i in range(0, len(starts), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for results in pool.map(_greedy_sizes, [(polygon, b) for b in batches]):
            for _, g in results:
                consider(g)
            if early_stop and len(best) <= lower:
                break
    return best
