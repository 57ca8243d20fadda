"""Combinatorial upper bound on contiguous guards and the matching lower-bound family.

Every polygon with n >= 4 vertices can be covered contiguously by at most
floor((n - 2) / 2) vertex guards; :func:`combinatorial_cover` builds such a
cover from a triangulation.  :func:`comb_polygon` generates polygons that need
exactly that many.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

from gmpy2 import mpq

from .geometry import (
    BoundaryArc, BoundaryPoint, GeometryError, Point, Polygon, triangulate,
    validate_polygon,
)
from .greedy import Guard, GuardSet, make_guard
from .visibility import covers

__all__ = [
    "EmptyArc", "ConstructionFailed", "TriangulationDual", "SixEdgesOneVertex",
    "SevenEdgesTwoVertices", "FourPlusFour", "chain_cover", "triangulation_dual",
    "lemma1_configuration", "combinatorial_cover", "comb_polygon", "comb_polygon_odd",
]


class EmptyArc(ValueError):
    pass


class ConstructionFailed(RuntimeError):
    pass


def _arc(n: int, first: int, count: int) -> BoundaryArc:
    """Arc of ``count`` edges starting at vertex ``first``."""
    if count >= n:
        return BoundaryArc(BoundaryPoint(first % n), BoundaryPoint(first % n), full=True)
    return BoundaryArc(BoundaryPoint(first % n), BoundaryPoint((first + count) % n))


def _edge_count(polygon: Polygon, arc: BoundaryArc) -> int:
    if not (arc.start.is_vertex and arc.end.is_vertex):
        raise ValueError("chain endpoints must be polygon vertices")
    return int(arc.length(polygon.n))


def chain_cover(polygon: Polygon, arc: BoundaryArc) -> tuple:
    """Guards at every second vertex of a vertex-to-vertex chain.

    A chain of k edges gets ceil(k / 2) guards; each guard owns the one or
    two chain edges incident to it.
    """
    n = polygon.n
    k = _edge_count(polygon, arc)
    if k == 0:
        raise EmptyArc("chain has no edges")
    s = arc.start.edge
    guards = []
    i = 1
    while i < k:
        guards.append(make_guard(polygon, polygon.vertex(s + i), _arc(n, s + i - 1, 2)))
        i += 2
    if k % 2:
        guards.append(make_guard(polygon, polygon.vertex(s + k), _arc(n, s + k - 1, 1)))
    return tuple(guards)


# --------------------------------------------------------------------------
# triangulation dual


@dataclass(frozen=True)
class TriangulationDual:
    triangles: tuple
    adjacency: tuple
    # diameter path as triangle indices; path[0] and path[-1] are leaves
    path: tuple

    @property
    def p(self) -> int:
        return self.path[0]

    @property
    def p_prime(self) -> int:
        return self.path[1]

    @property
    def q(self) -> int:
        return self.path[-1]

    @property
    def q_prime(self) -> int:
        return self.path[-2]


def _diagonals(tri) -> list:
    a, b, c = tri
    return [frozenset(e) for e in ((a, b), (b, c), (c, a))]


def _farthest(adj, src):
    dist = {src: 0}
    parent = {src: None}
    dq = deque([src])
    last = src
    while dq:
        u = dq.popleft()
        last = u
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                dq.append(w)
    path = [last]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return last, path


def triangulation_dual(polygon: Polygon) -> TriangulationDual:
    tris = tuple(triangulate(polygon))
    owner: dict = {}
    for t, tri in enumerate(tris):
        for e in _diagonals(tri):
            owner.setdefault(e, []).append(t)
    adj = [[] for _ in tris]
    for ts in owner.values():
        if len(ts) == 2:
            a, b = ts
            adj[a].append(b)
            adj[b].append(a)
    adj = tuple(tuple(sorted(a)) for a in adj)
    far, _ = _farthest(adj, 0)
    _, path = _farthest(adj, far)
    return TriangulationDual(tris, adj, tuple(path))


# --------------------------------------------------------------------------
# the three witness configurations


@dataclass(frozen=True)
class SixEdgesOneVertex:
    vertex: int
    arc: BoundaryArc


@dataclass(frozen=True)
class SevenEdgesTwoVertices:
    vertex1: int
    arc1: BoundaryArc
    vertex2: int
    arc2: BoundaryArc


@dataclass(frozen=True)
class FourPlusFour:
    vertex1: int
    arc1: BoundaryArc
    vertex2: int
    arc2: BoundaryArc


Configuration = Union[SixEdgesOneVertex, SevenEdgesTwoVertices, FourPlusFour]


def _boundary_edges(tri, n) -> list:
    """Edge indices of ``tri`` that are polygon edges."""
    out = []
    for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
        if (a + 1) % n == b:
            out.append(a)
        elif (b + 1) % n == a:
            out.append(b)
    return out


def _end_run(dual: TriangulationDual, leaf: int, nbr: int, n: int):
    """Witness vertex and first edge of the 4-edge run at one end of the diameter."""
    tris = dual.triangles
    # an ear's tip x has edges x-1 and x on the boundary
    tip = next(v for v in tris[leaf] if (v - 1) % n in tris[leaf] and (v + 1) % n in tris[leaf])
    others = [t for t in dual.adjacency[nbr] if t != leaf and t not in dual.path]
    if others:
        # a second ear hangs off nbr; the two ears share the middle vertex of the run
        mid = (set(tris[leaf]) & set(tris[others[0]])).pop()
        return mid, (mid - 2) % n
    # degree 2: the ear plus the single boundary edge of nbr form a 3-edge chain;
    # the chain end lying in both triangles also sees its other incident edge
    (e,) = _boundary_edges(tris[nbr], n)
    v = (tip - 1) % n if e == (tip + 1) % n else (tip + 1) % n
    return v, (tip - 2) % n


def lemma1_configuration(polygon: Polygon) -> Configuration:
    """Witness vertices covering 6, 3+4 or 4+4 boundary edges (n >= 8)."""
    n = polygon.n
    if n < 8:
        raise ValueError("needs at least 8 vertices")
    dual = triangulation_dual(polygon)
    v1, f1 = _end_run(dual, dual.p, dual.p_prime, n)
    v2, f2 = _end_run(dual, dual.q, dual.q_prime, n)
    run1 = {(f1 + i) % n for i in range(4)}
    run2 = {(f2 + i) % n for i in range(4)}
    shared = run1 & run2
    if v1 == v2:
        first = next(e for e in run1 | run2 if (e - 1) % n not in run1 | run2)
        result: Configuration = SixEdgesOneVertex(v1, _arc(n, first, len(run1 | run2)))
    elif len(shared) == 1:
        # the witness whose run is first ccw keeps the shared edge
        if (f2 - f1) % n <= 3:
            result = SevenEdgesTwoVertices(v1, _arc(n, f1, 4), v2, _arc(n, f1 + 4, 3))
        else:
            result = SevenEdgesTwoVertices(v2, _arc(n, f2, 4), v1, _arc(n, f2 + 4, 3))
    elif not shared:
        result = FourPlusFour(v1, _arc(n, f1, 4), v2, _arc(n, f2, 4))
    else:
        raise GeometryError(f"runs share {len(shared)} edges")
    for v, arc in _witnesses(result):
        if not covers(polygon, polygon.vertex(v), arc):
            raise GeometryError(f"vertex {v} does not cover its claimed run")
    return result


def _witnesses(cfg: Configuration) -> list:
    if isinstance(cfg, SixEdgesOneVertex):
        return [(cfg.vertex, cfg.arc)]
    return [(cfg.vertex1, cfg.arc1), (cfg.vertex2, cfg.arc2)]


# --------------------------------------------------------------------------
# cover


def _vertex_covering(polygon: Polygon, arc: BoundaryArc):
    for i, v in enumerate(polygon.vertices):
        if covers(polygon, v, arc):
            return i
    return None


def _sorted_set(polygon: Polygon, guards) -> GuardSet:
    guards = sorted(guards, key=lambda g: g.arc.start.lam)
    return GuardSet(polygon, tuple(guards))


def _split_cover(polygon: Polygon, sizes) -> GuardSet:
    n = polygon.n
    for i in range(n):
        for a in sizes:
            arc1 = _arc(n, i, a)
            arc2 = _arc(n, i + a, n - a)
            g1 = _vertex_covering(polygon, arc1)
            if g1 is None:
                continue
            g2 = _vertex_covering(polygon, arc2)
            if g2 is None:
                continue
            return _sorted_set(polygon, [make_guard(polygon, polygon.vertex(g1), arc1),
                                         make_guard(polygon, polygon.vertex(g2), arc2)])
    raise GeometryError("no two-vertex split cover found")


def combinatorial_cover(polygon: Polygon) -> GuardSet:
    """Contiguous vertex guarding with at most floor((n - 2) / 2) guards."""
    n = polygon.n
    if n < 4:
        raise ValueError("needs at least 4 vertices")
    if n <= 5:
        full = _arc(n, 0, n)
        g = _vertex_covering(polygon, full)
        if g is None:
            raise GeometryError("no single vertex covers the boundary")
        return GuardSet(polygon, (make_guard(polygon, polygon.vertex(g), full),))
    if n == 6:
        return _split_cover(polygon, (2,))
    if n == 7:
        return _split_cover(polygon, (3,))
    cfg = lemma1_configuration(polygon)
    guards: list[Guard] = []
    covered = set()
    for v, arc in _witnesses(cfg):
        guards.append(make_guard(polygon, polygon.vertex(v), arc))
        covered.update((arc.start.edge + i) % n for i in range(int(arc.length(n))))
    # remaining edges split into at most two vertex-to-vertex chains
    for e in range(n):
        if e in covered or (e - 1) % n not in covered:
            continue
        k = 0
        while (e + k) % n not in covered:
            k += 1
        guards.extend(chain_cover(polygon, _arc(n, e, k)))
    return _sorted_set(polygon, guards)


# --------------------------------------------------------------------------
# lower-bound family


def _arc_points(sagitta, count: int) -> list:
    """``count`` rational points strictly inside the circular arc from (-1, 0)
    to (1, 0) bulging up by ``sagitta``, left to right."""
    m = 1 / sagitta
    cy = -(m * m - 1) / (2 * m)
    r = (m * m + 1) / (2 * m)
    lo = -1 / m
    step = (2 / m) / (count + 1)
    pts = []
    for j in range(1, count + 1):
        t = lo + j * step
        d = 1 + t * t
        pts.append(Point(r * 2 * t / d, cy + r * (1 - t * t) / d))
    return pts


def _comb_vertices(k: int, D: int) -> list:
    a, b = Point(mpq(-1), mpq(0)), Point(mpq(1), mpq(0))
    outer = mpq(1, 2)
    inner = outer - mpq(1, D)
    lower = _arc_points(inner, 2 * k)
    upper = _arc_points(outer, 2 * k)
    return [a] + lower + [b] + upper[::-1]


def comb_polygon(k: int, start_D: int = 8, retries: int = 8) -> Polygon:
    """Crescent between two nearby circular arcs, each a convex chain of 2k + 1 edges.

    ``D`` sets the gap between the arcs (1 / D at the apex); it doubles until
    the exact algorithm confirms that 2k guards are needed.
    """
    from .exact import exact_guarding

    if k < 1:
        raise ValueError("k must be positive")
    if start_D <= 2:
        raise ValueError("start_D must exceed 2 so the inner chain still bulges")
    D = start_D
    for _ in range(retries):
        poly = validate_polygon(_comb_vertices(k, D))
        if len(exact_guarding(poly)) == 2 * k:
            return poly
        D *= 2
    raise ConstructionFailed(f"no valid comb polygon for k={k} up to D={D // 2}")


def comb_polygon_odd(k: int) -> Polygon:
    """:func:`comb_polygon` with the midpoint of its first edge inserted as a vertex."""
    base = comb_polygon(k)
    a, b = base.edge(0)
    mid = Point((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    vs = list(base.vertices)
    return validate_polygon(vs[:1] + [mid] + vs[1:])
