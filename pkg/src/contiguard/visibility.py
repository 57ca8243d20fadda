"""Visibility, kernels and covering regions over exact rationals.

A :class:`Region` is stored as a union of closed convex pieces (polygons,
segments or single points).  Visibility polygons come out of the angular
sweep as a fan of triangles around the viewpoint, so intersecting regions
only ever needs convex-convex clipping, which is easy to do exactly.
"""
from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable, Optional, Sequence

from .geometry import (
    ZERO, BoundaryArc, GeometryError, Point, PointOutsidePolygon, Polygon,
    _ray_contacts, _ray_exit, arc_vertices, cross, line_intersection,
    segment_intersection, triangulate, validate_polygon,
)

__all__ = [
    "Region", "MultipleComponents", "sees", "visibility_polygon", "kernel",
    "region_intersection", "covering_region", "covers",
]


class MultipleComponents(GeometryError):
    """A covering region split into several pieces; this is a bug, not an input error."""


# --------------------------------------------------------------------------
# convex pieces

def _bbox(pts):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), min(ys), max(xs), max(ys)


def _hull(pts) -> tuple:
    """Convex hull, ccw, collinear points dropped; 1 or 2 points for degenerate input."""
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return tuple(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return (pts[0], pts[-1])
    return tuple(hull)


def _clip_halfplane(poly, a, b):
    out = []
    m = len(poly)
    for i in range(m):
        p = poly[i]
        q = poly[(i + 1) % m] if m > 1 else p
        cp = cross(a, b, p)
        cq = cross(a, b, q)
        if cp >= 0:
            out.append(p)
        if (cp > 0 and cq < 0) or (cp < 0 and cq > 0):
            t = cp / (cp - cq)
            out.append(Point(p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _convex_intersection(A: tuple, B: tuple) -> tuple:
    if len(B) < 3 and len(A) >= 3:
        A, B = B, A
    if len(B) >= 3:
        cur = list(A)
        m = len(B)
        for i in range(m):
            cur = _clip_halfplane(cur, B[i], B[(i + 1) % m])
            if not cur:
                return ()
        return _hull(cur)
    # both degenerate
    if len(A) == 1 or len(B) == 1:
        p, other = (A[0], B) if len(A) == 1 else (B[0], A)
        if len(other) == 1:
            return (p,) if p == other[0] else ()
        return (p,) if _between(p, *other) else ()
    hit = segment_intersection(A, B)
    if hit is None:
        return ()
    if isinstance(hit, Point):
        return (hit,)
    return (hit.start, hit.end)


def _between(p, a, b) -> bool:
    return (cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _piece_contains(piece: tuple, p: Point) -> bool:
    m = len(piece)
    if m == 1:
        return piece[0] == p
    if m == 2:
        return _between(p, piece[0], piece[1])
    for i in range(m):
        if cross(piece[i], piece[(i + 1) % m], p) < 0:
            return False
    return True


def _boxes_overlap(b1, b2) -> bool:
    return b1[0] <= b2[2] and b2[0] <= b1[2] and b1[1] <= b2[3] and b2[1] <= b1[3]


def _area2(piece) -> object:
    if len(piece) < 3:
        return ZERO
    s = ZERO
    m = len(piece)
    for i in range(m):
        a, b = piece[i], piece[(i + 1) % m]
        s += a[0] * b[1] - a[1] * b[0]
    return s


# --------------------------------------------------------------------------
# Region

class Region:
    """Closed planar point set held as a union of convex pieces.

    ``kind`` is one of ``"polygon"``, ``"segment"``, ``"point"`` or
    ``"empty"`` (``"polyline"`` for the unusual case of a bent measure-zero
    set).  ``vertices`` gives the outline: the outer boundary loop, ccw, for
    polygons; the two endpoints for a segment.  Lower-dimensional spurs
    hanging off a polygon are part of the set but not of the outline.
    """

    __slots__ = ("pieces", "boxes", "_outline")

    def __init__(self, pieces: Iterable[tuple] = ()):
        self.pieces = tuple(pieces)
        self.boxes = tuple(_bbox(p) for p in self.pieces)
        self._outline = None

    @classmethod
    def from_polygon(cls, vertices: Sequence) -> "Region":
        poly = validate_polygon(vertices)
        return cls(_hull([poly.vertices[i] for i in tri]) for tri in triangulate(poly))

    @classmethod
    def from_points(cls, pts: Sequence) -> "Region":
        """Convex hull of ``pts`` as a single-piece region."""
        h = _hull([Point(*p) for p in pts])
        return cls([h] if h else [])

    @classmethod
    def empty(cls) -> "Region":
        return cls(())

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    def __bool__(self) -> bool:
        return bool(self.pieces)

    def contains(self, p: Point) -> bool:
        for piece, bb in zip(self.pieces, self.boxes):
            if bb[0] <= p[0] <= bb[2] and bb[1] <= p[1] <= bb[3] and _piece_contains(piece, p):
                return True
        return False

    def area(self):
        return sum((_area2(p) for p in self.pieces), ZERO) / 2

    def points(self) -> set:
        """Every corner of every piece (a superset of the outline vertices)."""
        return {q for p in self.pieces for q in p}

    def lexmin(self) -> Point:
        if not self.pieces:
            raise EmptyRegion("region is empty")
        return min(p[0] for p in self.pieces)  # hulls start at their lexmin corner

    def intersect(self, other: "Region") -> "Region":
        full, thin = [], []
        for pa, ba in zip(self.pieces, self.boxes):
            for pb, bb in zip(other.pieces, other.boxes):
                if not _boxes_overlap(ba, bb):
                    continue
                r = _convex_intersection(pa, pb)
                if r:
                    (full if len(r) >= 3 else thin).append(r)
        return Region(full + _prune_thin(thin, full))

    __and__ = intersect

    def components(self) -> list:
        m = len(self.pieces)
        parent = list(range(m))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(m):
            for j in range(i + 1, m):
                if find(i) == find(j) or not _boxes_overlap(self.boxes[i], self.boxes[j]):
                    continue
                if _convex_intersection(self.pieces[i], self.pieces[j]):
                    parent[find(i)] = find(j)
        groups: dict = {}
        for i in range(m):
            groups.setdefault(find(i), []).append(self.pieces[i])
        return [Region(g) for g in groups.values()]

    @property
    def kind(self) -> str:
        if not self.pieces:
            return "empty"
        if any(len(p) >= 3 for p in self.pieces):
            return "polygon"
        pts = sorted(self.points())
        if len(pts) == 1:
            return "point"
        a, b = pts[0], pts[-1]
        if all(cross(a, b, p) == 0 for p in pts):
            return "segment"
        return "polyline"

    @property
    def vertices(self) -> tuple:
        if self._outline is None:
            self._outline = self._compute_outline()
        return self._outline

    def _compute_outline(self) -> tuple:
        kind = self.kind
        if kind == "empty":
            return ()
        if kind != "polygon":
            pts = sorted(self.points())
            if kind == "point":
                return (pts[0],)
            if kind == "segment":
                return (pts[0], pts[-1])
            return tuple(pts)
        return _outline([p for p in self.pieces if len(p) >= 3])

    def same_set(self, other: "Region") -> bool:
        """Point-set equality checked through mutual containment of corners and equal area."""
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        return (self.area() == other.area()
                and all(other.contains(p) for p in self.points())
                and all(self.contains(p) for p in other.points()))

    def __repr__(self) -> str:
        return f"Region(kind={self.kind!r}, pieces={len(self.pieces)})"


class EmptyRegion(GeometryError, ValueError):
    pass


def _prune_thin(thin: list, full: list) -> list:
    """Drop segments/points already inside a 2D piece, plus duplicates."""
    keep = []
    seen = set()
    for t in thin:
        if t in seen:
            continue
        seen.add(t)
        if any(all(_piece_contains(f, q) for q in t) for f in full):
            continue
        keep.append(t)
    out = []
    for i, t in enumerate(keep):
        if len(t) == 1 and any(len(u) == 2 and _piece_contains(u, t[0]) for u in keep):
            continue
        out.append(t)
    return out


def _line_key(a, b):
    A = b[1] - a[1]
    B = a[0] - b[0]
    C = A * a[0] + B * a[1]
    if A != 0:
        return (1, B / A, C / A)
    return (0, 1, C / B)


def _outline(pieces: list) -> tuple:
    """Outer boundary loop of a union of interior-disjoint convex polygons."""
    groups: dict = {}
    for piece in pieces:
        m = len(piece)
        for i in range(m):
            a, b = piece[i], piece[(i + 1) % m]
            groups.setdefault(_line_key(a, b), []).append((a, b))
    segs = []
    for edges in groups.values():
        for a, b in edges:
            dx, dy = b[0] - a[0], b[1] - a[1]
            dd = dx * dx + dy * dy
            cover = []
            for c, d in edges:
                if (d[0] - c[0]) * dx + (d[1] - c[1]) * dy >= 0:
                    continue
                t0 = ((d[0] - a[0]) * dx + (d[1] - a[1]) * dy) / dd
                t1 = ((c[0] - a[0]) * dx + (c[1] - a[1]) * dy) / dd
                if t1 > 0 and t0 < 1:
                    cover.append((max(t0, ZERO), min(t1, ZERO + 1)))
            cover.sort()
            cur = ZERO
            for t0, t1 in cover:
                if t0 > cur:
                    segs.append((a + Point(dx * cur, dy * cur), a + Point(dx * t0, dy * t0)))
                cur = max(cur, t1)
            if cur < 1:
                segs.append((a + Point(dx * cur, dy * cur), b))
    if not segs:
        return ()
    nxt: dict = {}
    for a, b in segs:
        nxt.setdefault(a, []).append(b)
    start = min(nxt)
    loop = [start]
    cur = start
    prev = None
    while True:
        outs = nxt[cur]
        if len(outs) == 1 or prev is None:
            b = min(outs) if prev is None else outs[0]
        else:
            # at a pinch take the sharpest right turn to keep the loop simple
            b = _rightmost(prev, cur, outs)
        outs.remove(b)
        if not outs:
            del nxt[cur]
        if b == start:
            break
        loop.append(b)
        prev, cur = cur, b
        if cur not in nxt:
            break
    return _drop_collinear(loop)


def _rightmost(prev, cur, outs):
    back = Point(prev[0] - cur[0], prev[1] - cur[1])
    return min(outs, key=cmp_to_key(lambda u, v: _cmp_ccw_from(back, u - cur, v - cur)))


def _drop_collinear(loop):
    out = list(loop)
    changed = True
    while changed and len(out) > 3:
        changed = False
        for i in range(len(out)):
            if cross(out[i - 1], out[i], out[(i + 1) % len(out)]) == 0:
                del out[i]
                changed = True
                break
    return tuple(out)


# --------------------------------------------------------------------------
# angular ordering

def _half(v) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _cmp_angle(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _cmp_ccw_from(ref, u, v) -> int:
    """Order directions by ccw angle measured from ``ref`` (``ref`` itself sorts last)."""
    ru, rv = _ccw_class(ref, u), _ccw_class(ref, v)
    if ru != rv:
        return ru - rv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _ccw_class(ref, w) -> int:
    c = ref[0] * w[1] - ref[1] * w[0]
    d = ref[0] * w[0] + ref[1] * w[1]
    if c > 0:
        return 0
    if c == 0 and d < 0:
        return 1
    if c < 0:
        return 1
    return 2


# --------------------------------------------------------------------------
# visibility

def _check_inside(polygon: Polygon, p: Point) -> int:
    cls = polygon.classify(p)
    if cls < 0:
        raise PointOutsidePolygon(f"{p} lies outside the polygon")
    return cls


def _segment_inside(polygon: Polygon, a: Point, b: Point) -> bool:
    d = Point(b[0] - a[0], b[1] - a[1])
    cur = ZERO
    for sa, sb in _ray_contacts(polygon, a, d):
        if sa > 1:
            break
        if sb <= cur:
            continue
        if sa > cur:
            mid = (cur + sa) / 2
            if polygon.classify(Point(a[0] + mid * d[0], a[1] + mid * d[1])) < 0:
                return False
        cur = sb
        if cur >= 1:
            return True
    mid = (cur + 1) / 2
    return polygon.classify(Point(a[0] + mid * d[0], a[1] + mid * d[1])) >= 0


def _properly_blocked(polygon: Polygon, a: Point, b: Point) -> bool:
    """Some edge crosses ab transversally at interior points of both."""
    v = polygon.vertices
    n = len(v)
    for i in range(n):
        c, d = v[i], v[(i + 1) % n]
        d1 = cross(a, b, c)
        d2 = cross(a, b, d)
        if (d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0):
            d3 = cross(c, d, a)
            d4 = cross(c, d, b)
            if (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0):
                return True
    return False


def sees(polygon: Polygon, a: Point, b: Point) -> bool:
    """True iff the closed segment ``ab`` lies inside the closed polygon."""
    _check_inside(polygon, a)
    _check_inside(polygon, b)
    if a == b:
        return True
    if _properly_blocked(polygon, a, b):
        return False
    return _segment_inside(polygon, a, b)


def _fan(polygon: Polygon, q: Point) -> list:
    v = polygon.vertices
    n = len(v)
    dirs = sorted((Point(p[0] - q[0], p[1] - q[1]) for p in v if p != q), key=cmp_to_key(_cmp_angle))
    uniq = []
    for d in dirs:
        if uniq:
            u = uniq[-1]
            if u[0] * d[1] - u[1] * d[0] == 0 and u[0] * d[0] + u[1] * d[1] > 0:
                continue
        uniq.append(d)
    if len(uniq) > 1:
        u, d = uniq[0], uniq[-1]
        if u[0] * d[1] - u[1] * d[0] == 0 and u[0] * d[0] + u[1] * d[1] > 0:
            uniq.pop()
    m = len(uniq)
    pieces = []
    reach = [ZERO] * m  # how far along each critical ray the triangles already extend
    for i in range(m):
        di, dj = uniq[i], uniq[(i + 1) % m]
        c = di[0] * dj[1] - di[1] * dj[0]
        if c > 0:
            mid = Point(di[0] + dj[0], di[1] + dj[1])
        elif c < 0:
            mid = Point(-di[0] - dj[0], -di[1] - dj[1])
        else:
            mid = Point(-di[1], di[0])
        best = None
        best_edge = None
        for k in range(n):
            a, b = v[k], v[(k + 1) % n]
            ex, ey = b[0] - a[0], b[1] - a[1]
            den = mid[0] * ey - mid[1] * ex
            if den == 0:
                continue
            ax, ay = a[0] - q[0], a[1] - q[1]
            u = (ax * mid[1] - ay * mid[0]) / den
            if u < 0 or u > 1:
                continue
            s = (ax * ey - ay * ex) / den
            if s > 0 and (best is None or s < best):
                best, best_edge = s, (a, b)
        if best is None:
            continue
        half = best / 2
        if polygon.classify(Point(q[0] + half * mid[0], q[1] + half * mid[1])) <= 0:
            continue
        a, b = best_edge
        A = line_intersection(q, q + di, a, b)
        B = line_intersection(q, q + dj, a, b)
        pieces.append((q, A, B))
        sa = _param(q, di, A)
        sb = _param(q, dj, B)
        if sa > reach[i]:
            reach[i] = sa
        j = (i + 1) % m
        if sb > reach[j]:
            reach[j] = sb
    for i, d in enumerate(uniq):
        s = _ray_exit(polygon, q, d)
        if s > reach[i]:
            pieces.append((q, Point(q[0] + s * d[0], q[1] + s * d[1])))
    return pieces


def _param(q, d, p):
    dd = d[0] * d[0] + d[1] * d[1]
    return ((p[0] - q[0]) * d[0] + (p[1] - q[1]) * d[1]) / dd


def visibility_polygon(polygon: Polygon, q: Point) -> Region:
    """Closed visibility region of ``q`` as a fan of triangles (plus grazing spurs)."""
    key = ("vis", q)
    memo = polygon._memo
    hit = memo.get(key)
    if hit is not None:
        return hit
    _check_inside(polygon, q)
    raw = _fan(polygon, q)
    full = [_hull(p) for p in raw if len(p) == 3]
    thin = [_hull(p) for p in raw if len(p) == 2]
    region = Region(full + _prune_thin(thin, full))
    memo[key] = region
    return region


def kernel(polygon: Polygon) -> Region:
    """Intersection of the inner halfplanes of all edges; empty iff not star-shaped."""
    memo = polygon._memo
    hit = memo.get("kernel")
    if hit is not None:
        return hit
    x0, y0, x1, y1 = _bbox(polygon.vertices)
    cur = [Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)]
    for a, b in polygon.edges():
        cur = _clip_halfplane(cur, a, b)
        if not cur:
            break
    h = _hull(cur) if cur else ()
    region = Region([h] if h else [])
    memo["kernel"] = region
    return region


def region_intersection(A: Region, B: Region) -> list:
    """Connected components of ``A & B``."""
    return (A & B).components()


def covering_region(polygon: Polygon, arc: BoundaryArc, order: Optional[Sequence[int]] = None) -> Region:
    """Points that see the whole arc: the running intersection of the
    visibility polygons of the arc's vertices.

    ``order`` optionally permutes the vertex list; the result does not depend
    on it.  Raises :class:`MultipleComponents` if an intermediate region falls
    apart, which would contradict the connectivity of covering regions.
    """
    pts = arc_vertices(polygon, arc)
    if arc.full:
        pts = pts[:-1]
    if order is not None:
        pts = [pts[i] for i in order]
    region = visibility_polygon(polygon, pts[0])
    for p in pts[1:]:
        region = region & visibility_polygon(polygon, p)
        if region.is_empty:
            return region
        if len(region.components()) > 1:
            raise MultipleComponents(f"covering region split after adding {p}")
    return region


def covers(polygon: Polygon, g: Point, arc: BoundaryArc) -> bool:
    """True iff ``g`` sees every vertex of the arc (and therefore the whole arc)."""
    return all(sees(polygon, g, p) for p in arc_vertices(polygon, arc))
