"""Exact rational geometry: points, predicates, polygons and boundary addressing.

Every coordinate is a :class:`gmpy2.mpq`.  Floats are rejected on entry so no
rounding can leak into a predicate or a constructed point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Optional, Sequence, Union

from gmpy2 import mpq

__all__ = [
    "Scalar", "Point", "Overlap", "Polygon", "BoundaryPoint", "BoundaryArc",
    "GeometryError", "InvalidPolygon", "DuplicateVertex", "SelfIntersection",
    "TooFewVertices", "DegenerateRay", "PointOutsidePolygon",
    "scalar", "point", "orientation", "cross", "segment_intersection",
    "validate_polygon", "ray_first_hit", "arc_vertices", "arc_contains",
    "locate", "triangulate",
]

Scalar = type(mpq(0))
ZERO = mpq(0)
ONE = mpq(1)


class GeometryError(Exception):
    pass


class InvalidPolygon(GeometryError, ValueError):
    pass


class DuplicateVertex(InvalidPolygon):
    pass


class SelfIntersection(InvalidPolygon):
    pass


class TooFewVertices(InvalidPolygon):
    pass


class DegenerateRay(GeometryError, ValueError):
    pass


class PointOutsidePolygon(GeometryError, ValueError):
    pass


def scalar(v: Union[int, str, Rational, Scalar]) -> Scalar:
    """Coerce ``v`` to an exact rational.  Accepts ints, ``"num/den"`` strings,
    :class:`fractions.Fraction` and ``mpq``; floats raise ``TypeError``."""
    if isinstance(v, float):
        raise TypeError("floating point coordinates are not accepted; use a rational")
    if isinstance(v, Scalar):
        return v
    if isinstance(v, (int, str, Fraction)):
        return mpq(v)
    if isinstance(v, Rational):
        return mpq(int(v.numerator), int(v.denominator))
    raise TypeError(f"cannot convert {type(v).__name__} to a rational")


class Point(NamedTuple):
    x: Scalar
    y: Scalar

    def __add__(self, o):  # type: ignore[override]
        return Point(self.x + o[0], self.y + o[1])

    def __sub__(self, o):
        return Point(self.x - o[0], self.y - o[1])

    def scale(self, k) -> "Point":
        return Point(self.x * k, self.y * k)

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def point(x, y) -> Point:
    return Point(scalar(x), scalar(y))


class Overlap(NamedTuple):
    """Collinear overlap of two segments, endpoints in lexicographic order."""
    start: Point
    end: Point


def cross(o: Point, a: Point, b: Point) -> Scalar:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of ``(q - p) x (r - p)``: +1 left turn, -1 right turn, 0 collinear."""
    c = cross(p, q, r)
    return (c > 0) - (c < 0)


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    """``p`` lies on the closed segment ``ab`` (assumes nothing about collinearity)."""
    if cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segment_intersection(s1: Sequence[Point], s2: Sequence[Point]):
    """Intersect two closed segments.

    Returns ``None`` when disjoint, a :class:`Point` for a single shared point
    and an :class:`Overlap` for a collinear shared subsegment.
    """
    a, b = s1
    c, d = s2
    d1 = cross(a, b, c)
    d2 = cross(a, b, d)
    if d1 == 0 and d2 == 0:
        # collinear: project on the dominant axis
        lo1, hi1 = sorted((a, b))
        lo2, hi2 = sorted((c, d))
        lo = max(lo1, lo2)
        hi = min(hi1, hi2)
        if lo > hi:
            return None
        if lo == hi:
            return Point(*lo)
        return Overlap(Point(*lo), Point(*hi))
    d3 = cross(c, d, a)
    d4 = cross(c, d, b)
    if ((d1 > 0 and d2 > 0) or (d1 < 0 and d2 < 0)
            or (d3 > 0 and d4 > 0) or (d3 < 0 and d4 < 0)):
        return None
    # lines cross at a single point inside both segments
    ex, ey = b[0] - a[0], b[1] - a[1]
    fx, fy = d[0] - c[0], d[1] - c[1]
    den = ex * fy - ey * fx
    u = ((c[0] - a[0]) * fy - (c[1] - a[1]) * fx) / den
    return Point(a[0] + u * ex, a[1] + u * ey)


def line_intersection(a: Point, b: Point, c: Point, d: Point) -> Optional[Point]:
    """Intersection of the infinite lines ``ab`` and ``cd``; ``None`` if parallel."""
    ex, ey = b[0] - a[0], b[1] - a[1]
    fx, fy = d[0] - c[0], d[1] - c[1]
    den = ex * fy - ey * fx
    if den == 0:
        return None
    u = ((c[0] - a[0]) * fy - (c[1] - a[1]) * fx) / den
    return Point(a[0] + u * ex, a[1] + u * ey)


@dataclass(frozen=True, eq=False)
class Polygon:
    """A simple polygon with counter-clockwise vertices.

    Build instances through :func:`validate_polygon`.  ``reflex[i]`` is true
    when the interior angle at vertex ``i`` exceeds pi; collinear vertices count
    as convex.
    """
    vertices: tuple
    reflex: tuple
    was_reversed: bool = False
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def edge(self, i: int) -> tuple:
        n = len(self.vertices)
        return self.vertices[i % n], self.vertices[(i + 1) % n]

    def edges(self):
        v = self.vertices
        n = len(v)
        return [(v[i], v[(i + 1) % n]) for i in range(n)]

    @property
    def reflex_indices(self) -> tuple:
        return tuple(i for i, r in enumerate(self.reflex) if r)

    @property
    def reflex_vertices(self) -> tuple:
        return tuple(self.vertices[i] for i in self.reflex_indices)

    def area(self) -> Scalar:
        return _signed_area2(self.vertices) / 2

    def classify(self, p: Point) -> int:
        """+1 strictly inside, 0 on the boundary, -1 strictly outside."""
        px, py = p
        inside = False
        v = self.vertices
        a = v[-1]
        for b in v:
            ay, by = a[1], b[1]
            if (ay > py) != (by > py):
                c = (b[0] - a[0]) * (py - ay) - (by - ay) * (px - a[0])
                if c == 0:
                    return 0
                if (c > 0) == (by > ay):
                    inside = not inside
            elif ay == py == by and min(a[0], b[0]) <= px <= max(a[0], b[0]):
                return 0
            elif (ay == py and a[0] == px) or (by == py and b[0] == px):
                return 0
            a = b
        return 1 if inside else -1

    def contains(self, p: Point) -> bool:
        """Closed containment (boundary counts as inside)."""
        return self.classify(p) >= 0

    def transformed(self, scale=1, dx=0, dy=0) -> "Polygon":
        s, dx, dy = scalar(scale), scalar(dx), scalar(dy)
        if s <= 0:
            raise ValueError("scale must be positive")
        return validate_polygon([Point(x * s + dx, y * s + dy) for x, y in self.vertices])


def _signed_area2(vs) -> Scalar:
    total = ZERO
    n = len(vs)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        total += a[0] * b[1] - a[1] * b[0]
    return total


def validate_polygon(vertices: Sequence) -> Polygon:
    """Check simplicity and orientation, returning a counter-clockwise Polygon.

    Clockwise input is reversed and flagged through ``was_reversed``.
    """
    pts = [p if isinstance(p, Point) else point(*p) for p in vertices]
    n = len(pts)
    if n < 3:
        raise TooFewVertices(f"a polygon needs at least 3 vertices, got {n}")
    if len(set(pts)) != n:
        raise DuplicateVertex("polygon has repeated vertices")
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = pts[j], pts[(j + 1) % n]
            hit = segment_intersection((a, b), (c, d))
            if hit is None:
                continue
            if j == i + 1:
                shared = b
            elif i == 0 and j == n - 1:
                shared = a
            else:
                raise SelfIntersection(f"edges {i} and {j} intersect")
            if hit != shared:
                raise SelfIntersection(f"adjacent edges {i} and {j} overlap")
    area2 = _signed_area2(pts)
    if area2 == 0:
        raise SelfIntersection("polygon has zero area")
    reversed_ = area2 < 0
    if reversed_:
        pts.reverse()
    reflex = tuple(orientation(pts[i - 1], pts[i], pts[(i + 1) % n]) < 0 for i in range(n))
    return Polygon(tuple(pts), reflex, reversed_)


@dataclass(frozen=True, order=True)
class BoundaryPoint:
    """Point on the boundary addressed by ``edge`` index and ``t`` in [0, 1).

    A vertex is always ``(i, 0)``.  ``lam`` is the circular parameter edge + t.
    """
    edge: int
    t: Scalar = ZERO

    def __post_init__(self):
        t = scalar(self.t)
        object.__setattr__(self, "t", t)
        if not 0 <= t < 1:
            raise ValueError(f"t must lie in [0, 1), got {t}")

    @property
    def lam(self) -> Scalar:
        return self.edge + self.t

    @property
    def is_vertex(self) -> bool:
        return self.t == 0

    def point(self, polygon: Polygon) -> Point:
        a, b = polygon.edge(self.edge)
        if self.t == 0:
            return a
        t = self.t
        return Point(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))

    @classmethod
    def from_lam(cls, lam, n: int) -> "BoundaryPoint":
        lam = scalar(lam) % n
        e = int(lam.numerator // lam.denominator)
        return cls(e, lam - e)

    def __repr__(self) -> str:
        return f"BoundaryPoint({self.edge}, {self.t})"


@dataclass(frozen=True)
class BoundaryArc:
    """Counter-clockwise boundary chain from ``start`` to ``end``.

    ``full`` disambiguates the whole boundary from a single point when the two
    endpoints coincide.
    """
    start: BoundaryPoint
    end: BoundaryPoint
    full: bool = False

    def length(self, n: int) -> Scalar:
        """Extent in lambda units (n for the full boundary)."""
        if self.full:
            return mpq(n)
        return (self.end.lam - self.start.lam) % n


def locate(polygon: Polygon, p: Point) -> Optional[BoundaryPoint]:
    """Canonical boundary address of ``p``, or ``None`` if it is not on the boundary."""
    v = polygon.vertices
    n = len(v)
    for i in range(n):
        if v[i] == p:
            return BoundaryPoint(i, ZERO)
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        if _on_segment(p, a, b):
            if a[0] != b[0]:
                t = (p[0] - a[0]) / (b[0] - a[0])
            else:
                t = (p[1] - a[1]) / (b[1] - a[1])
            return BoundaryPoint(i, t)
    return None


def _require_boundary(polygon: Polygon, p: Point) -> BoundaryPoint:
    bp = locate(polygon, p)
    if bp is None:
        raise PointOutsidePolygon(f"{p} is not on the polygon boundary")
    return bp


def arc_contains(arc: BoundaryArc, p: BoundaryPoint, n: int) -> bool:
    """True iff ``p`` lies on ``arc`` (endpoints included), compared on lambda."""
    if arc.full:
        return True
    span = (arc.end.lam - arc.start.lam) % n
    off = (p.lam - arc.start.lam) % n
    return off <= span


def arc_vertices(polygon: Polygon, arc: BoundaryArc) -> list:
    """Start point, the polygon vertices strictly inside the arc, end point."""
    n = polygon.n
    s = arc.start
    span = mpq(n) if arc.full else (arc.end.lam - s.lam) % n
    out = [s.point(polygon)]
    for i in range(s.edge + 1, s.edge + 1 + n):
        off = (i - s.lam) % n
        if off == 0:
            off = mpq(n)
        if off >= span:
            break
        out.append(polygon.vertex(i))
    if arc.full or span > 0:
        out.append(arc.end.point(polygon))
    return out


# --------------------------------------------------------------------------
# rays

def _ray_contacts(polygon: Polygon, o: Point, d: Point) -> list:
    """Merged parameter intervals ``[sa, sb]`` (s >= 0) where ``o + s d`` meets the boundary."""
    dx, dy = d
    dd = dx * dx + dy * dy
    spans = []
    v = polygon.vertices
    n = len(v)
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        ex, ey = b[0] - a[0], b[1] - a[1]
        ax, ay = a[0] - o[0], a[1] - o[1]
        den = dx * ey - dy * ex
        if den != 0:
            u = (ax * dy - ay * dx) / den
            if 0 <= u <= 1:
                s = (ax * ey - ay * ex) / den
                if s >= 0:
                    spans.append((s, s))
        elif ax * dy - ay * dx == 0:
            sa = (ax * dx + ay * dy) / dd
            sb = ((b[0] - o[0]) * dx + (b[1] - o[1]) * dy) / dd
            if sa > sb:
                sa, sb = sb, sa
            if sb >= 0:
                spans.append((max(sa, ZERO), sb))
    spans.sort()
    merged = []
    for sa, sb in spans:
        if merged and sa <= merged[-1][1]:
            if sb > merged[-1][1]:
                merged[-1][1] = sb
        else:
            merged.append([sa, sb])
    return merged


def _ray_exit(polygon: Polygon, o: Point, d: Point, contacts=None) -> Scalar:
    """Largest s with the closed segment ``o .. o + s d`` inside the polygon.

    ``o`` must lie in the closed polygon.
    """
    if contacts is None:
        contacts = _ray_contacts(polygon, o, d)
    cur = ZERO
    for sa, sb in contacts:
        if sb <= cur:
            continue
        if sa > cur:
            mid = (cur + sa) / 2
            if polygon.classify(Point(o[0] + mid * d[0], o[1] + mid * d[1])) < 0:
                return cur
        cur = sb
    return cur


def ray_first_hit(polygon: Polygon, origin: Point, through: Point,
                  skip: Optional[Point] = None) -> Optional[BoundaryPoint]:
    """First boundary point met by the ray from ``origin`` through ``through``.

    Only points strictly beyond ``skip`` (or beyond ``origin``) count.  A ray
    running along a boundary edge resolves to the far end of the collinear
    run.  Returns ``None`` only when the ray leaves the polygon at ``origin``.
    """
    if origin == through:
        raise DegenerateRay("ray origin and direction point coincide")
    if polygon.classify(origin) < 0:
        raise PointOutsidePolygon(f"ray origin {origin} is outside the polygon")
    d = through - origin
    contacts = _ray_contacts(polygon, origin, d)
    exit_s = _ray_exit(polygon, origin, d, contacts)
    if exit_s == 0:
        return None
    s_skip = ZERO
    if skip is not None:
        dd = d[0] * d[0] + d[1] * d[1]
        s_skip = ((skip[0] - origin[0]) * d[0] + (skip[1] - origin[1]) * d[1]) / dd
    hit = exit_s
    for sa, sb in contacts:
        if sa > exit_s:
            break
        if sb > s_skip:
            hit = sb if sa < sb else sa
            break
    p = Point(origin[0] + hit * d[0], origin[1] + hit * d[1])
    return _require_boundary(polygon, p)


# --------------------------------------------------------------------------
# triangulation

def _in_closed_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    return cross(a, b, p) >= 0 and cross(b, c, p) >= 0 and cross(c, a, p) >= 0


def triangulate(polygon: Polygon) -> list:
    """Ear-clipping triangulation as ccw vertex-index triples, O(n^3).

    Collinear vertices are never clipped as ears, so every triangle has
    positive area.
    """
    cached = polygon._memo.get("triangulation")
    if cached is not None:
        return list(cached)
    v = polygon.vertices
    idx = list(range(len(v)))
    tris = []
    while len(idx) > 3:
        m = len(idx)
        for k in range(m):
            i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % m]
            a, b, c = v[i0], v[i1], v[i2]
            if cross(a, b, c) <= 0:
                continue
            if any(_in_closed_triangle(v[j], a, b, c) for j in idx if j not in (i0, i1, i2)):
                continue
            tris.append((i0, i1, i2))
            del idx[k]
            break
        else:
            raise GeometryError("ear clipping found no ear")
    tris.append(tuple(idx))
    polygon._memo["triangulation"] = tuple(tris)
    return tris
