"""Named test polygons and a seeded random simple-polygon generator."""
from __future__ import annotations

import random

from .geometry import (
    InvalidPolygon, Polygon, orientation, point, segment_intersection, validate_polygon,
)

__all__ = ["square", "l_shape", "u_shape", "random_simple_polygon", "random_polygons"]


def square() -> Polygon:
    return validate_polygon([(0, 0), (4, 0), (4, 4), (0, 4)])


def l_shape() -> Polygon:
    return validate_polygon([(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)])


def u_shape() -> Polygon:
    return validate_polygon([(0, 0), (6, 0), (6, 4), (4, 4), (4, 2), (2, 2), (2, 4), (0, 4)])


def _general_position(pts) -> bool:
    m = len(pts)
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                if orientation(pts[i], pts[j], pts[k]) == 0:
                    return False
    return True


def _untangle(pts: list) -> list:
    """2-opt: reverse the stretch between two crossing edges until none cross."""
    m = len(pts)
    changed = True
    while changed:
        changed = False
        for i in range(m):
            for j in range(i + 2, m):
                if i == 0 and j == m - 1:
                    continue
                e1 = (pts[i], pts[i + 1])
                e2 = (pts[j], pts[(j + 1) % m])
                if segment_intersection(e1, e2) is not None:
                    pts[i + 1:j + 1] = pts[i + 1:j + 1][::-1]
                    changed = True
    return pts


def random_simple_polygon(n: int, seed: int, size: int = 20) -> Polygon:
    """Simple polygon on ``n`` integer points in general position in [0, size)^2."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = random.Random(seed)
    while True:
        pts = set()
        while len(pts) < n:
            pts.add((rng.randrange(size), rng.randrange(size)))
        pts = sorted(pts)
        rng.shuffle(pts)
        pts = [point(x, y) for x, y in pts]
        if not _general_position(pts):
            continue
        try:
            return validate_polygon(_untangle(pts))
        except InvalidPolygon:
            continue


def random_polygons(count: int, seed: int = 0, n_min: int = 4, n_max: int = 14) -> list:
    """``count`` reproducible random simple polygons with n cycling through [n_min, n_max]."""
    span = n_max - n_min + 1
    return [random_simple_polygon(n_min + i % span, seed * 100003 + i) for i in range(count)]
