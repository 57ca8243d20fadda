"""JSON polygon and guard files with exact rational coordinates.

Integers are written as JSON numbers, other rationals as ``"num/den"``
strings, so nothing passes through binary floating point.
"""
from __future__ import annotations

import json
import re
import sys

from gmpy2 import mpq

from .geometry import BoundaryArc, BoundaryPoint, Point, Polygon, validate_polygon
from .greedy import Guard, GuardSet

__all__ = [
    "ParseError", "format_scalar", "parse_scalar", "polygon_to_json", "polygon_from_json",
    "guards_to_json", "guards_from_json", "read_text", "write_text",
]

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class ParseError(ValueError):
    pass


def format_scalar(v):
    v = mpq(v)
    if v.denominator == 1:
        return int(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def parse_scalar(v):
    if isinstance(v, bool):
        raise ParseError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return mpq(v)
    if isinstance(v, str) and _RATIONAL.match(v.strip()):
        try:
            return mpq(v.strip())
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {v!r}") from None
    raise ParseError(f"not a rational (int or 'num/den' string): {v!r}")


def _point(obj) -> Point:
    if not isinstance(obj, list) or len(obj) != 2:
        raise ParseError(f"expected [x, y], got {obj!r}")
    return Point(parse_scalar(obj[0]), parse_scalar(obj[1]))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _load(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    return obj


def polygon_to_json(polygon: Polygon) -> str:
    return _dump({"vertices": [[format_scalar(x), format_scalar(y)] for x, y in polygon.vertices]})


def polygon_from_json(text: str) -> Polygon:
    obj = _load(text)
    verts = obj.get("vertices")
    if not isinstance(verts, list):
        raise ParseError("missing 'vertices' list")
    return validate_polygon([_point(v) for v in verts])


def _bp(bp: BoundaryPoint) -> dict:
    return {"edge": bp.edge, "t": format_scalar(bp.t)}


def guards_to_json(guards: GuardSet) -> str:
    return _dump({
        "vertex_count": guards.polygon.n,
        "guards": [
            {
                "position": [format_scalar(g.position[0]), format_scalar(g.position[1])],
                "arc": {"start": _bp(g.arc.start), "end": _bp(g.arc.end), "full": g.arc.full},
            }
            for g in guards
        ],
    })


def _parse_bp(obj, n: int) -> BoundaryPoint:
    if not isinstance(obj, dict) or not isinstance(obj.get("edge"), int) or isinstance(obj.get("edge"), bool):
        raise ParseError(f"bad boundary point {obj!r}")
    edge = obj["edge"]
    if not 0 <= edge < n:
        raise ParseError(f"edge index {edge} out of range for {n} edges")
    t = parse_scalar(obj.get("t", 0))
    if not 0 <= t < 1:
        raise ParseError(f"t must lie in [0, 1), got {t}")
    return BoundaryPoint(edge, t)


def guards_from_json(text: str, polygon: Polygon) -> GuardSet:
    from .greedy import make_guard

    obj = _load(text)
    n = polygon.n
    if obj.get("vertex_count") != n:
        raise ParseError(f"guard file is for {obj.get('vertex_count')} vertices, polygon has {n}")
    items = obj.get("guards")
    if not isinstance(items, list):
        raise ParseError("missing 'guards' list")
    out: list[Guard] = []
    for item in items:
        if not isinstance(item, dict) or not isinstance(item.get("arc"), dict):
            raise ParseError(f"bad guard entry {item!r}")
        arc = item["arc"]
        full = arc.get("full", False)
        if not isinstance(full, bool):
            raise ParseError("'full' must be a boolean")
        ba = BoundaryArc(_parse_bp(arc.get("start"), n), _parse_bp(arc.get("end"), n), full)
        out.append(make_guard(polygon, _point(item.get("position")), ba))
    return GuardSet(polygon, tuple(out))


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
