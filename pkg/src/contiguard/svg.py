"""Deterministic SVG figures of a polygon and its guards."""
from __future__ import annotations

from typing import Optional

from .geometry import Polygon, arc_vertices
from .greedy import GuardSet

__all__ = ["render_svg"]

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
SIZE = 480
MARGIN = 24


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(polygon: Polygon, guards: Optional[GuardSet] = None) -> str:
    """SVG 1.1 document; coordinates are float approximations for display only."""
    pts = list(polygon.vertices)
    if guards is not None:
        pts += [g.position for g in guards]
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    x0, y0 = min(xs), min(ys)
    span = max(max(xs) - x0, max(ys) - y0) or 1.0
    k = (SIZE - 2 * MARGIN) / span
    height = (max(ys) - y0) * k + 2 * MARGIN
    width = (max(xs) - x0) * k + 2 * MARGIN

    def sx(p) -> str:
        return _fmt((float(p[0]) - x0) * k + MARGIN)

    def sy(p) -> str:
        # y axis points up in the polygon, down in SVG
        return _fmt(height - MARGIN - (float(p[1]) - y0) * k)

    def xy(p) -> str:
        return f"{sx(p)},{sy(p)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<path class="polygon" d="M ' + " L ".join(xy(v) for v in polygon.vertices)
        + ' Z" fill="#f4f4f4" stroke="#333" stroke-width="1.5"/>',
    ]
    for i, g in enumerate(guards or ()):
        color = PALETTE[i % len(PALETTE)]
        chain = arc_vertices(polygon, g.arc)
        out.append(f'<polyline class="arc" points="{" ".join(xy(p) for p in chain)}" fill="none" '
                   f'stroke="{color}" stroke-width="4" stroke-opacity="0.7"/>')
        q = g.position
        for end in g.wedge:
            out.append(f'<line class="wedge" x1="{sx(q)}" y1="{sy(q)}" x2="{sx(end)}" y2="{sy(end)}" '
                       f'stroke="{color}" stroke-dasharray="4 3"/>')
        out.append(f'<circle class="guard" cx="{sx(q)}" cy="{sy(q)}" r="5" fill="{color}" stroke="#000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
