"""Command-line front end.

Every command that produces a guard set prints its size as the last line of
standard output.  Exit status 1 means bad input, 2 means a failed ``verify``.
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from gmpy2 import mpq

from .bounds import combinatorial_cover, comb_polygon, comb_polygon_odd
from .exact import candidate_sets, exact_guarding
from .geometry import BoundaryPoint, GeometryError
from .greedy import greedy_guarding
from .io import (
    ParseError, guards_from_json, guards_to_json, parse_scalar, polygon_from_json,
    polygon_to_json, read_text, write_text,
)
from .svg import render_svg
from .verify import verify_guarding

__all__ = ["build_parser", "run_command", "main"]


def _start(text: str) -> BoundaryPoint:
    edge, sep, t = text.partition(":")
    try:
        return BoundaryPoint(int(edge), parse_scalar(t) if sep else mpq(0))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad start {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="contiguard", description="Contiguous boundary guarding of simple polygons.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a polygon file")
    p.add_argument("polygon")

    p = sub.add_parser("greedy", help="greedy guarding from one start point")
    p.add_argument("polygon")
    p.add_argument("--start", type=_start, default=BoundaryPoint(0), help="EDGE:T, e.g. 2:1/3")
    p.add_argument("--out")

    p = sub.add_parser("exact", help="minimum contiguous guarding")
    p.add_argument("polygon")
    p.add_argument("--out")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("cover-bound", help="vertex guarding with at most floor((n-2)/2) guards")
    p.add_argument("polygon")
    p.add_argument("--out")

    p = sub.add_parser("gen-comb", help="write a polygon that needs floor((n-2)/2) guards")
    p.add_argument("k", type=int)
    p.add_argument("--odd", action="store_true")
    p.add_argument("-o", "--out", default="-")

    p = sub.add_parser("verify", help="check a guard file against a polygon")
    p.add_argument("polygon")
    p.add_argument("guards")

    p = sub.add_parser("render", help="draw a polygon and optional guards as SVG")
    p.add_argument("polygon")
    p.add_argument("guards", nargs="?")
    p.add_argument("-o", "--out", required=True)
    return ap


def _emit_guards(args, gs, out) -> None:
    if getattr(args, "out", None):
        write_text(args.out, guards_to_json(gs))
    print(len(gs), file=out)


def run_command(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        if args.command == "gen-comb":
            poly = comb_polygon_odd(args.k) if args.odd else comb_polygon(args.k)
            write_text(args.out, polygon_to_json(poly))
            return 0
        poly = polygon_from_json(read_text(args.polygon))
        if args.command == "validate":
            print(f"valid polygon with {poly.n} vertices, {len(poly.reflex_indices)} reflex", file=out)
        elif args.command == "greedy":
            if args.start.edge >= poly.n:
                raise ParseError(f"start edge {args.start.edge} out of range")
            _emit_guards(args, greedy_guarding(poly, args.start), out)
        elif args.command == "exact":
            t0 = time.perf_counter()
            cands = candidate_sets(poly)
            t1 = time.perf_counter()
            gs = exact_guarding(poly, workers=args.workers)
            t2 = time.perf_counter()
            if args.stats:
                print(f"|Q| = {len(cands.Q)}", file=out)
                print(f"|S| = {len(cands.S)}", file=out)
                print(f"candidates: {t1 - t0:.3f}s", file=out)
                print(f"greedy runs: {t2 - t1:.3f}s", file=out)
            _emit_guards(args, gs, out)
        elif args.command == "cover-bound":
            _emit_guards(args, combinatorial_cover(poly), out)
        elif args.command == "verify":
            report = verify_guarding(poly, guards_from_json(read_text(args.guards), poly))
            for i, ok in enumerate(report.guard_ok):
                print(f"guard {i}: {'ok' if ok else 'FAILS'}", file=out)
            for a, b in report.uncovered:
                print(f"uncovered: ({a}, {b})", file=out)
            for i in report.removable:
                print(f"removable: guard {i}", file=out)
            print("valid" if report.valid else "invalid", file=out)
            return 0 if report.valid else 2
        elif args.command == "render":
            gs = guards_from_json(read_text(args.guards), poly) if args.guards else None
            write_text(args.out, render_svg(poly, gs))
    except (ParseError, GeometryError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run_command())
