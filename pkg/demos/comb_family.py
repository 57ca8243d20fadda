"""Polygons that need floor((n-2)/2) guards, next to the constructive cover.

Each comb polygon is a thin crescent between two nearby circular arcs.  The
cover built from a triangulation never uses more than floor((n-2)/2) vertex
guards, and on these polygons nothing does better.
"""
from contiguard.bounds import comb_polygon, comb_polygon_odd, combinatorial_cover
from contiguard.exact import exact_guarding

rows = [(f"comb({k})", comb_polygon(k)) for k in (1, 2, 3)]
rows += [(f"comb_odd({k})", comb_polygon_odd(k)) for k in (1, 2)]

print(f"{'polygon':<12}{'n':>4}{'bound':>7}{'cover':>7}{'exact':>7}")
for name, P in rows:
    print(f"{name:<12}{P.n:>4}{(P.n - 2) // 2:>7}{len(combinatorial_cover(P)):>7}{len(exact_guarding(P)):>7}")
