"""Guarding the boundary of a U-shaped room, step by step.

Run with ``python demos/u_shape_walkthrough.py``.
"""
from contiguard.exact import candidate_sets, exact_guarding
from contiguard.fixtures import u_shape
from contiguard.geometry import BoundaryPoint
from contiguard.greedy import CCW, farthest_coverable, greedy_guarding
from contiguard.verify import verify_guarding
from contiguard.visibility import kernel

P = u_shape()
print("vertices:", [tuple(map(str, v)) for v in P.vertices])
print("reflex vertices:", P.reflex_vertices)

# No single point sees both prongs, so at least two guards are needed.
print("kernel empty:", kernel(P).is_empty)

# One greedy step: how far ccw can a single guard cover starting at (6,0)?
q, witness = farthest_coverable(P, BoundaryPoint(1), CCW)
print("from (6,0) one guard reaches", q.point(P), "using any point of", witness.vertices)

for start in (BoundaryPoint(1), BoundaryPoint(6, "1/2")):
    g = greedy_guarding(P, start)
    print(f"greedy from {start.point(P)}: {len(g)} guards at {list(g.positions)}")

cands = candidate_sets(P)
print(f"exact search tries {len(cands.S)} start points built from {len(cands.Q)} candidate guard spots")
best = exact_guarding(P)
for g in best:
    print("  guard", g.position, "covers", g.arc.start.point(P), "->", g.arc.end.point(P))
print("verified:", verify_guarding(P, best).valid)
