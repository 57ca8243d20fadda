"""How often does a single greedy run miss the optimum by one?

Greedy from any start point is within one guard of optimal.  This script
counts, over random polygons, how many start points hit the optimum.
"""
from collections import Counter

from gmpy2 import mpq

from contiguard.exact import exact_guarding
from contiguard.fixtures import random_polygons
from contiguard.geometry import BoundaryPoint
from contiguard.greedy import greedy_guarding

slack = Counter()
for P in random_polygons(20, seed=4, n_min=8, n_max=12):
    opt = len(exact_guarding(P))
    for e in range(P.n):
        for t in (0, mpq(1, 2)):
            slack[len(greedy_guarding(P, BoundaryPoint(e, t))) - opt] += 1
print("greedy size minus optimum -> number of start points")
for d in sorted(slack):
    print(f"  {d:+d}: {slack[d]}")
