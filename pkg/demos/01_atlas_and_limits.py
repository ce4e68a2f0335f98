"""Charts, Plucker coordinates and limits on a Grassmannian.

Run with ``python demos/01_atlas_and_limits.py``.
"""

import random

from quotkit.core import RationalFunction
from quotkit.grassmann import cocycle_check, dvr_limit, normalize, plucker, plucker_relation_check, random_chart_point, transition

rng = random.Random(0)
p = random_chart_point(4, 2, I=(1, 2), rng=rng)
print("a point of Grass(4,2) in chart", p.I)
for row in p.X:
    print("   ", [str(x) for x in row])

q = transition(p, (2, 4))
print("same point in chart (2, 4):")
for row in q.X:
    print("   ", [str(x) for x in row])
print("back again equals the original:", transition(q, p.I) == p)
print("cocycle through (1, 3):", cocycle_check(p.I, (1, 3), (2, 4), p))

c = plucker(p)
print("Plucker coordinates:", {J: str(v) for J, v in c.coords.items()})
print("they satisfy the quadratic relation:", plucker_relation_check(c))

# a family over Q(t) with a pole at t = 0 still has a limit point
t = RationalFunction.t()
M = [[t, 1 / t, 1 + t]]
J, lim, X0 = dvr_limit(M)
print("limit chart:", J, " limit point at t = 0:", [str(x) for x in X0.X[0]])
print("generic fibre unchanged:", normalize([list(r) for r in lim.X]) == normalize(M))
