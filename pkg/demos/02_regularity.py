"""Cohomology and regularity of the twisted cubic.

Run with ``python demos/02_regularity.py``.
"""

from fractions import Fraction

from quotkit.groebner import GradedModule
from quotkit.core import PolyRing
from quotkit.regularity import castelnuovo_checks, cohomology_table, mumford_bound, regularity


def mono(*e):
    return (0, tuple(e))


S = PolyRing(("x0", "x1", "x2", "x3"))
one = Fraction(1)
cubic = GradedModule(S, [0], [
    {mono(1, 0, 1, 0): one, mono(0, 2, 0, 0): -one},
    {mono(0, 1, 0, 1): one, mono(0, 0, 2, 0): -one},
    {mono(1, 0, 0, 1): one, mono(0, 1, 1, 0): -one},
])

print("Hilbert function 0..4:", [cubic.hilbert_function(d) for d in range(5)])
hp = cubic.hilbert_polynomial()
print("Hilbert polynomial:", hp, " so degree 3 and genus 0")
print("Betti table:", cubic.betti_table().entries)

table = cohomology_table(cubic, range(-3, 4))
print("h^i of the twists d = -3..3:")
for d, h in table.to_dict().items():
    print(f"   d={d:>2}", h)

reg = regularity(cubic)
print("regularity:", reg)
print("Castelnuovo checks at that twist:", castelnuovo_checks(cubic, reg).all())
print("Mumford's a priori bound from the Hilbert polynomial alone:", mumford_bound(1, 3, hp))
