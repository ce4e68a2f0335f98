"""Flattening stratification of a family whose fibre jumps.

Over the y-line, the module S/(y x0, y x1) is zero when y != 0 and all of
S when y = 0. The stratification splits the base accordingly.

Run with ``python demos/03_flattening.py``.
"""

from fractions import Fraction

from quotkit.core import PolyRing
from quotkit.flattening import FamilyPresentation, hilbert_stratification, strand_presentation

R = PolyRing.fiber_base(("x0", "x1"), ("y",))
x0, x1, y = R.gens()
F = FamilyPresentation.from_matrix(R, [0], [[y * x0, y * x1]])

print("degree-1 strand presentation over Q[y]:")
print("   ", strand_presentation(F, 1))

strat = hilbert_stratification(F, 1)
for s in strat.to_list():
    print("stratum", s)

for v in (Fraction(0), Fraction(3)):
    (s,) = strat.locate((v,))
    print(f"y = {v}: fibre has Hilbert polynomial {s.label}")
