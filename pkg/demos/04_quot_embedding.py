"""A quotient of O_P2 as a point of a Grassmannian, and back.

Run with ``python demos/04_quot_embedding.py``.
"""

from fractions import Fraction

from quotkit.quotgrass import QuotientDatum, grass_point_of_quotient, quotient_from_grass_point, quotients_agree

one = Fraction(1)
# the conic x0^2 + x1 x2 in P^2
q = QuotientDatum(1, 2, [{(0, (2, 0, 0)): one, (0, (0, 1, 1)): one}])
print("Hilbert polynomial:", q.hilbert_polynomial)

r = 2
g = grass_point_of_quotient(q, r)
print(f"degree-{r} sections: ambient {g.ambient_dim}, quotient rank {g.rank} = Phi({r}) = {q.hilbert_polynomial(r)}")
print("kernel basis:", [[str(x) for x in row] for row in g.kernel_basis])

back = quotient_from_grass_point(g)
print("recovered quotient agrees in degrees", r, "to", r + 3, ":", quotients_agree(q, back, r, upto=3))
