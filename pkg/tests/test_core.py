import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quotkit.core import (
    Echelon,
    MultiPoly,
    PolyMatrix,
    PolyRing,
    RationalFunction,
    det,
    field_rank,
    mat_inverse,
    mat_mul,
    minor,
    nullspace,
    t_adic_valuation,
)

from oracles import dense_rank, leibniz_det, matrix_inverse_oracle

R = PolyRing(("a", "b", "c"))
a, b, c = R.gens()
t = RationalFunction.t()

small = st.integers(min_value=-4, max_value=4)
coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, ring=R, max_terms=4, max_exp=2):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_exp)) for _ in range(ring.nvars))
        terms[e] = draw(coeff)
    return MultiPoly(ring, terms)


@st.composite
def rational_functions(draw):
    num = draw(st.lists(small, min_size=1, max_size=4))
    den = draw(st.lists(small, min_size=1, max_size=3).filter(any))
    return RationalFunction(num, den)


class TestPolynomials:
    def test_zero_coefficients_dropped(self):
        assert (a - a).terms == {}
        assert MultiPoly(R, {(1, 0, 0): 0}).is_zero()

    @settings(max_examples=60, deadline=None)
    @given(polys(), polys(), polys())
    def test_ring_axioms(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + g == g + f and f * g == g * f
        assert f - f == R.zero() and f * R.one() == f

    @settings(max_examples=40, deadline=None)
    @given(polys(), polys().filter(lambda p: not p.is_zero()))
    def test_exact_division_roundtrip(self, f, g):
        assert (f * g).exact_div(g) == f

    def test_inexact_division_raises(self):
        with pytest.raises(ValueError):
            (a + 1).exact_div(b)

    def test_evaluate_and_substitute(self):
        f = Fraction(3, 2) * a**2 * b - c
        assert f.evaluate([1, 2, 3]) == 0
        g = f.substitute({0: b, 1: b, 2: R.zero()}, R)
        assert g == Fraction(3, 2) * b**3

    def test_degrees_and_roles(self):
        S = PolyRing.fiber_base(("x0", "x1"), ("y",))
        x0, x1, y = S.gens()
        f = y * x0**2 + x1 * x0
        assert f.is_x_homogeneous() and f.x_degrees() == {2}
        assert f.total_degree() == 3
        assert S.role(2) == "y" and S.base_names == ("y",)

    def test_canonical_text(self):
        f = Fraction(3, 2) * a**2 * b - c
        assert str(f) == "3/2*a^2*b - c"


class TestMinors:
    def test_documented_examples(self):
        I = PolyMatrix.identity(R, 2)
        assert minor(I, [0, 1], [0, 1]) == 1
        assert minor(PolyMatrix(R, [[1, a], [0, c]]), [0, 1], [0, 1]) == c
        assert minor(PolyMatrix(R, [[0, a], [1, c]]), [0, 1], [0, 1]) == -a

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            minor(PolyMatrix.identity(R, 2), [0, 2], [0, 1])

    def test_empty_minor_is_one(self):
        assert minor(PolyMatrix.identity(R, 2), [], []) == 1

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_det_matches_leibniz(self, n):
        rng = random.Random(n)
        m = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        assert det(m) == leibniz_det(m)

    def test_bareiss_on_polynomials(self):
        rng = random.Random(7)
        gens = [a, b, c, R.one()]
        m = [[sum((rng.randint(-2, 2) * g for g in gens), R.zero()) for _ in range(5)] for _ in range(5)]
        assert det(m) == leibniz_det(m)

    def test_det_multiplicative(self):
        rng = random.Random(3)
        for _ in range(20):
            A = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(3)] for _ in range(3)]
            B = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(3)] for _ in range(3)]
            assert det(mat_mul(A, B)) == det(A) * det(B)


class TestLinearAlgebra:
    def test_inverse_matches_adjugate(self):
        rng = random.Random(11)
        for _ in range(10):
            m = [[Fraction(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
            if leibniz_det(m) == 0:
                continue
            assert mat_inverse(m) == matrix_inverse_oracle(m)

    def test_singular_inverse(self):
        with pytest.raises(ZeroDivisionError):
            mat_inverse([[1, 2], [2, 4]])

    def test_ranks_agree(self):
        rng = random.Random(5)
        for _ in range(20):
            rows = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(4)]
            rows.append([x + y for x, y in zip(rows[0], rows[1])])
            sparse = [{j: Fraction(v) for j, v in enumerate(r) if v} for r in rows]
            assert field_rank(rows) == dense_rank(rows) == Echelon(sparse).rank

    def test_nullspace(self):
        rng = random.Random(9)
        for _ in range(10):
            rows = [{j: Fraction(rng.randint(-3, 3)) for j in range(6)} for _ in range(3)]
            rows = [{j: v for j, v in r.items() if v} for r in rows]
            ker = nullspace(rows, 6)
            dense = [[r.get(j, 0) for j in range(6)] for r in rows]
            assert len(ker) == 6 - dense_rank(dense)
            for v in ker:
                for r in rows:
                    assert sum(r.get(j, 0) * v.get(j, 0) for j in range(6)) == 0

    def test_rref_is_canonical(self):
        rows = [{0: Fraction(1), 1: Fraction(2)}, {1: Fraction(1), 2: Fraction(1)}]
        shuffled = [{0: Fraction(2), 1: Fraction(5), 2: Fraction(1)}, {1: Fraction(3), 2: Fraction(3)}]
        assert Echelon(rows).rref() == Echelon(shuffled).rref()


class TestValuation:
    def test_examples(self):
        assert t_adic_valuation(t**2 / (1 + t)) == 2
        assert t_adic_valuation(RationalFunction((0,))) == math.inf
        assert t_adic_valuation((t + t**2) / t**3) == -2

    def test_reduced_form(self):
        f = (t + t**2) / t**3
        assert f.num == (Fraction(1), Fraction(1)) and f.den == (0, 0, 1)
        g = RationalFunction((2, 2), (4,))
        assert g.den == (Fraction(1),) and g.num == (Fraction(1, 2), Fraction(1, 2))

    @settings(max_examples=80, deadline=None)
    @given(rational_functions(), rational_functions())
    def test_axioms(self, f, g):
        v = t_adic_valuation
        if not f.is_zero() and not g.is_zero():
            assert v(f * g) == v(f) + v(g)
        assert v(f + g) >= min(v(f), v(g))

    @settings(max_examples=80, deadline=None)
    @given(rational_functions(), rational_functions())
    def test_field_operations_are_reduced(self, f, g):
        def ev(a, x):
            return sum(c * x**i for i, c in enumerate(a))

        def prod(a, b):
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                for j, y in enumerate(b):
                    out[i + j] += x * y
            return out

        cases = [(f * g, prod(f.num, g.num), prod(f.den, g.den)), (-f, [-c for c in f.num], f.den)]
        if not g.is_zero():
            cases.append((f / g, prod(f.num, g.den), prod(f.den, g.num)))
        for h, num, den in cases:
            if not any(num):
                assert h.is_zero()
                continue
            assert (h.num, h.den) == (RationalFunction(num, den).num, RationalFunction(num, den).den)
            assert h.den[-1] == 1
            for x in (Fraction(3), Fraction(-5, 7), Fraction(11, 2)):
                if ev(den, x) and ev(h.den, x):
                    assert ev(h.num, x) / ev(h.den, x) == ev(num, x) / ev(den, x)

    def test_at_zero(self):
        assert (t / (1 + t)).at_zero() == 0
        assert ((1 + t) / (2 - t)).at_zero() == Fraction(1, 2)
        with pytest.raises(ValueError):
            (1 / t).at_zero()
