import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quotkit.numpoly import (
    NumericalPolynomial as NP,
    binom,
    eventual_compare,
    evaluate,
    free_module_hp,
    hyperplane_restriction,
    hypersurface_hp,
    interpolate,
    linear_hp,
    shifted_binomial,
)

from oracles import binom_oracle, lagrange_eval

coeff_lists = st.lists(st.integers(-20, 20), min_size=0, max_size=6)


def test_binomial_extension():
    for r in range(-8, 9):
        for i in range(6):
            assert binom(r, i) == binom_oracle(r, i)


class TestEvaluate:
    def test_examples(self):
        assert evaluate(NP([1, 1]), 3) == 4
        assert evaluate(linear_hp(2), 3) == 10
        assert evaluate(NP([0, 0, 1]), -1) == 1

    @given(coeff_lists, st.integers(-30, 30))
    def test_integer_valued(self, cs, r):
        v = NP(cs)(r)
        assert isinstance(v, int)

    def test_trailing_zeros_trimmed(self):
        f = NP([1, 2, 0, 0])
        assert f.coeffs == (1, 2) and f.degree == 1
        assert NP([]).degree == -1 and NP([0]).is_zero()


class TestInterpolate:
    def test_examples(self):
        assert interpolate([1, 2], 0) == NP([1, 1])
        assert interpolate([1, 1, 1], 5) == NP([1])
        # brute-force solve of the 3x3 binomial system: f(1)=1, f(2)=4, f(3)=10
        assert interpolate([1, 4, 10], 1) == NP([1, 0, 3])

    @settings(max_examples=100)
    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=9), st.integers(-15, 15))
    def test_roundtrip(self, values, N):
        f = interpolate(values, N)
        assert f.degree <= len(values) - 1
        assert [f(N + i) for i in range(len(values))] == values
        xs = [N + i for i in range(len(values))]
        for r in (N - 3, N + len(values) + 2):
            assert f(r) == lagrange_eval(xs, values, r)


class TestHyperplaneRestriction:
    def test_examples(self):
        assert hyperplane_restriction(NP([1, 1])) == NP([1])
        assert hyperplane_restriction(NP([7])).is_zero()
        assert hyperplane_restriction(NP([0, 0, 1])) == NP([-1, 1])

    def test_difference_property(self):
        rng = random.Random(1)
        for _ in range(100):
            f = NP([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
            g = hyperplane_restriction(f)
            assert g.degree == max(f.degree - 1, -1)
            for r in range(-10, 11):
                assert g(r) == f(r) - f(r - 1)

    def test_against_interpolation(self):
        f = NP([3, -2, 5, 1])
        g = interpolate([f(r) - f(r - 1) for r in range(4, 7)], 4)
        assert hyperplane_restriction(f) == g


class TestEventualCompare:
    def test_examples(self):
        assert eventual_compare(NP([5, 1]), NP([0, 2])) == -1
        assert eventual_compare(NP([2, 3]), NP([2, 3])) == 0
        assert eventual_compare(NP([0, 0, 1]), NP([100])) == 1
        assert NP([5, 1]) < NP([0, 2])

    @settings(max_examples=100)
    @given(coeff_lists, coeff_lists)
    def test_matches_pointwise_eventually(self, a, b):
        f, g = NP(a), NP(b)
        c = eventual_compare(f, g)
        # beyond the last sign change of f - g the sign is constant
        diffs = [f(r) - g(r) for r in range(0, 400)]
        tail = diffs[-50:]
        sign = 0 if all(x == 0 for x in tail) else (1 if tail[-1] > 0 else -1)
        assert c == sign
        assert all((x > 0) - (x < 0) == sign for x in tail)


class TestClosedForms:
    def test_linear(self):
        assert linear_hp(1) == NP([1, 1])
        assert linear_hp(0) == NP([1])
        for r in range(5):
            for lam in range(-3, 8):
                assert linear_hp(r)(lam) == binom_oracle(r + lam, r)

    def test_hypersurface(self):
        assert hypersurface_hp(2, 2) == NP([1, 2])
        for n in range(1, 5):
            for d in range(1, 6):
                f = hypersurface_hp(n, d)
                for lam in range(0, 8):
                    assert f(lam) == binom_oracle(n + lam, n) - binom_oracle(n - d + lam, n)

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            linear_hp(-1)
        with pytest.raises(ValueError):
            hypersurface_hp(0, 2)
        with pytest.raises(ValueError):
            hypersurface_hp(2, 0)

    def test_shifted_and_free(self):
        for n in range(4):
            for a in range(-4, 5):
                f = shifted_binomial(n, a)
                assert all(f(x) == binom_oracle(x + a, n) for x in range(-6, 7))
        f = free_module_hp(2, [0, -1])
        assert all(f(x) == binom_oracle(x + 2, 2) + binom_oracle(x + 1, 2) for x in range(0, 6))
