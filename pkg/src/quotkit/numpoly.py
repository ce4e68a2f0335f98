"""Numerical polynomials written in the binomial basis.

A numerical polynomial is stored as integers ``a_0..a_n`` meaning
``f(r) = sum a_i * C(r, i)``, with ``C(r, i)`` extended to negative ``r`` by
the falling-factorial polynomial ``r (r-1) ... (r-i+1) / i!``.
"""

from __future__ import annotations

import functools
from math import factorial


def binom(r, i):
    """Generalized binomial coefficient C(r, i) for integer r and i >= 0."""
    if i < 0:
        return 0
    num = 1
    for k in range(i):
        num *= r - k
    q, rem = divmod(num, factorial(i))
    assert rem == 0
    return q


class NumericalPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self):
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, r):
        return evaluate(self, r)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return NumericalPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self):
        return NumericalPolynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return NumericalPolynomial(k * x for x in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, NumericalPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self.coeffs == NumericalPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        return eventual_compare(self, other) < 0

    def __le__(self, other):
        return eventual_compare(self, other) <= 0

    def __gt__(self, other):
        return eventual_compare(self, other) > 0

    def __ge__(self, other):
        return eventual_compare(self, other) >= 0

    def to_list(self):
        return list(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            basis = "" if i == 0 else ("L" if i == 1 else f"C(L,{i})")
            if not basis:
                parts.append(str(a))
            elif a == 1:
                parts.append(basis)
            elif a == -1:
                parts.append(f"-{basis}")
            else:
                parts.append(f"{a}*{basis}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"NumericalPolynomial({list(self.coeffs)})"


def evaluate(f, r):
    return sum(a * binom(r, i) for i, a in enumerate(f.coeffs))


def interpolate(values, N):
    """The unique f of degree <= len(values)-1 with f(N+i) = values[i].

    Newton forward differences give f(L) = sum_j D^j(N) C(L-N, j); each
    C(L-N, j) re-expands as sum_i C(L, i) C(-N, j-i).
    """
    diffs = []
    row = [int(v) for v in values]
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    n = len(diffs)
    coeffs = [sum(diffs[j] * binom(-N, j - i) for j in range(i, n)) for i in range(n)]
    return NumericalPolynomial(coeffs)


def hyperplane_restriction(f):
    """g with g(r) = f(r) - f(r-1).

    Explicitly b_j = sum_{i > j} (-1)^(i-1-j) a_i, from
    C(r-1, i-1) = sum_j C(r, j) C(-1, i-1-j).
    """
    a = f.coeffs
    n = len(a)
    return NumericalPolynomial(
        sum((-1) ** (i - 1 - j) * a[i] for i in range(j + 1, n)) for j in range(n - 1)
    )


def eventual_compare(f, g):
    """-1, 0 or 1 according to the sign of f - g at all large arguments."""
    diff = (f - g).coeffs
    if not diff:
        return 0
    return 1 if diff[-1] > 0 else -1


eventual_key = functools.cmp_to_key(eventual_compare)


def shifted_binomial(n, a):
    """C(L + a, n) in the binomial basis (Vandermonde: a_i = C(a, n - i))."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return NumericalPolynomial(binom(a, n - i) for i in range(n + 1))


def linear_hp(r):
    """Hilbert polynomial C(r + L, r) of a linear r-dimensional subspace."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return shifted_binomial(r, r)


def hypersurface_hp(n, d):
    """Hilbert polynomial C(n + L, n) - C(n - d + L, n) of a degree-d
    hypersurface in P^n."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return shifted_binomial(n, n) - shifted_binomial(n, n - d)


def free_module_hp(n, twists):
    """Hilbert polynomial of the sum of O(a) over the twists, on P^n."""
    total = NumericalPolynomial()
    for a in twists:
        total = total + shifted_binomial(n, n + a)
    return total
