"""The Grassmannian Grass(r, d) of d-dimensional quotients of an r-dimensional
space, as an atlas of affine charts.

A point is a d x r matrix of rank d up to left multiplication by GL_d. The
chart U^I (I a d-subset of columns, 1-based) holds the matrices whose
I-columns form the identity. Entries are Fractions, or RationalFunctions in
t for families over a discrete valuation ring.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import RationalFunction, det, field_rank, mat_inverse, mat_mul, t_adic_valuation
from .errors import OutsideOverlap, RankDeficient


def _coerce(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, RationalFunction)):
        return x
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"unsupported matrix entry {x!r}")


def _matrix(M):
    rows = tuple(tuple(_coerce(x) for x in row) for row in M)
    if not rows or any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("expected a non-empty rectangular matrix")
    return rows


def _is_zero(x):
    return x == 0


def subset_index(I, r, d=None):
    """Validate a 1-based column subset and return it as a tuple."""
    I = tuple(int(i) for i in I)
    if d is not None and len(I) != d:
        raise ValueError(f"subset {I} should have {d} elements")
    if any(a >= b for a, b in zip(I, I[1:])) or (I and (I[0] < 1 or I[-1] > r)):
        raise ValueError(f"subset {I} must be strictly increasing inside 1..{r}")
    return I


def all_subsets(r, d):
    """The d-subsets of {1..r} in lexicographic order."""
    return [tuple(i + 1 for i in c) for c in combinations(range(r), d)]


def chart_dimension(r, d):
    return d * (r - d)


def columns(M, I):
    return [[row[i - 1] for i in I] for row in M]


def _minor(M, I):
    return det(columns(M, I))


@dataclass(frozen=True)
class ChartPoint:
    r: int
    d: int
    I: tuple
    X: tuple

    def __post_init__(self):
        X = _matrix(self.X)
        if len(X) != self.d or len(X[0]) != self.r:
            raise ValueError(f"expected a {self.d}x{self.r} matrix")
        I = subset_index(self.I, self.r, self.d)
        for p in range(self.d):
            for q, i in enumerate(I):
                if X[p][i - 1] != (1 if p == q else 0):
                    raise ValueError(f"the {I}-minor is not the identity")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "I", I)

    @classmethod
    def from_coordinates(cls, r, d, I, coords):
        """Chart point from its d(r-d) free entries, read row by row over
        the columns outside I."""
        I = subset_index(I, r, d)
        free = [j for j in range(1, r + 1) if j not in I]
        coords = list(coords)
        if len(coords) != d * len(free):
            raise ValueError(f"chart U^{I} has {d * len(free)} coordinates")
        X = [[Fraction(0)] * r for _ in range(d)]
        for p, i in enumerate(I):
            X[p][i - 1] = Fraction(1)
        it = iter(coords)
        for p in range(d):
            for j in free:
                X[p][j - 1] = _coerce(next(it))
        return cls(r, d, I, X)

    def coordinates(self):
        free = [j for j in range(1, self.r + 1) if j not in self.I]
        return [self.X[p][j - 1] for p in range(self.d) for j in free]

    def minor(self, J):
        return _minor(self.X, subset_index(J, self.r, self.d))

    def is_rational(self):
        return all(not isinstance(x, RationalFunction) for row in self.X for x in row)

    def at_zero(self):
        """Specialize a point over Q(t) at t = 0 (entries must be regular)."""
        X = [[x.at_zero() if isinstance(x, RationalFunction) else x for x in row] for row in self.X]
        return ChartPoint(self.r, self.d, self.I, X)

    def to_lists(self):
        return [list(row) for row in self.X]


def random_chart_point(r, d, I=None, rng=None, bound=5):
    """A chart point with small random rational coordinates."""
    rng = rng or random.Random()
    I = I or tuple(sorted(rng.sample(range(1, r + 1), d)))

    def entry():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return ChartPoint.from_coordinates(r, d, I, [entry() for _ in range(chart_dimension(r, d))])


def normalize(M):
    """Chart representative of the row space of a rank-d matrix, in the
    lexicographically first chart containing it."""
    M = _matrix(M)
    d, r = len(M), len(M[0])
    for I in all_subsets(r, d):
        sub = columns(M, I)
        if not _is_zero(det(sub)):
            return ChartPoint(r, d, I, mat_mul(mat_inverse(sub), M))
    raise RankDeficient(f"matrix has rank {field_rank(M)} < {d}")


def transition(p, J):
    """theta: move a point of U^I into the chart U^J."""
    J = subset_index(J, p.r, p.d)
    if J == p.I:
        return p
    g = universal_bundle_transition(p, J)
    return ChartPoint(p.r, p.d, J, mat_mul(g, p.X))


def universal_bundle_transition(p, J):
    """(X_J)^-1, the GL_d transition of the universal quotient bundle."""
    J = subset_index(J, p.r, p.d)
    sub = columns(p.X, J)
    if _is_zero(det(sub)):
        raise OutsideOverlap(f"point of U^{p.I} is not in U^{J}")
    return mat_inverse(sub)


def cocycle_check(I, J, K, p):
    """Whether going I -> J -> K agrees with going I -> K directly."""
    I = subset_index(I, p.r, p.d)
    if p.I != I:
        p = transition(p, I)
    return transition(transition(p, J), K) == transition(p, K)


@dataclass(frozen=True)
class PluckerCoordinates:
    r: int
    d: int
    coords: dict

    def __post_init__(self):
        coords = {subset_index(K, self.r, self.d): _coerce(v) for K, v in self.coords.items()}
        for K in all_subsets(self.r, self.d):
            coords.setdefault(K, Fraction(0))
        if all(_is_zero(v) for v in coords.values()):
            raise ValueError("Pluecker vector must be nonzero")
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, K):
        return self.coords[tuple(K)]

    def vector(self):
        return [self.coords[K] for K in all_subsets(self.r, self.d)]

    def scaled(self):
        """Representative whose first nonzero coordinate is 1."""
        v = self.vector()
        lead = next(x for x in v if not _is_zero(x))
        return [x / lead for x in v]

    def ratio_to(self, other):
        """The scalar c with self = c * other, or None if not proportional."""
        a, b = self.vector(), other.vector()
        if len(a) != len(b):
            return None
        k = next(i for i, x in enumerate(b) if not _is_zero(x))
        c = a[k] / b[k]
        if all(x == c * y for x, y in zip(a, b)):
            return c
        return None

    def __eq__(self, other):
        if not isinstance(other, PluckerCoordinates):
            return NotImplemented
        return (self.r, self.d) == (other.r, other.d) and self.scaled() == other.scaled()

    def __hash__(self):
        return hash((self.r, self.d, tuple(self.scaled())))


def plucker(p):
    """All d x d minors of the chart matrix; the I-coordinate is 1."""
    return PluckerCoordinates(p.r, p.d, {K: _minor(p.X, K) for K in all_subsets(p.r, p.d)})


def plucker_relation_check(c):
    """Three-term quadratic relations p_ij p_kl - p_ik p_jl + p_il p_jk = 0."""
    if c.d != 2:
        raise ValueError("three-term relations are stated for d = 2")
    P = c.coords
    for i, j, k, l in combinations(range(1, c.r + 1), 4):
        if P[(i, j)] * P[(k, l)] - P[(i, k)] * P[(j, l)] + P[(i, l)] * P[(j, k)] != 0:
            return False
    return True


def minor_valuations(M):
    return {J: t_adic_valuation(_minor(M, J)) for J in all_subsets(len(M[0]), len(M))}


def dvr_limit(M):
    """Extend a Q(t)-point of Grass(r, d) across t = 0.

    Pick J minimizing the valuation of the J-minor (first in lex order on
    ties); then (M_J)^-1 M has entries without poles, since each entry is a
    ratio of minors P_K / P_J. Returns (J, limit over Q(t), fibre at t=0).
    """
    M = tuple(tuple(RationalFunction.coerce(_coerce(x)) for x in row) for row in M)
    vals = minor_valuations(M)
    best = min(vals.values())
    if best == math.inf:
        raise RankDeficient("matrix over Q(t) has rank < d")
    J = next(K for K in all_subsets(len(M[0]), len(M)) if vals[K] == best)
    X = mat_mul(mat_inverse(columns(M, J)), M)
    lim = ChartPoint(len(M[0]), len(M), J, X)
    return J, lim, lim.at_zero()
