"""Sheaf cohomology on P^n through Cech complexes, Castelnuovo-Mumford
regularity, and Mumford's recursive regularity bound.

For M = F/N the Cech complex of M~(d) on the cover {x_j != 0} has terms
(M_{x_J})_d. Fractions m / x_J^K with a fixed exponent K span a finite
subspace, isomorphic to the degree d + K|J| piece of F / (N : x_J^oo), and
these subspaces form a subcomplex. Cohomology is read off the truncated
complex once its dimensions stop changing as K grows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .core import Echelon, nullspace
from .errors import DegreeTooHigh, StabilizationFailure, UnboundedRegularity
from .groebner import (
    GradedModule,
    GroebnerBasis,
    colon,
    elem_mul_mono,
    monomials,
    saturate_by_monomial,
)
from .numpoly import NumericalPolynomial, binom, hyperplane_restriction

DEFAULT_CECH_CAP = 20


class CechComplex:
    """Truncated Cech complexes of one graded module, with cached
    localizations and cohomology."""

    def __init__(self, M, cap=DEFAULT_CECH_CAP):
        self.M = M
        self.n = M.n
        self.cap = cap
        self.subsets = [
            [J for J in combinations(range(M.nvars), p + 1)] for p in range(M.nvars)
        ]
        self._local = {}
        self._dims = {}
        self._stable = {}

    def local_gb(self, J):
        """Groebner basis of N : (prod_{j in J} x_j)^oo."""
        gb = self._local.get(J)
        if gb is None:
            M = self.M
            gens = saturate_by_monomial(M.relations, J, M.nvars, M.degrees) if M.relations else []
            gb = GroebnerBasis.compute(M.nvars, M.degrees, gens, M.order)
            self._local[J] = gb
        return gb

    def start_exponent(self, d):
        degs = list(self.M.degrees) + self.M.relation_degrees()
        top = max(degs) if degs else 0
        return max(1, top - d)

    def basis(self, p, d, K):
        """Basis of C^p_K in degree d as (J, term) pairs."""
        out = []
        for J in self.subsets[p]:
            for t in self.local_gb(J).standard_terms(d + K * len(J)):
                out.append((J, t))
        return out

    def localize(self, J, elem):
        """Coordinates of an element of F (degree d + K|J|) in V_J."""
        nf = self.local_gb(J).normal_form(elem)
        return {(J, t): c for t, c in nf.items()}

    def differential_images(self, p, d, K):
        """Images of the C^p basis vectors under d^p (sparse, keyed by
        (J', term))."""
        nv = self.M.nvars
        images = []
        for J, t in self.basis(p, d, K):
            img = {}
            for j in range(nv):
                if j in J:
                    continue
                J2 = tuple(sorted(J + (j,)))
                sign = -1 if J2.index(j) % 2 else 1
                e = [0] * nv
                e[j] = K
                shifted = {(t[0], tuple(a + b for a, b in zip(t[1], e))): Fraction(sign)}
                for key, c in self.localize(J2, shifted).items():
                    img[key] = img.get(key, 0) + c
            images.append({k: v for k, v in img.items() if v})
        return images

    def dims_at(self, d, K):
        key = (d, K)
        if key in self._dims:
            return self._dims[key]
        nv = self.M.nvars
        sizes = [len(self.basis(p, d, K)) for p in range(nv)]
        ranks = []
        for p in range(nv - 1):
            ranks.append(Echelon(self.differential_images(p, d, K)).rank)
        ranks.append(0)
        h = []
        for p in range(nv):
            prev = ranks[p - 1] if p > 0 else 0
            h.append(sizes[p] - ranks[p] - prev)
        h = tuple(h)
        self._dims[key] = h
        return h

    def cohomology(self, d):
        """(h^0, ..., h^n) of M~(d); K is raised until the dimensions agree
        at K, K+1 and K+2."""
        if d in self._stable:
            return self._stable[d][1]
        K = self.start_exponent(d)
        while K + 2 <= self.cap:
            a, b, c = self.dims_at(d, K), self.dims_at(d, K + 1), self.dims_at(d, K + 2)
            if a == b == c:
                self._stable[d] = (K, a)
                return a
            K += 1
        raise StabilizationFailure(
            f"Cech dimensions in degree {d} did not stabilize below exponent cap {self.cap}"
        )

    def stable_exponent(self, d):
        self.cohomology(d)
        return self._stable[d][0]

    def h0_basis(self, d, K):
        """Basis of the global sections in degree d as vectors of C^0_K."""
        basis = self.basis(0, d, K)
        images = self.differential_images(0, d, K)
        rows = {}
        for col, img in enumerate(images):
            for key, c in img.items():
                rows.setdefault(key, {})[col] = c
        kern = nullspace(list(rows.values()), len(basis))
        return [{basis[i]: c for i, c in v.items()} for v in kern]


def cech(M, cap=DEFAULT_CECH_CAP):
    """The (cached) Cech machinery attached to a module."""
    cx = getattr(M, "_cech", None)
    if cx is None or cx.cap != cap:
        cx = CechComplex(M, cap)
        M._cech = cx
    return cx


def sheaf_cohomology(M, d, cap=DEFAULT_CECH_CAP):
    return cech(M, cap).cohomology(d)


def sheaf_cohomology_dim(M, i, d, cap=DEFAULT_CECH_CAP):
    """dim H^i(P^n, M~(d))."""
    if i < 0:
        raise ValueError("cohomological degree must be non-negative")
    if i > M.n:
        return 0
    return sheaf_cohomology(M, d, cap)[i]


@dataclass
class CohomologyTable:
    n: int
    entries: dict = field(default_factory=dict)

    def degrees(self):
        return sorted({d for _, d in self.entries})

    def euler_characteristic(self, d):
        return sum((-1) ** i * self.entries[(i, d)] for i in range(self.n + 1))

    def to_dict(self):
        return {
            str(d): [self.entries[(i, d)] for i in range(self.n + 1)] for d in self.degrees()
        }


def cohomology_table(M, degrees, cap=DEFAULT_CECH_CAP):
    table = CohomologyTable(M.n)
    for d in degrees:
        for i, h in enumerate(sheaf_cohomology(M, d, cap)):
            table.entries[(i, d)] = h
    return table


def is_m_regular(M, m, cap=DEFAULT_CECH_CAP):
    return all(sheaf_cohomology_dim(M, i, m - i, cap) == 0 for i in range(1, M.n + 1))


def regularity(M, cap=DEFAULT_CECH_CAP):
    """Least m with M~ m-regular.

    The search starts at the Betti-table bound max(j - i), which always
    works, and walks down while the sheaf stays regular. Sheaves with
    finite support (or zero) are m-regular for every m.
    """
    hp = M.hilbert_polynomial()
    if hp.degree <= 0:
        raise UnboundedRegularity(
            "sheaf is zero or has finite support; it is m-regular for every m"
        )
    m = M.betti_table().regularity_bound()
    if not is_m_regular(M, m, cap):
        raise RuntimeError("Betti bound is not a regularity index; Cech data inconsistent")
    while is_m_regular(M, m - 1, cap):
        m -= 1
    return m


# --------------------------------------------------------------------------
# Castelnuovo's lemma


def _common_exponent(cx, degrees):
    return max(cx.stable_exponent(d) for d in degrees)


def _product_rank(cx, r, targets, K):
    """Ranks of S_{e-r} * H^0(F(r)) inside H^0(F(e)) for each target e."""
    M = cx.M
    base = cx.h0_basis(r, K)
    out = {}
    for e in targets:
        ech = Echelon()
        for mono in monomials(M.nvars, e - r):
            for v in base:
                img = {}
                for (J, t), c in v.items():
                    shifted = elem_mul_mono({t: c}, mono)
                    for key, a in cx.localize(J, shifted).items():
                        img[key] = img.get(key, 0) + a
                ech.add({k: a for k, a in img.items() if a})
        out[e] = ech.rank
    return out


@dataclass
class CastelnuovoReport:
    mult_surjective: bool
    globally_generated: bool
    higher_vanishing: bool

    def all(self):
        return self.mult_surjective and self.globally_generated and self.higher_vanishing

    def to_dict(self):
        return {
            "mult_surjective": self.mult_surjective,
            "globally_generated": self.globally_generated,
            "higher_vanishing": self.higher_vanishing,
        }


def castelnuovo_checks(M, r, cap=DEFAULT_CECH_CAP):
    """Check the three conclusions of Castelnuovo's lemma at twist r.

    Global generation is certified by surjectivity of
    H^0(F(r)) (x) S_p -> H^0(F(r+p)) up to the Betti bound, beyond which
    the sections module is generated in lower degree.
    """
    cx = cech(M, cap)
    higher = all(h == 0 for h in cx.cohomology(r)[1:])
    bound = M.betti_table().regularity_bound()
    top = max(r + 1, bound if bound is not None else r + 1)
    targets = list(range(r + 1, top + 1))
    K = _common_exponent(cx, [r] + targets)
    ranks = _product_rank(cx, r, targets, K)
    h0 = {e: cx.cohomology(e)[0] for e in targets}
    mult = ranks[r + 1] == h0[r + 1]
    gen = all(ranks[e] == h0[e] for e in targets)
    return CastelnuovoReport(mult, gen, higher)


# --------------------------------------------------------------------------
# hyperplane sections


def random_linear_form(nvars, rng, low=-3, high=3):
    while True:
        coeffs = [rng.randint(low, high) for _ in range(nvars)]
        if any(coeffs):
            return coeffs


def _linear_poly(coeffs):
    nv = len(coeffs)
    out = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * nv
            e[i] = 1
            out[tuple(e)] = Fraction(c)
    return out


def is_nonzerodivisor(M, coeffs):
    """Whether the linear form avoids every associated point of M~, i.e. is
    a nonzerodivisor on the saturation of M."""
    sat = M.saturate()
    gb = sat.gb()
    quo = colon(sat.relations, _linear_poly(coeffs), M.nvars, M.degrees, M.order)
    return all(gb.contains(g) for g in quo)


def generic_hyperplane(M, rng=None, tries=5):
    """A small-integer linear form avoiding the associated points of M~."""
    rng = rng or random.Random(0)
    for _ in range(tries):
        coeffs = random_linear_form(M.nvars, rng)
        if is_nonzerodivisor(M, coeffs):
            return coeffs
    raise RuntimeError("no admissible hyperplane found")


def hyperplane_section(M, coeffs):
    """M / l M, whose sheaf is the restriction of M~ to {l = 0}."""
    lin = _linear_poly(coeffs)
    extra = []
    for c in range(M.rank):
        extra.append({(c, e): v for e, v in lin.items()})
    return GradedModule(M.ring, M.degrees, list(M.relations) + extra, M.order)


def restriction_surjective(M, coeffs, p, cap=DEFAULT_CECH_CAP):
    """Whether H^0(F(p)) -> H^0(F_H(p)) is onto, H = {l = 0}."""
    MH = hyperplane_section(M, coeffs)
    cx, cxh = cech(M, cap), cech(MH, cap)
    K = max(cx.stable_exponent(p), cxh.stable_exponent(p))
    ech = Echelon()
    for v in cx.h0_basis(p, K):
        img = {}
        for (J, t), c in v.items():
            for key, a in cxh.localize(J, {t: c}).items():
                img[key] = img.get(key, 0) + a
        ech.add({k: a for k, a in img.items() if a})
    return ech.rank == cxh.cohomology(p)[0]


# --------------------------------------------------------------------------
# Mumford's bound


def mumford_bound(p, n, a):
    """Regularity index valid for every subsheaf of O^p on P^n with
    Hilbert polynomial a (binomial basis).

    Recursion on n: with b the hyperplane restriction of a and m0 the bound
    for (p, n-1, b), the result is m0 + max(0, p C(n + m0, n) - a(m0));
    the n = 0 bound is 0.
    """
    if not isinstance(a, NumericalPolynomial):
        a = NumericalPolynomial(a)
    if p < 1 or n < 0:
        raise ValueError("need p >= 1 and n >= 0")
    if a.degree > n:
        raise DegreeTooHigh(f"Hilbert polynomial of degree {a.degree} on P^{n}")
    if n == 0:
        return 0
    m0 = mumford_bound(p, n - 1, hyperplane_restriction(a))
    slack = p * binom(n + m0, n) - a(m0)
    return m0 + max(slack, 0)
