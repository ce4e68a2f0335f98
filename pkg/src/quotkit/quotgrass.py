"""Quotients of a trivial bundle on P^n and their Grassmannian points.

A quotient q: S^p -> F with kernel K gives, in a degree r at or above the
relevant regularities, the linear map S^p_r -> F_r. Its kernel K_r is a
point of the Grassmannian of codimension-Phi(r) subspaces of S^p_r, and the
submodule generated by K_r recovers K in all degrees >= r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Echelon, MultiPoly, PolyRing
from .errors import RegularityTooLow
from .flattening import FamilyPresentation, Ideal, StratumDescriptor, hilbert_stratification
from .grassmann import normalize
from .groebner import GradedModule, monomials, strand_span
from .numpoly import NumericalPolynomial, binom


def fiber_ring(n):
    return PolyRing(tuple(f"x{i}" for i in range(n + 1)))


def ambient_basis(p, n, r):
    """Terms of (S^p)_r: components in order, monomials lex-descending."""
    return [(c, e) for c in range(p) for e in monomials(n + 1, r)]


@dataclass
class QuotientDatum:
    """F = S^p / K with the quotient map from the free module."""

    p: int
    n: int
    kernel: list
    ring: PolyRing = None
    module: GradedModule = field(init=False, repr=False)

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be positive")
        if self.ring is None:
            self.ring = fiber_ring(self.n)
        if self.ring.nfiber != self.n + 1:
            raise ValueError("ring does not match P^n")
        self.kernel = [dict(g) for g in self.kernel if g]
        self.module = GradedModule(self.ring, [0] * self.p, self.kernel)

    @classmethod
    def from_polys(cls, n, columns, ring=None):
        """Kernel generators given as lists of p MultiPolys."""
        p = len(columns[0]) if columns else 1
        gens = []
        for col in columns:
            g = {}
            for c, f in enumerate(col):
                for e, v in f.terms.items():
                    g[(c, e)] = v
            gens.append(g)
        return cls(p, n, gens, ring)

    @property
    def hilbert_polynomial(self):
        return self.module.hilbert_polynomial()

    def hilbert_function(self, d):
        return self.module.hilbert_function(d)

    def kernel_strand(self, d):
        """RREF basis of K_d as sparse vectors keyed by terms."""
        return strand_span(self.kernel, self.n + 1, [0] * self.p, d).rref()


@dataclass
class GrassSectionPoint:
    r: int
    p: int
    n: int
    basis: list
    quotient_matrix: list
    kernel_basis: list

    @property
    def ambient_dim(self):
        return len(self.basis)

    @property
    def rank(self):
        return len(self.quotient_matrix)

    def chart_point(self):
        """The same point in the chart atlas of Grass(ambient_dim, rank)."""
        return normalize(self.quotient_matrix)

    def to_dict(self):
        return {
            "r": self.r,
            "ambient_dim": self.ambient_dim,
            "rank": self.rank,
            "quotient": [[_num(x) for x in row] for row in self.quotient_matrix],
            "kernel": [[_num(x) for x in row] for row in self.kernel_basis],
        }


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def grass_point_of_quotient(q, r):
    """Degree-r strand S^p_r -> F_r, written on the standard monomials of F."""
    phi = q.hilbert_polynomial(r)
    gb = q.module.gb()
    standard = gb.standard_terms(r)
    if len(standard) != phi:
        raise RegularityTooLow(
            f"dim F_{r} = {len(standard)} but the Hilbert polynomial gives {phi}"
        )
    basis = ambient_basis(q.p, q.n, r)
    pos = {t: i for i, t in enumerate(standard)}
    Q = [[Fraction(0)] * len(basis) for _ in standard]
    for j, t in enumerate(basis):
        for s, v in gb.normal_form({t: Fraction(1)}).items():
            Q[pos[s]][j] = v
    index = {t: i for i, t in enumerate(basis)}
    ech = Echelon({index[t]: v for t, v in vec.items()} for vec in q.kernel_strand(r))
    kern = []
    for vec in ech.rref():
        row = [Fraction(0)] * len(basis)
        for i, v in vec.items():
            row[i] = v
        kern.append(row)
    return GrassSectionPoint(r, q.p, q.n, basis, Q, kern)


def quotient_from_grass_point(g, p=None, n=None, ring=None):
    """Cokernel of the submodule generated by the kernel vectors in degree r."""
    p = g.p if p is None else p
    n = g.n if n is None else n
    gens = []
    for row in g.kernel_basis:
        v = {t: Fraction(x) for t, x in zip(g.basis, row) if x}
        if v:
            gens.append(v)
    return QuotientDatum(p, n, gens, ring)


def quotients_agree(q1, q2, r, upto=3, saturated=False):
    """Kernels coincide in every degree r..r+upto (or after saturation)."""
    if (q1.p, q1.n) != (q2.p, q2.n):
        return False
    if saturated:
        return q1.module.saturate().gb() == q2.module.saturate().gb()
    return all(q1.kernel_strand(d) == q2.kernel_strand(d) for d in range(r, r + upto + 1))


def exact_sequence_dims(q, d):
    """(dim K_d, dim F_d, dim S^p_d)."""
    return len(q.kernel_strand(d)), q.hilbert_function(d), q.p * binom(q.n + d, q.n)


# --------------------------------------------------------------------------
# families of kernels


@dataclass
class KernelFamily:
    """Subspaces of S^p_r spanned by vectors with entries in Q[y]."""

    p: int
    n: int
    r: int
    vectors: list
    base_names: tuple = ("y",)

    def ring(self):
        return PolyRing.fiber_base([f"x{i}" for i in range(self.n + 1)], self.base_names)

    def family(self):
        R = self.ring()
        base = PolyRing(self.base_names)
        basis = ambient_basis(self.p, self.n, self.r)
        rels = []
        for vec in self.vectors:
            if len(vec) != len(basis):
                raise ValueError(f"kernel vector should have {len(basis)} entries")
            g = {}
            for (c, ex), a in zip(basis, vec):
                if not isinstance(a, MultiPoly):
                    a = MultiPoly.constant(base, a)
                for ey, v in a.terms.items():
                    g[(c, ex + ey)] = g.get((c, ex + ey), 0) + v
            g = {k: v for k, v in g.items() if v}
            if g:
                rels.append(g)
        return FamilyPresentation(R, [0] * self.p, rels)


def quot_stratum(kernel_family, phi, N=None, refine_cap=None):
    """Locus of the base where the cokernel family has Hilbert polynomial
    phi; a unit closed ideal means the locus is empty."""
    if not isinstance(phi, NumericalPolynomial):
        phi = NumericalPolynomial(phi)
    F = kernel_family.family()
    N = kernel_family.r if N is None else N
    if N < kernel_family.r:
        raise ValueError("N must be at least r")
    strat = hilbert_stratification(F, N, refine_cap)
    for s in strat:
        if s.label == phi:
            return s
    return StratumDescriptor(phi, Ideal.unit(F.base_ring), [])
