"""Flattening stratifications over an affine base Spec Q[y_1..y_m].

Ranks of fibres of a module presented by a matrix over Q[y] are cut out by
Fitting ideals. For a family on P^n_S the degree-d strands are such modules,
and a stratum on which n+1 consecutive strands have constant ranks carries a
constant Hilbert polynomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .core import MultiPoly, PolyMatrix, PolyRing, field_rank, format_terms
from .errors import RefineCapExceeded
from .groebner import GradedModule, GroebnerBasis, monomials, poly_to_elem
from .numpoly import NumericalPolynomial, eventual_compare, eventual_key, interpolate
from .regularity import is_m_regular


# --------------------------------------------------------------------------
# ideals of the base ring


class Ideal:
    """Ideal of Q[y] kept with its reduced grevlex Groebner basis."""

    def __init__(self, ring, gens=()):
        self.ring = ring
        gens = [g if isinstance(g, MultiPoly) else MultiPoly.constant(ring, g) for g in gens]
        elems = [poly_to_elem(g) for g in gens if not g.is_zero()]
        self.gb = GroebnerBasis.compute(ring.nvars, [0], elems, "grevlex")
        self.gens = [MultiPoly(ring, {e: c for (_, e), c in g.items()}) for g in self.gb]

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return self.gb.is_unit_ideal()

    def contains(self, f):
        if not isinstance(f, MultiPoly):
            f = MultiPoly.constant(self.ring, f)
        return self.gb.contains(poly_to_elem(f))

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def __add__(self, other):
        return Ideal(self.ring, self.gens + other.gens)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.gb == other.gb

    def __hash__(self):
        return hash(self.gb)

    def radical_contains(self, f):
        """f in rad(I), via 1 in I + (1 - z f) with a fresh variable z."""
        if self.contains(f):
            return True
        big = PolyRing(self.ring.names + ("_z",))
        m = self.ring.nvars
        lift = {i: big.gen(i) for i in range(m)}
        gens = [g.substitute(lift, big) for g in self.gens]
        gens.append(big.one() - big.gen(m) * f.substitute(lift, big))
        return Ideal(big, gens).is_unit()

    def radical_contains_ideal(self, other):
        return all(self.radical_contains(g) for g in other.gens)

    def same_radical(self, other):
        return self.radical_contains_ideal(other) and other.radical_contains_ideal(self)

    def vanishes_at(self, point):
        return all(g.evaluate(point) == 0 for g in self.gens)

    def to_strings(self):
        return [str(g) for g in self.gens]

    def __repr__(self):
        return f"Ideal({', '.join(self.to_strings()) or '0'})"


def product_ideal(ideals):
    ring = ideals[0].ring
    gens = [ring.one()]
    for I in ideals:
        gens = [a * b for a in gens for b in I.gens]
    return Ideal(ring, gens)


# --------------------------------------------------------------------------
# strata


@dataclass
class StratumDescriptor:
    """V(closed) minus the union of the V(excluded)."""

    label: object
    closed: Ideal
    excluded: list = field(default_factory=list)

    def contains(self, point):
        if not self.closed.vanishes_at(point):
            return False
        return all(not E.vanishes_at(point) for E in self.excluded)

    def is_empty(self):
        """Empty over the algebraic closure: the excluded loci cover V(closed)."""
        if self.closed.is_unit():
            return True
        if not self.excluded:
            return False
        return self.closed.radical_contains_ideal(product_ideal(self.excluded))

    def label_json(self):
        if isinstance(self.label, NumericalPolynomial):
            return self.label.to_list()
        return self.label

    def to_dict(self):
        return {
            "label": self.label_json(),
            "closed": self.closed.to_strings(),
            "excluded": [E.to_strings() for E in self.excluded],
        }


def _prune_excluded(closed, excluded):
    """Add the closed ideal to each excluded ideal and drop the ones that are
    unit or whose zero set lies inside another's."""
    ideals = []
    for E in excluded:
        E = closed + E
        if not E.is_unit():
            ideals.append(E)
    keep = []
    for i, E in enumerate(ideals):
        redundant = False
        for j, F in enumerate(ideals):
            if i == j:
                continue
            # V(E) inside V(F): F in rad(E)
            if E.radical_contains_ideal(F):
                if not F.radical_contains_ideal(E) or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(E)
    return keep


def make_stratum(label, closed, excluded):
    return StratumDescriptor(label, closed, _prune_excluded(closed, excluded))


# --------------------------------------------------------------------------
# Fitting ideals and rank strata


def base_ring_of(psi):
    return psi.ring


def _presentation_rows(psi):
    return [list(row) for row in psi.entries]


def reduce_presentation(psi):
    """Cancel constant entries: the cokernel (hence every Fitting ideal) is
    unchanged, and one generator and one relation disappear per unit."""
    ring = psi.ring
    A = _presentation_rows(psi)
    ncols = psi.cols
    while True:
        hit = None
        for i, row in enumerate(A):
            for j, a in enumerate(row):
                if a.is_constant() and not a.is_zero():
                    hit = (i, j, a.constant_value())
                    break
            if hit:
                break
        if hit is None:
            break
        i, j, u = hit
        for jj in range(ncols):
            if jj == j or A[i][jj].is_zero():
                continue
            f = A[i][jj] / u
            for r in range(len(A)):
                if not A[r][j].is_zero():
                    A[r][jj] = A[r][jj] - f * A[r][j]
        del A[i]
        for row in A:
            del row[j]
        ncols -= 1
    keep = _nonzero_columns(A, ncols)
    A = [[a for a, k in zip(row, keep) if k] for row in A]
    return PolyMatrix(ring, A), len(A)


def _nonzero_columns(A, ncols):
    return [any(not row[j].is_zero() for row in A) for j in range(ncols)]


def fitting_ideal(psi, k):
    """Fitt_k: the (e-k)-minors of an e x m presentation. Fibre dimension at
    a point is >= k+1 exactly on V(Fitt_k)."""
    ring = psi.ring
    e = psi.rows
    if k < -1:
        raise ValueError(f"Fitting index {k} below -1")
    if k < 0:
        return Ideal(ring)
    if k >= e:
        return Ideal.unit(ring)
    red, e2 = reduce_presentation(psi)
    s = e - k
    drop = e - e2
    s2 = s - drop
    if s2 <= 0:
        return Ideal.unit(ring)
    if s2 > red.cols:
        return Ideal(ring)
    gens = []
    for rs in combinations(range(red.rows), s2):
        for cs in combinations(range(red.cols), s2):
            m = red.minor(rs, cs)
            if not m.is_zero():
                gens.append(m)
    return Ideal(ring, gens)


def fitting_ideals(psi):
    return [fitting_ideal(psi, k) for k in range(-1, psi.rows + 1)]


def rank_strata(psi):
    """Strata of constant fibre dimension k (labels are the integers k)."""
    fitt = fitting_ideals(psi)
    out = []
    for k in range(psi.rows + 1):
        closed, nxt = fitt[k], fitt[k + 1]
        s = make_stratum(k, closed, [nxt])
        if not s.is_empty():
            out.append(s)
    return out


def fiber_rank(psi, point):
    """Dimension of the cokernel of psi evaluated at a rational point."""
    if psi.rows == 0:
        return 0
    if psi.cols == 0:
        return psi.rows
    return psi.rows - field_rank(psi.evaluate(point))


def generic_free_locus(psi, rng=None):
    """(f, k): a nonzero maximal nonvanishing minor f and the rank k of the
    cokernel, which is free over the localization at f."""
    ring = psi.ring
    e = psi.rows
    if psi.is_zero() or psi.cols == 0:
        return ring.one(), e
    rng = rng or random.Random(0)
    rho = 0
    for _ in range(3):
        pt = [Fraction(rng.randint(-50, 50)) for _ in range(ring.nvars)]
        rho = max(rho, field_rank(psi.evaluate(pt)))
    while rho < min(e, psi.cols) and any(not m.is_zero() for m in psi.minors(rho + 1)):
        rho += 1
    for rs in combinations(range(e), rho):
        for cs in combinations(range(psi.cols), rho):
            m = psi.minor(rs, cs)
            if not m.is_zero():
                return m, e - rho
    raise AssertionError("no nonzero minor of the generic rank")


# --------------------------------------------------------------------------
# families on P^n over the base


class FamilyPresentation:
    """coker(relations) -> (+) Q[y][x](-a): relations are elements
    {(component, exponents over x then y): coeff}, homogeneous in x."""

    def __init__(self, ring, degrees, relations=()):
        if ring.nfiber == 0:
            raise ValueError("a family needs fibre variables")
        self.ring = ring
        self.degrees = tuple(degrees)
        self.nx = ring.nfiber
        self.base_ring = PolyRing(ring.base_names)
        rels = []
        for r in relations:
            r = {t: Fraction(v) for t, v in r.items() if v}
            if not r:
                continue
            if len({self._xdeg(t) for t in r}) != 1:
                raise ValueError("relation is not homogeneous in the fibre variables")
            rels.append(r)
        self.relations = rels

    @classmethod
    def from_matrix(cls, ring, target_twists, matrix):
        rels = []
        grid = matrix.entries if isinstance(matrix, PolyMatrix) else matrix
        if grid:
            for j in range(len(grid[0])):
                f = {}
                for i, row in enumerate(grid):
                    for e, c in row[j].terms.items():
                        f[(i, e)] = c
                rels.append(f)
        return cls(ring, [-a for a in target_twists], rels)

    @property
    def n(self):
        return self.nx - 1

    @property
    def twists(self):
        return tuple(-d for d in self.degrees)

    def _xdeg(self, term):
        c, e = term
        return self.degrees[c] + sum(e[: self.nx])

    def relation_degree(self, r):
        return self._xdeg(next(iter(r)))

    def strand_basis(self, d):
        return [(c, m) for c, dc in enumerate(self.degrees) for m in monomials(self.nx, d - dc)]

    def fiber(self, point):
        """The graded Q[x]-module obtained by substituting y = point."""
        xring = PolyRing(self.ring.fiber_names)
        rels = []
        for r in self.relations:
            out = {}
            for (c, e), v in r.items():
                val = v
                for a, y in zip(e[self.nx :], point):
                    if a:
                        val *= Fraction(y) ** a
                if val:
                    key = (c, e[: self.nx])
                    out[key] = out.get(key, 0) + val
            out = {k: v for k, v in out.items() if v}
            if out:
                rels.append(out)
        return GradedModule(xring, self.degrees, rels)


def strand_presentation(F, d):
    """Presentation over Q[y] of the degree-d strand: rows are the degree-d
    terms of the free module, columns the x-monomial multiples of the
    relations landing in degree d."""
    basis = F.strand_basis(d)
    index = {t: i for i, t in enumerate(basis)}
    R = F.base_ring
    cols = []
    for r in F.relations:
        delta = F.relation_degree(r)
        for mu in monomials(F.nx, d - delta):
            col = {}
            for (c, e), v in r.items():
                ex = tuple(a + b for a, b in zip(e[: F.nx], mu))
                i = index[(c, ex)]
                ey = e[F.nx :]
                col.setdefault(i, {})
                col[i][ey] = col[i].get(ey, 0) + v
            cols.append(col)
    entries = [[MultiPoly(R, col.get(i, {})) for col in cols] for i in range(len(basis))]
    return PolyMatrix(R, entries)


class Stratification(list):
    """List of strata; ``capped`` is set when some refinement chain hit the
    cap before its Groebner basis stabilized."""

    def __init__(self, strata=(), capped=False, N=None):
        super().__init__(strata)
        self.capped = capped
        self.N = N

    def locate(self, point):
        hits = [s for s in self if s.contains(point)]
        return hits

    def to_list(self):
        return [s.to_dict() for s in self]


def hilbert_stratification(F, N, refine_cap=None, strict=False):
    """Hilbert-polynomial flattening stratification of a family.

    Strata of constant strand ranks e_0..e_n in degrees N..N+n are
    intersected; each rank tuple is the polynomial through those values.
    Each stratum is then cut down by Fitt_{f(d)-1} of the strands d > N+n
    until its Groebner basis stays the same for two consecutive degrees.
    """
    n = F.n
    cap = n + 5 if refine_cap is None else refine_cap
    R = F.base_ring
    per_strand = [rank_strata(strand_presentation(F, N + i)) for i in range(n + 1)]
    strata = []
    capped = False
    for combo in product(*per_strand):
        closed = Ideal(R)
        for s in combo:
            closed = closed + s.closed
        if closed.is_unit():
            continue
        excluded = [E for s in combo for E in s.excluded]
        cand = make_stratum(None, closed, excluded)
        if cand.is_empty():
            continue
        label = interpolate([s.label for s in combo], N)
        closed, stable = cand.closed, 0
        d = N + n + 1
        extra = 0
        while stable < 2:
            if extra >= cap:
                capped = True
                break
            fd = label(d)
            psi = strand_presentation(F, d)
            new = closed + fitting_ideal(psi, fd - 1) if fd >= 1 else closed
            stable = stable + 1 if new == closed else 0
            closed = new
            d += 1
            extra += 1
        s = make_stratum(label, closed, cand.excluded)
        if not s.is_empty():
            strata.append(s)
    strata.sort(key=lambda s: eventual_key(s.label))
    if capped and strict:
        raise RefineCapExceeded(f"refinement did not stabilize within {cap} extra strands")
    return Stratification(strata, capped, N)


def closure_order_ok(strat, point):
    """For a point of the closure of stratum f, the stratum g containing it
    must satisfy f <= g eventually."""
    ok = True
    for s in strat:
        if not s.closed.vanishes_at(point):
            continue
        for g in strat.locate(point):
            if eventual_compare(s.label, g.label) > 0:
                ok = False
    return ok


def irregular_fibers(F, N, points):
    """Sampled points whose fibre sheaf is not N-regular.

    An empty answer is evidence for, not a proof of, N being a valid
    starting degree for the whole family.
    """
    return [pt for pt in points if not is_m_regular(F.fiber(pt), N)]


def stratum_for_label(strat, label, ring):
    for s in strat:
        if s.label == label:
            return s
    return StratumDescriptor(label, Ideal.unit(ring), [])


def format_base_poly(p):
    return format_terms(p.ring.names, p.terms)
