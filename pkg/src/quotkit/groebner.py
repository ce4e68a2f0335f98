"""Groebner bases for submodules of graded free modules over Q[x_0..x_n].

Module elements are plain dicts ``{(component, exponents): Fraction}``;
polynomial ideals are the rank-one case (component 0). Generator degrees of
the ambient free module are carried alongside as ``degrees`` (the generator
of ``S(a)`` sits in degree ``-a``), so a term ``(c, e)`` has degree
``sum(e) + degrees[c]``.

On top of Buchberger's algorithm this module builds syzygies, minimal free
resolutions, Betti tables, Hilbert functions and polynomials, colon
modules and saturation.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache

from .core import Echelon, MultiPoly, PolyMatrix, PolyRing, format_terms
from .numpoly import NumericalPolynomial, free_module_hp

# --------------------------------------------------------------------------
# monomials and term orders


@lru_cache(maxsize=None)
def monomials(nvars, deg):
    """Exponent tuples of total degree ``deg``, lexicographically descending."""
    if deg < 0:
        return ()
    if nvars == 0:
        return ((),) if deg == 0 else ()
    if nvars == 1:
        return ((deg,),)
    out = []
    for a in range(deg, -1, -1):
        for rest in monomials(nvars - 1, deg - a):
            out.append((a,) + rest)
    return tuple(out)


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


class TermOrder:
    """Position-over-term order (lower component index ranks higher) with
    grevlex or lex on monomials, or the degree/reverse-lex term-over-position
    order ``"top-revlex"`` used for saturation by the last variable."""

    NAMES = ("grevlex", "lex", "top-revlex")

    def __init__(self, name="grevlex", degrees=None):
        if name not in self.NAMES:
            raise ValueError(f"unknown monomial order {name!r}")
        self.name = name
        self.degrees = tuple(degrees or ())
        self._cache = {}

    def key(self, term):
        k = self._cache.get(term)
        if k is not None:
            return k
        c, e = term
        if self.name == "grevlex":
            k = (-c, sum(e), tuple(-x for x in reversed(e)))
        elif self.name == "lex":
            k = (-c, e)
        else:
            shift = self.degrees[c] if c < len(self.degrees) else 0
            k = (sum(e) + shift, tuple(-x for x in reversed(e)), -c)
        self._cache[term] = k
        return k

    def __repr__(self):
        return f"TermOrder({self.name!r})"


def get_order(order, degrees=None):
    if isinstance(order, TermOrder):
        return order
    return TermOrder(order, degrees)


# --------------------------------------------------------------------------
# element arithmetic


def lead(f, order):
    t = max(f, key=order.key)
    return t, f[t]


def elem_scale(f, c):
    return {t: v * c for t, v in f.items()}


def elem_add(f, g, c=1):
    """f + c*g."""
    out = dict(f)
    for t, v in g.items():
        x = out.get(t, 0) + c * v
        if x:
            out[t] = x
        else:
            out.pop(t, None)
    return out


def elem_mul_mono(f, e, c=1):
    return {(comp, mono_mul(m, e)): v * c for (comp, m), v in f.items()}


def elem_mul_poly(f, p):
    """Multiply a module element by a polynomial given as {exps: coeff}."""
    out = {}
    for e, c in p.items():
        for (comp, m), v in f.items():
            t = (comp, mono_mul(m, e))
            x = out.get(t, 0) + c * v
            if x:
                out[t] = x
            else:
                out.pop(t, None)
    return out


def elem_degree(f, degrees):
    """Graded degree of a homogeneous element (None for zero)."""
    degs = {sum(e) + degrees[c] for c, e in f}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    return degs.pop()


def elem_max_degree(f, degrees):
    return max(sum(e) + (degrees[c] if c < len(degrees) else 0) for c, e in f)


def elem_component(f, c):
    """Polynomial {exps: coeff} sitting in component c."""
    return {e: v for (comp, e), v in f.items() if comp == c}


def monic(f, order):
    _, lc = lead(f, order)
    if lc == 1:
        return dict(f)
    return {t: v / lc for t, v in f.items()}


def poly_to_elem(p, comp=0):
    """MultiPoly (or {exps: coeff}) -> element in component ``comp``."""
    terms = p.terms if isinstance(p, MultiPoly) else p
    return {(comp, e): Fraction(c) for e, c in terms.items()}


def elem_to_poly(f, ring, comp=0):
    return MultiPoly(ring, elem_component(f, comp))


def columns_to_elems(matrix):
    """Columns of a PolyMatrix (or nested lists of MultiPoly) as elements."""
    grid = matrix.entries if isinstance(matrix, PolyMatrix) else matrix
    if not grid:
        return []
    out = []
    for j in range(len(grid[0])):
        f = {}
        for i, row in enumerate(grid):
            for e, c in row[j].terms.items():
                f[(i, e)] = c
        out.append(f)
    return out


def elems_to_matrix(elems, ring, rank):
    cols = [[MultiPoly(ring, elem_component(f, i)) for i in range(rank)] for f in elems]
    if not cols:
        return PolyMatrix(ring, [[] for _ in range(rank)])
    return PolyMatrix(ring, [list(r) for r in zip(*cols)])


def elem_sort_key(f, order):
    return order.key(lead(f, order)[0])


def canonical_elem(f):
    """Hashable canonical form of an element."""
    return tuple(sorted(f.items()))


# --------------------------------------------------------------------------
# reduction and Buchberger


class _Basis:
    """Indexed collection of monic basis elements for reduction."""

    def __init__(self, order):
        self.order = order
        self.elems = []
        self.by_comp = {}

    def add(self, g):
        (c, e), _ = lead(g, self.order)
        idx = len(self.elems)
        self.elems.append(g)
        self.by_comp.setdefault(c, []).append((e, idx))
        return idx

    def lead_of(self, idx):
        return lead(self.elems[idx], self.order)[0]

    def find_reducer(self, term, skip=()):
        c, e = term
        for le, idx in self.by_comp.get(c, ()):
            if idx not in skip and mono_divides(le, e):
                return idx, le
        return None

    def reduce(self, f, skip=(), full=True):
        key = self.order.key
        p = dict(f)
        r = {}
        while p:
            t = max(p, key=key)
            c = p[t]
            hit = self.find_reducer(t, skip)
            if hit is None:
                if not full:
                    r.update(p)
                    return r
                r[t] = c
                del p[t]
                continue
            idx, le = hit
            g = self.elems[idx]
            q = mono_div(t[1], le)
            for (gc, ge), gv in g.items():
                nt = (gc, mono_mul(ge, q))
                x = p.get(nt, 0) - c * gv
                if x:
                    p[nt] = x
                else:
                    p.pop(nt, None)
            p.pop(t, None)
        return r


def _sugar(f, degrees):
    return elem_max_degree(f, degrees)


def buchberger(gens, order="grevlex", degrees=None):
    """Reduced Groebner basis of the submodule generated by ``gens``.

    ``degrees`` are the component degree shifts used for pair selection
    (sugar); they do not affect the result, which is the unique reduced
    basis for the order. Returned elements are monic and sorted by leading
    term, largest first.
    """
    degrees = tuple(degrees or ())
    nc = 1 + max((c for f in gens for c, _ in f), default=0)
    if len(degrees) < nc:
        degrees = degrees + (0,) * (nc - len(degrees))
    order = get_order(order, degrees)
    gens = [dict(f) for f in gens if f]
    is_ideal = all(c == 0 for f in gens for c, _ in f)

    B = _Basis(order)
    sugar = []
    pairs = []
    pending = set()

    def add_element(h, s):
        h = monic(h, order)
        idx = B.add(h)
        sugar.append(s)
        (c, e), _ = lead(h, order)
        for j in range(idx):
            (cj, ej), _ = lead(B.elems[j], order)
            if cj != c:
                continue
            L = mono_lcm(e, ej)
            if is_ideal and L == mono_mul(e, ej):
                continue
            ps = max(sugar[j] + sum(L) - sum(ej), s + sum(L) - sum(e))
            heapq.heappush(pairs, (ps, order.key((c, L)), j, idx))
            pending.add((j, idx))

    for f in sorted(gens, key=lambda f: _sugar(f, degrees)):
        h = B.reduce(f)
        if h:
            add_element(h, _sugar(f, degrees))

    while pairs:
        ps, _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        (c, ei), _ = lead(B.elems[i], order)
        (_, ej), _ = lead(B.elems[j], order)
        L = mono_lcm(ei, ej)
        if _chain_criterion(B, order, i, j, c, L, pending):
            continue
        fi, fj = B.elems[i], B.elems[j]
        s = elem_add(elem_mul_mono(fi, mono_div(L, ei)), elem_mul_mono(fj, mono_div(L, ej)), -1)
        h = B.reduce(s)
        if h:
            add_element(h, ps)

    return reduce_basis(B.elems, order)


def _chain_criterion(B, order, i, j, c, L, pending):
    for k, g in enumerate(B.elems):
        if k == i or k == j:
            continue
        (ck, ek), _ = lead(g, order)
        if ck != c or not mono_divides(ek, L):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def reduce_basis(elems, order):
    """Minimal, inter-reduced, monic, sorted version of a Groebner basis."""
    order = get_order(order)
    leads = [lead(g, order)[0] for g in elems]
    keep = []
    for i, (c, e) in enumerate(leads):
        dominated = False
        for j, (c2, e2) in enumerate(leads):
            if j == i or c2 != c or not mono_divides(e2, e):
                continue
            if e2 != e or j < i:
                dominated = True
                break
        if not dominated:
            keep.append(i)
    minimal = [monic(elems[i], order) for i in keep]
    B = _Basis(order)
    for g in minimal:
        B.add(g)
    out = []
    for idx, g in enumerate(minimal):
        t, c = lead(g, order)
        tail = dict(g)
        del tail[t]
        r = B.reduce(tail, skip=(idx,))
        r[t] = c
        out.append(r)
    out.sort(key=lambda g: order.key(lead(g, order)[0]), reverse=True)
    return out


class GroebnerBasis:
    """Reduced Groebner basis together with its order and ambient data."""

    def __init__(self, nvars, degrees, elements, order="grevlex"):
        self.nvars = nvars
        self.degrees = tuple(degrees)
        self.order = get_order(order, degrees)
        self.elements = list(elements)
        self._basis = _Basis(self.order)
        for g in self.elements:
            self._basis.add(g)
        self.leads = [lead(g, self.order)[0] for g in self.elements]

    @classmethod
    def compute(cls, nvars, degrees, gens, order="grevlex"):
        ordname = order.name if isinstance(order, TermOrder) else order
        return cls(nvars, degrees, buchberger(gens, ordname, degrees), ordname)

    def normal_form(self, f):
        return self._basis.reduce(f)

    def contains(self, f):
        return not self.normal_form(f)

    def is_unit_ideal(self):
        return any(c == 0 and not any(e) for c, e in self.leads)

    def is_standard(self, term):
        return self._basis.find_reducer(term) is None

    def standard_terms(self, d):
        """Terms of degree d not divisible by any leading term (a basis of
        the degree-d piece of the quotient)."""
        out = []
        for c, dc in enumerate(self.degrees):
            for e in monomials(self.nvars, d - dc):
                if self.is_standard((c, e)):
                    out.append((c, e))
        return out

    def canonical(self):
        return tuple(canonical_elem(g) for g in self.elements)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def normal_form(f, gb):
    return gb.normal_form(f)


# --------------------------------------------------------------------------
# strands (degreewise linear algebra)


def free_strand_terms(nvars, degrees, d):
    return [(c, e) for c, dc in enumerate(degrees) for e in monomials(nvars, d - dc)]


def strand_span(gens, nvars, degrees, d, echelon=None):
    """Echelon basis of the degree-d piece of the submodule generated by
    homogeneous ``gens``."""
    ech = echelon if echelon is not None else Echelon()
    for g in gens:
        dg = elem_degree(g, degrees)
        if dg is None or dg > d:
            continue
        for e in monomials(nvars, d - dg):
            ech.add(elem_mul_mono(g, e))
    return ech


def strand_image_rank(cols, nvars, source_degrees, d):
    """Rank of the degree-d strand of the map sending e_j to cols[j]."""
    ech = Echelon()
    for col, dj in zip(cols, source_degrees):
        for e in monomials(nvars, d - dj):
            ech.add(elem_mul_mono(col, e))
    return ech.rank


# --------------------------------------------------------------------------
# syzygies, kernels, colons


def kernel(cols, nvars, target_degrees, source_degrees=None, order="grevlex"):
    """Generators of the kernel of S^k -> F, e_j -> cols[j].

    Computed by a Groebner basis of the graph module {(col_j, e_j)} in
    F + S^k under a position-over-term order that ranks F first: the basis
    elements with no F-component generate the kernel.
    """
    R = len(target_degrees)
    if source_degrees is None:
        source_degrees = [elem_degree(c, target_degrees) for c in cols]
        if any(d is None for d in source_degrees):
            raise ValueError("zero columns need explicit source degrees")
    zero = (0,) * nvars
    aug = []
    for j, col in enumerate(cols):
        a = dict(col)
        a[(R + j, zero)] = Fraction(1)
        aug.append(a)
    degrees = tuple(target_degrees) + tuple(source_degrees)
    gb = buchberger(aug, order, degrees)
    out = []
    for g in gb:
        if all(c >= R for c, _ in g):
            out.append({(c - R, e): v for (c, e), v in g.items()})
    return out


def syzygies(gb_or_gens, nvars, degrees, order="grevlex"):
    """Generators of the syzygy module of the given generators."""
    gens = list(gb_or_gens)
    return kernel(gens, nvars, degrees, None, order)


def minimal_generators(gens, nvars, degrees):
    """A minimal homogeneous generating subset (degree by degree)."""
    items = []
    for g in gens:
        d = elem_degree(g, degrees)
        if d is not None:
            items.append((d, g))
    items.sort(key=lambda x: x[0])
    kept = []
    for d in sorted({d for d, _ in items}):
        ech = strand_span([g for dg, g in kept], nvars, degrees, d)
        for dg, g in items:
            if dg == d and ech.add(g):
                kept.append((d, g))
    return [g for _, g in kept]


def intersect(A, B, nvars, degrees, order="grevlex"):
    """Generators of the intersection of two submodules of F."""
    A = [a for a in A if a]
    B = [b for b in B if b]
    if not A or not B:
        return []
    cols = A + [elem_scale(b, -1) for b in B]
    syz = kernel(cols, nvars, degrees, None, order)
    out = []
    for s in syz:
        v = {}
        for j, a in enumerate(A):
            p = elem_component(s, j)
            if p:
                v = elem_add(v, elem_mul_poly(a, p))
        if v:
            out.append(v)
    return out


def colon(N, f, nvars, degrees, order="grevlex"):
    """Generators of N : f = {m in F : f m in N} for a homogeneous polynomial f
    given as {exps: coeff}."""
    R = len(degrees)
    df = sum(next(iter(f)))
    cols = [elem_mul_poly({(c, (0,) * nvars): Fraction(1)}, f) for c in range(R)]
    src = [degrees[c] + df for c in range(R)]
    cols += [elem_scale(g, -1) for g in N if g]
    src += [elem_degree(g, degrees) for g in N if g]
    syz = kernel(cols, nvars, degrees, src, order)
    out = []
    for s in syz:
        m = {(c, e): v for (c, e), v in s.items() if c < R}
        if m:
            out.append(m)
    return out


def _permute_elem(f, perm):
    return {(c, tuple(e[p] for p in perm)): v for (c, e), v in f.items()}


def saturate_by_variable(N, var, nvars, degrees):
    """Generators of N : x_var^infinity.

    With a degree/reverse-lex term-over-position order in which x_var is
    the last variable, x_var divides the leading term of a homogeneous
    element only if it divides every term; dividing a Groebner basis by
    the largest powers of x_var therefore generates the saturation.
    """
    perm = [i for i in range(nvars) if i != var] + [var]
    inv = [perm.index(i) for i in range(nvars)]
    gens = [_permute_elem(g, perm) for g in N if g]
    if not gens:
        return []
    gb = buchberger(gens, TermOrder("top-revlex", degrees), degrees)
    out = []
    for g in gb:
        k = min(e[-1] for _, e in g)
        if k:
            g = {(c, e[:-1] + (e[-1] - k,)): v for (c, e), v in g.items()}
        out.append(_permute_elem(g, inv))
    return out


def saturate_by_monomial(N, variables, nvars, degrees):
    """Generators of N : (prod of x_j, j in variables)^infinity."""
    gens = list(N)
    for v in variables:
        gens = saturate_by_variable(gens, v, nvars, degrees)
    return gens


def saturate_irrelevant(N, nvars, degrees, order="grevlex"):
    """Generators of N : (x_0, ..., x_n)^infinity, the intersection of the
    saturations by each variable."""
    parts = [saturate_by_variable(N, j, nvars, degrees) for j in range(nvars)]
    result = parts[0]
    for p in parts[1:]:
        gbr = GroebnerBasis.compute(nvars, degrees, result, order)
        if all(gbr.contains(g) for g in p):
            result = p
            continue
        gbp = GroebnerBasis.compute(nvars, degrees, p, order)
        if all(gbp.contains(g) for g in result):
            continue
        result = intersect(result, p, nvars, degrees, order)
    return result


# --------------------------------------------------------------------------
# graded modules, resolutions, Betti tables


def _minimize_presentation(degrees, relations):
    """Cancel unit entries: a relation with a constant entry in component c
    lets generator c be eliminated together with that relation."""
    degrees = list(degrees)
    rels = [dict(r) for r in relations if r]
    while True:
        hit = None
        for j, r in enumerate(rels):
            for (c, e), v in r.items():
                if not any(e):
                    hit = (j, c, v)
                    break
            if hit:
                break
        if hit is None:
            break
        j, c, u = hit
        pivot = rels.pop(j)
        new = []
        for r in rels:
            p = elem_component(r, c)
            if p:
                r = elem_add(r, elem_mul_poly(pivot, {e: -v / u for e, v in p.items()}))
            if r:
                new.append({((k if k < c else k - 1), e): v for (k, e), v in r.items()})
        rels = new
        del degrees[c]
    return degrees, rels


class FreeResolution:
    """Minimal graded free resolution F_0 <- F_1 <- ... .

    ``degrees[i]`` lists the generator degrees of F_i and ``maps[i]`` holds
    the columns (elements of F_i) of the differential F_{i+1} -> F_i.
    """

    def __init__(self, nvars, degrees, maps):
        self.nvars = nvars
        self.degrees = [tuple(d) for d in degrees]
        self.maps = [list(m) for m in maps]

    @property
    def length(self):
        return len(self.degrees) - 1

    def betti_table(self):
        table = {}
        for i, degs in enumerate(self.degrees):
            for d in degs:
                table[(i, d)] = table.get((i, d), 0) + 1
        return BettiTable(table)

    def is_minimal(self):
        """No differential has a nonzero constant entry."""
        return all(any(e) for m in self.maps for col in m for (_, e) in col)

    def matrices(self, ring):
        return [elems_to_matrix(m, ring, len(self.degrees[i])) for i, m in enumerate(self.maps)]


class BettiTable:
    """Graded Betti numbers beta_{i,j}: F_i = sum S(-j)^beta_{i,j}."""

    def __init__(self, entries):
        self.entries = {k: v for k, v in entries.items() if v}

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def regularity_bound(self):
        """max(j - i) over nonzero entries (the module's regularity)."""
        if not self.entries:
            return None
        return max(j - i for i, j in self.entries)

    def to_dict(self):
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items())}

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def pretty(self):
        if not self.entries:
            return "0"
        imax = max(i for i, _ in self.entries)
        lo = min(j - i for i, j in self.entries)
        hi = max(j - i for i, j in self.entries)
        lines = ["      " + " ".join(f"{i:>4}" for i in range(imax + 1))]
        for s in range(lo, hi + 1):
            row = []
            for i in range(imax + 1):
                v = self[(i, i + s)]
                row.append(f"{v if v else '.':>4}")
            lines.append(f"{s:>4}: " + " ".join(row))
        return "\n".join(lines)


class GradedModule:
    """Finitely presented graded module M = coker(relations) over
    Q[x_0..x_n]: the ambient free module has generator degrees ``degrees``
    (so twists are their negatives) and ``relations`` are homogeneous
    elements of it. This is the stand-in for a coherent sheaf on P^n.
    """

    def __init__(self, ring, degrees, relations=(), order="grevlex"):
        if isinstance(ring, int):
            ring = PolyRing(tuple(f"x{i}" for i in range(ring)))
        self.ring = ring
        self.nvars = ring.nfiber
        self.degrees = tuple(degrees)
        self.order = order
        rels = []
        for r in relations:
            r = {t: Fraction(v) for t, v in r.items() if v}
            if not r:
                continue
            for c, e in r:
                if not 0 <= c < len(self.degrees) or len(e) != self.nvars:
                    raise ValueError("relation does not live in the ambient free module")
            elem_degree(r, self.degrees)
            rels.append(r)
        self.relations = rels
        self._gb = None
        self._res = None
        self._hp = None
        self._sat = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def free(cls, ring, twists):
        return cls(ring, [-a for a in twists])

    @classmethod
    def from_matrix(cls, ring, target_twists, matrix, order="grevlex"):
        return cls(ring, [-a for a in target_twists], columns_to_elems(matrix), order)

    @classmethod
    def quotient_ring(cls, ring, ideal_gens):
        """S / (ideal_gens) for MultiPolys in ``ring``."""
        return cls(ring, [0], [poly_to_elem(f) for f in ideal_gens])

    @classmethod
    def submodule(cls, ring, ambient_twists, gens, order="grevlex"):
        """The submodule of the free module generated by ``gens``, presented
        as the cokernel of its syzygies."""
        nv = ring.nfiber if isinstance(ring, PolyRing) else ring
        amb = [-a for a in ambient_twists]
        gens = [g for g in gens if g]
        gdeg = [elem_degree(g, amb) for g in gens]
        syz = kernel(gens, nv, amb, gdeg, order) if gens else []
        return cls(ring, gdeg, syz, order)

    # -- basic data ----------------------------------------------------------

    @property
    def twists(self):
        return tuple(-d for d in self.degrees)

    @property
    def rank(self):
        return len(self.degrees)

    @property
    def n(self):
        """Dimension of the projective space."""
        return self.nvars - 1

    def relation_degrees(self):
        return [elem_degree(r, self.degrees) for r in self.relations]

    def gb(self):
        if self._gb is None:
            self._gb = GroebnerBasis.compute(self.nvars, self.degrees, self.relations, self.order)
        return self._gb

    def relation_matrix(self):
        return elems_to_matrix(self.relations, self.ring, self.rank)

    def hilbert_function(self, d):
        return len(self.gb().standard_terms(d))

    def strand_basis(self, d):
        return self.gb().standard_terms(d)

    def free_resolution(self):
        if self._res is None:
            self._res = free_resolution(self)
        return self._res

    def betti_table(self):
        return self.free_resolution().betti_table()

    def hilbert_polynomial(self):
        if self._hp is None:
            res = self.free_resolution()
            hp = NumericalPolynomial()
            for i, degs in enumerate(res.degrees):
                part = free_module_hp(self.n, [-d for d in degs])
                hp = hp + part if i % 2 == 0 else hp - part
            self._hp = hp
        return self._hp

    def is_zero_module(self):
        leads = set(self.gb().leads)
        zero = (0,) * self.nvars
        return all((k, zero) in leads for k in range(self.rank))

    def saturate(self):
        if self._sat is None:
            self._sat = saturate(self)
        return self._sat

    def specialize_relations(self, fn):
        return GradedModule(self.ring, self.degrees, [fn(r) for r in self.relations], self.order)

    def canonical(self):
        return (self.ring.names, self.degrees, tuple(sorted(canonical_elem(r) for r in self.relations)))

    def __repr__(self):
        tw = ", ".join(f"S({a})" for a in self.twists)
        return f"GradedModule(coker -> {tw}, {len(self.relations)} relations)"


def free_resolution(M):
    """Minimal free resolution of a graded module: unit cancellation in the
    presentation, then iterated syzygies pruned to minimal generators."""
    nv = M.nvars
    degrees, rels = _minimize_presentation(M.degrees, M.relations)
    rels = minimal_generators(rels, nv, degrees)
    all_degrees = [tuple(degrees)]
    maps = []
    cur_deg, cur = list(degrees), rels
    while cur:
        maps.append(cur)
        src = [elem_degree(c, cur_deg) for c in cur]
        all_degrees.append(tuple(src))
        syz = kernel(cur, nv, cur_deg, src, M.order)
        cur = minimal_generators(syz, nv, src)
        cur_deg = src
        if len(maps) > nv + 1:
            raise RuntimeError("resolution longer than the syzygy theorem allows")
    return FreeResolution(nv, all_degrees, maps)


def saturate(M):
    """The quotient of the ambient free module by N : (x_0..x_n)^infinity,
    N the relation module: irrelevant torsion is removed."""
    sat = saturate_irrelevant(M.relations, M.nvars, M.degrees, M.order) if M.relations else []
    gb = GroebnerBasis.compute(M.nvars, M.degrees, sat, M.order)
    return GradedModule(M.ring, M.degrees, gb.elements, M.order)


def hilbert_function(M, d):
    return M.hilbert_function(d)


def hilbert_polynomial(M):
    return M.hilbert_polynomial()


def format_elem(f, ring, rank=None):
    """Column-vector text of an element."""
    rank = rank if rank is not None else 1 + max((c for c, _ in f), default=0)
    return "[" + ", ".join(format_terms(ring.names, elem_component(f, c)) for c in range(rank)) + "]"
