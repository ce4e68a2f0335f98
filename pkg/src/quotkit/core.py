"""Exact arithmetic: multivariate polynomials over Q, polynomial matrices,
rational functions in one variable t, and sparse linear algebra over Q.

Rationals are :class:`fractions.Fraction` throughout; nothing in the package
ever touches floating point.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from itertools import combinations

Rational = Fraction


def as_rational(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot coerce {c!r} to a rational")


def format_rational(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# --------------------------------------------------------------------------
# polynomial rings and polynomials


class PolyRing:
    """Ordered variable list; the first ``nfiber`` variables are fiber
    variables ("x" role), the rest are base variables ("y" role)."""

    __slots__ = ("names", "nfiber", "_index")

    def __init__(self, names, nfiber=None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nfiber = len(self.names) if nfiber is None else nfiber
        self._index = {v: i for i, v in enumerate(self.names)}

    @classmethod
    def fiber_base(cls, fiber, base=()):
        return cls(tuple(fiber) + tuple(base), nfiber=len(fiber))

    @property
    def nvars(self):
        return len(self.names)

    @property
    def fiber_names(self):
        return self.names[: self.nfiber]

    @property
    def base_names(self):
        return self.names[self.nfiber :]

    def role(self, i):
        return "x" if i < self.nfiber else "y"

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in ring {self.names}") from None

    def gen(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return MultiPoly(self, {tuple(e): Fraction(1)})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def const(self, c):
        return MultiPoly.constant(self, c)

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return MultiPoly.constant(self, 1)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.nfiber == other.nfiber
        )

    def __hash__(self):
        return hash((self.names, self.nfiber))

    def __repr__(self):
        if self.nfiber == self.nvars:
            return f"PolyRing({', '.join(self.names)})"
        return f"PolyRing({', '.join(self.fiber_names)} over {', '.join(self.base_names)})"


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def format_monomial(names, exps):
    parts = []
    for v, e in zip(names, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_terms(names, terms):
    """Canonical text for a term map: grevlex-descending, ``3/2*x0^2*x1 - x2``."""
    if not terms:
        return "0"
    out = []
    for exps in sorted(terms, key=_grevlex_key, reverse=True):
        c = terms[exps]
        mono = format_monomial(names, exps)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


class MultiPoly:
    """Sparse polynomial: exponent tuple -> nonzero Fraction.

    Treated as immutable once built.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms=None):
        self.ring = ring
        if terms:
            self.terms = {e: Fraction(c) for e, c in terms.items() if c != 0}
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def constant(cls, ring, c):
        c = as_rational(c)
        if c == 0:
            return cls(ring, {})
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def monomial(cls, ring, exps, c=1):
        return cls(ring, {tuple(exps): as_rational(c)})

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return MultiPoly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return MultiPoly(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = MultiPoly.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            if other.is_constant() and not other.is_zero():
                other = other.constant_value()
            else:
                return self.exact_div(other)
        c = as_rational(other)
        if c == 0:
            raise ZeroDivisionError("division by zero polynomial")
        return MultiPoly(self.ring, {e: v / c for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.ring.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (
            len(self.terms) == 1 and not any(next(iter(self.terms)))
        )

    def constant_value(self):
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def x_degrees(self):
        """Set of degrees in the fiber variables over all terms."""
        k = self.ring.nfiber
        return {sum(e[:k]) for e in self.terms}

    def is_x_homogeneous(self):
        return len(self.x_degrees()) <= 1

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return sorted(used)

    def evaluate(self, point):
        """Evaluate at a full point (sequence in ring order)."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, a in zip(point, e):
                if a:
                    v *= Fraction(x) ** a
            total += v
        return total

    def substitute(self, values, target):
        """Substitute variables by elements of ``target``.

        ``values`` maps a variable index to a MultiPoly in ``target`` or a
        number; every variable of self must be mapped unless it is absent
        from all terms.
        """
        result = target.zero()
        cache = {}
        for e, c in self.terms.items():
            term = MultiPoly.constant(target, c)
            for i, a in enumerate(e):
                if not a:
                    continue
                key = (i, a)
                if key not in cache:
                    v = values[i]
                    if not isinstance(v, MultiPoly):
                        v = MultiPoly.constant(target, v)
                    cache[key] = v ** a
                term = term * cache[key]
            result = result + term
        return result

    def lex_lead(self):
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, other):
        """Quotient of an exact division; raises ValueError otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = other.lex_lead()
        rem = MultiPoly(self.ring, self.terms)
        quo = {}
        while rem.terms:
            e, c = rem.lex_lead()
            if any(a < b for a, b in zip(e, le)):
                raise ValueError("polynomial division is not exact")
            q = tuple(a - b for a, b in zip(e, le))
            qc = c / lc
            quo[q] = quo.get(q, 0) + qc
            rem = rem - MultiPoly(self.ring, {q: qc}) * other
        return MultiPoly(self.ring, quo)

    def __str__(self):
        return format_terms(self.ring.names, self.terms)

    def __repr__(self):
        return f"MultiPoly({self})"


# --------------------------------------------------------------------------
# determinants and minors


def _is_zero(a):
    return a == 0


def _exact_div(a, b):
    if isinstance(a, MultiPoly):
        return a.exact_div(b) if isinstance(b, MultiPoly) else a / b
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ValueError("inexact integer division")
        return q
    return a / b


def _cofactor_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        a = m[0][j]
        if _is_zero(a):
            continue
        sub = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = a * _cofactor_det(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return m[0][0] * 0
    return total


def _bareiss_det(m):
    a = [list(row) for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[0][0] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det(m):
    """Exact determinant: cofactor expansion up to 4x4, Bareiss above."""
    m = [list(row) for row in m]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n <= 4:
        return _cofactor_det(m)
    return _bareiss_det(m)


class PolyMatrix:
    """Rectangular grid of MultiPoly entries over one ring."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring, entries):
        self.ring = ring
        rows = []
        width = None
        for row in entries:
            row = tuple(
                e if isinstance(e, MultiPoly) else MultiPoly.constant(ring, e) for e in row
            )
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged matrix")
            rows.append(row)
        self.entries = tuple(rows)

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        return cls(ring, [[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j):
        return [row[j] for row in self.entries]

    def transpose(self):
        return PolyMatrix(self.ring, list(zip(*self.entries)) if self.entries else [])

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.ring.zero()
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.terms:
                        acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def evaluate(self, point):
        return [[e.evaluate(point) for e in row] for row in self.entries]

    def map(self, fn, ring=None):
        return PolyMatrix(ring or self.ring, [[fn(e) for e in row] for row in self.entries])

    def minor(self, rowset, colset):
        return minor(self, rowset, colset)

    def minors(self, k):
        """All k x k minors, rows and columns in lexicographic subset order."""
        return [
            self.minor(rs, cs)
            for rs in combinations(range(self.rows), k)
            for cs in combinations(range(self.cols), k)
        ]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries) + "]"

    def __repr__(self):
        return f"PolyMatrix({self})"


def minor(m, rowset, colset):
    """Determinant of the submatrix on the given (0-based) rows and columns."""
    rowset, colset = list(rowset), list(colset)
    if len(rowset) != len(colset):
        raise ValueError("minor needs equally many rows and columns")
    grid = m.entries if isinstance(m, PolyMatrix) else m
    nrows = len(grid)
    ncols = len(grid[0]) if grid else 0
    for i in rowset:
        if not 0 <= i < nrows:
            raise IndexError(f"row index {i} out of range")
    for j in colset:
        if not 0 <= j < ncols:
            raise IndexError(f"column index {j} out of range")
    sub = [[grid[i][j] for j in colset] for i in rowset]
    if not sub:
        if isinstance(m, PolyMatrix):
            return m.ring.one()
        return Fraction(1)
    return det(sub)


# --------------------------------------------------------------------------
# dense matrices over a field (Fraction or RationalFunction entries)


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = 0
            for t in range(k):
                x = a[i][t]
                if not _is_zero(x):
                    acc = acc + x * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_identity(n, one=1):
    return [[one if i == j else one * 0 for j in range(n)] for i in range(n)]


def mat_inverse(m):
    """Gauss-Jordan inverse over a field; raises ZeroDivisionError if singular."""
    n = len(m)
    a = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not _is_zero(a[r][col])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and not _is_zero(a[r][col]):
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def field_rank(m):
    a = [list(row) for row in m]
    if not a:
        return 0
    rank = 0
    ncols = len(a[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(a)) if not _is_zero(a[r][col])), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, len(a)):
            if not _is_zero(a[r][col]):
                f = a[r][col] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


# --------------------------------------------------------------------------
# sparse linear algebra over Q (rows are dicts column -> Fraction)


class Echelon:
    """Incrementally built semi-echelon basis of a row space over Q."""

    __slots__ = ("rows", "pivots")

    def __init__(self, rows=()):
        self.rows = []
        self.pivots = {}
        for r in rows:
            self.add(r)

    def reduce(self, vec):
        # a row only has entries at or after its pivot, so eliminating pivots
        # in increasing order never reintroduces one already cleared
        v = {k: c for k, c in vec.items() if c}
        piv = self.pivots
        heap = [k for k in v if k in piv]
        heapq.heapify(heap)
        while heap:
            p = heapq.heappop(heap)
            c = v.get(p)
            if not c:
                continue
            for k, a in piv[p].items():
                old = v.get(k)
                x = (old or 0) - c * a
                if x:
                    if old is None and k in piv:
                        heapq.heappush(heap, k)
                    v[k] = x
                elif old is not None:
                    del v[k]
        return v

    def add(self, vec):
        """Insert ``vec``; returns True when it was independent."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        c = v[p]
        row = {k: a / c for k, a in v.items()}
        self.rows.append((p, row))
        self.pivots[p] = row
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.rows)

    def rref(self):
        """Fully reduced rows sorted by pivot column (a canonical basis)."""
        rows = sorted(self.rows, key=lambda pr: pr[0])
        done = []
        for p, row in reversed(rows):
            r = dict(row)
            for q, other in done:
                c = r.get(q)
                if c:
                    for k, a in other.items():
                        x = r.get(k, 0) - c * a
                        if x:
                            r[k] = x
                        else:
                            r.pop(k, None)
            done.append((p, r))
        done.reverse()
        return [r for _, r in done]


def sparse_rank(rows):
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows, ncols):
    """Basis of {v : A v = 0} for A given by sparse rows."""
    red = Echelon(rows).rref()
    pivots = {min(r): r for r in red}
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = {free: Fraction(1)}
        for p, r in pivots.items():
            c = r.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


# --------------------------------------------------------------------------
# univariate rational functions in t


def _utrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _uadd(a, b):
    n = max(len(a), len(b))
    return _utrim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _uneg(a):
    return tuple(-x for x in a)


def _umul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _utrim(out)


def _udivmod(a, b):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lb
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = list(_utrim(a))
    return _utrim(q), _utrim(a)


def _umonic(a):
    lc = a[-1]
    return a if lc == 1 else tuple(x / lc for x in a)


def _ugcd(a, b):
    if len(a) == 1 or len(b) == 1:
        return (Fraction(1),) if a and b else _umonic(a or b) if (a or b) else ()
    # monic remainders keep the coefficients from growing
    while b:
        _, r = _udivmod(a, b)
        a, b = b, (_umonic(r) if r else r)
    if not a:
        return ()
    lc = a[-1]
    return tuple(x / lc for x in a)


def _uorder(a):
    for i, x in enumerate(a):
        if x:
            return i
    return math.inf


T_RING = PolyRing(("t",))


def _rf_product(a, b, c, d):
    """(a/b) * (c/d) with a/b and c/d already reduced."""
    if not a or not c:
        return RationalFunction(())
    # cancel across before multiplying so only coprime pieces meet
    g = _ugcd(a, d)
    if len(g) > 1:
        a, d = _udivmod(a, g)[0], _udivmod(d, g)[0]
    g = _ugcd(c, b)
    if len(g) > 1:
        c, b = _udivmod(c, g)[0], _udivmod(b, g)[0]
    num, den = _umul(a, c), _umul(b, d)
    lc = den[-1]
    if lc != 1:
        num = tuple(x / lc for x in num)
        den = tuple(x / lc for x in den)
    return RationalFunction._reduced(num, den)


class RationalFunction:
    """Element of Q(t), kept as num/den with gcd 1 and monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _utrim(Fraction(x) for x in num)
        den = _utrim(Fraction(x) for x in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (Fraction(1),)
            return
        g = _ugcd(num, den)
        if len(g) > 1:
            num, _ = _udivmod(num, g)
            den, _ = _udivmod(den, g)
        lc = den[-1]
        self.num = tuple(x / lc for x in num)
        self.den = tuple(x / lc for x in den)

    @classmethod
    def t(cls):
        return cls((0, 1))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return cls((x,))
        if isinstance(x, MultiPoly):
            if x.ring.nvars != 1:
                raise ValueError("expected a univariate polynomial")
            deg = max((e[0] for e in x.terms), default=0)
            coeffs = [Fraction(0)] * (deg + 1)
            for e, c in x.terms.items():
                coeffs[e[0]] = c
            return cls(coeffs)
        return NotImplemented

    @property
    def numerator(self):
        return MultiPoly(T_RING, {(i,): c for i, c in enumerate(self.num) if c})

    @property
    def denominator(self):
        return MultiPoly(T_RING, {(i,): c for i, c in enumerate(self.den) if c})

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(_uadd(self.num, other.num), self.den)
        return RationalFunction(
            _uadd(_umul(self.num, other.den), _umul(other.num, self.den)),
            _umul(self.den, other.den),
        )

    __radd__ = __add__

    @classmethod
    def _reduced(cls, num, den):
        out = cls.__new__(cls)
        out.num, out.den = num, den
        return out

    def __neg__(self):
        return RationalFunction._reduced(_uneg(self.num), self.den)

    def __sub__(self, other):
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        return _rf_product(self.num, self.den, other.num, other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(t)")
        return _rf_product(self.num, self.den, other.den, other.num)

    def __rtruediv__(self, other):
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k):
        if k < 0:
            return RationalFunction((1,)) / (self ** (-k))
        out = RationalFunction((1,))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return not self.num

    def valuation(self):
        return t_adic_valuation(self)

    def at_zero(self):
        """Value at t = 0; only defined when the valuation is >= 0."""
        if _uorder(self.den) > 0:
            raise ValueError("rational function has a pole at t = 0")
        if not self.num:
            return Fraction(0)
        return self.num[0] / self.den[0]

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num[0] if self.num else Fraction(0)

    def __str__(self):
        n = str(self.numerator)
        if len(self.den) == 1:
            return n
        d = str(self.denominator)
        if len(self.num) > 1 and len([c for c in self.num if c]) > 1:
            n = f"({n})"
        if len([c for c in self.den if c]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({self})"


def t_adic_valuation(f):
    """Order of vanishing at t = 0; ``math.inf`` for the zero function."""
    f = RationalFunction.coerce(f)
    if not f.num:
        return math.inf
    return _uorder(f.num) - _uorder(f.den)
