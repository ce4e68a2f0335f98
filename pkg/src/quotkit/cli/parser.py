"""Reader and printer for ``.qk`` input documents.

Grammar, whitespace-insensitive, ``#`` starts a line comment::

    document  := statement*
    statement := ring | poly | matrix | module | family | grass
    ring      := "ring" vars ["over" vars] ";"
    vars      := NAME ".." NAME | NAME ("," NAME)*
    poly      := "poly" NAME "=" expr ";"
    matrix    := "matrix" NAME "=" grid ";"
    module    := "module" NAME "=" "coker" free "->" free ["by" grid] ";"
    family    := "family" NAME "=" "coker" free "->" free ["by" grid] ";"
    grass     := "grass" [NAME "="] "r" "=" INT "d" "=" INT grid ";"
    free      := "0" | summand ("+" summand)*
    summand   := "S" ["(" ["-"] INT ")"] ["^" INT]
    grid      := "[" [row ("," row)*] "]"
    row       := "[" [expr ("," expr)*] "]"
    expr      := ["+" | "-"] term (("+" | "-") term)*
    term      := factor (("*" | "/") factor)*
    factor    := atom ["^" INT]
    atom      := INT | NAME | "(" expr ")" | "-" atom

Module entries may use fibre variables only, family entries fibre and base
variables; grass entries live in Q(t).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..core import MultiPoly, PolyMatrix, PolyRing, RationalFunction, format_terms
from ..errors import ParseError

TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<sym>\.\.|->|[;=\[\],()^*/+\-])"
)

KEYWORDS = {"ring", "over", "poly", "matrix", "module", "family", "grass", "coker", "by"}


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text):
    out = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind not in ("ws", "comment"):
            out.append(Token(kind, s, line, col))
        nl = s.count("\n")
        if nl:
            line += nl
            col = len(s) - s.rfind("\n")
        else:
            col += len(s)
        pos = m.end()
    out.append(Token("eof", "", line, col))
    return out


# --------------------------------------------------------------------------
# document objects


@dataclass
class ModuleDecl:
    """coker(source -> target); twists listed per summand generator."""

    kind: str
    source: tuple
    target: tuple
    matrix: PolyMatrix

    def canonical(self):
        return (self.kind, self.source, self.target, _matrix_canonical(self.matrix))


@dataclass
class GrassDecl:
    r: int
    d: int
    entries: tuple

    def canonical(self):
        return ("grass", self.r, self.d, tuple(tuple(x for x in row) for row in self.entries))


@dataclass
class Document:
    ring: PolyRing = None
    objects: dict = field(default_factory=dict)
    spans: dict = field(default_factory=dict)

    def get(self, name, kind=None):
        if name not in self.objects:
            raise ParseError(f"no object named {name!r} in the document")
        obj = self.objects[name]
        if kind is not None and _kind(obj) != kind:
            raise ParseError(f"{name!r} is a {_kind(obj)}, expected a {kind}")
        return obj

    def first(self, kind):
        for name, obj in self.objects.items():
            if _kind(obj) == kind:
                return name, obj
        raise ParseError(f"the document declares no {kind}")

    def canonical(self):
        ring = None if self.ring is None else (self.ring.names, self.ring.nfiber)
        objs = tuple((name, _canonical(obj)) for name, obj in self.objects.items())
        return (ring, objs)


def _kind(obj):
    if isinstance(obj, MultiPoly):
        return "poly"
    if isinstance(obj, PolyMatrix):
        return "matrix"
    if isinstance(obj, GrassDecl):
        return "grass"
    return obj.kind


def _matrix_canonical(m):
    return (m.rows, m.cols, tuple(tuple(tuple(sorted(e.terms.items())) for e in row) for row in m.entries))


def _canonical(obj):
    if isinstance(obj, MultiPoly):
        return ("poly", tuple(sorted(obj.terms.items())))
    if isinstance(obj, PolyMatrix):
        return ("matrix", _matrix_canonical(obj))
    return obj.canonical()


# --------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0
        self.doc = Document()

    # token helpers

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def peek(self, text):
        return self.tok.text == text and self.tok.kind != "eof"

    def accept(self, text):
        if self.peek(text):
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.peek(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        self.i += 1

    def name(self):
        t = self.tok
        if t.kind != "name":
            raise self.error(f"expected a name, found {t.text or 'end of input'!r}")
        self.i += 1
        return t.text

    def integer(self):
        neg = self.accept("-")
        t = self.tok
        if t.kind != "num":
            raise self.error(f"expected an integer, found {t.text or 'end of input'!r}")
        self.i += 1
        return -int(t.text) if neg else int(t.text)

    # statements

    def document(self):
        while self.tok.kind != "eof":
            t = self.tok
            if t.kind != "name" or t.text not in KEYWORDS - {"over", "coker", "by"}:
                raise self.error(f"expected a declaration, found {t.text!r}")
            getattr(self, "decl_" + t.text)()
        return self.doc

    def _declare(self, name, obj, tok):
        if name in self.doc.objects:
            raise ParseError(f"{name!r} declared twice", tok.line, tok.col)
        self.doc.objects[name] = obj
        self.doc.spans[name] = (tok.line, tok.col)

    def _need_ring(self):
        if self.doc.ring is None:
            raise self.error("declare a ring before using polynomials")
        return self.doc.ring

    def varlist(self):
        first = self.name()
        if self.accept(".."):
            last_tok = self.tok
            last = self.name()
            m1 = re.fullmatch(r"(.*?)(\d+)", first)
            m2 = re.fullmatch(r"(.*?)(\d+)", last)
            if not (m1 and m2 and m1.group(1) == m2.group(1)) or int(m1.group(2)) > int(m2.group(2)):
                raise self.error(f"bad variable range {first}..{last}", last_tok)
            a, b = int(m1.group(2)), int(m2.group(2))
            return [f"{m1.group(1)}{k}" for k in range(a, b + 1)]
        names = [first]
        while self.accept(","):
            names.append(self.name())
        return names

    def decl_ring(self):
        tok = self.tok
        self.expect("ring")
        if self.doc.ring is not None:
            raise ParseError("ring declared twice", tok.line, tok.col)
        fiber = self.varlist()
        base = self.varlist() if self.accept("over") else []
        self.expect(";")
        names = fiber + base
        if len(set(names)) != len(names):
            raise ParseError("duplicate variable names", tok.line, tok.col)
        if "t" in names or "S" in names:
            raise ParseError("'t' and 'S' are reserved", tok.line, tok.col)
        self.doc.ring = PolyRing.fiber_base(fiber, base)

    def decl_poly(self):
        self.expect("poly")
        tok = self.tok
        name = self.name()
        self.expect("=")
        ring = self._need_ring()
        value = self.expr(_PolyDomain(ring, ring.nvars))
        self.expect(";")
        self._declare(name, value, tok)

    def decl_matrix(self):
        self.expect("matrix")
        tok = self.tok
        name = self.name()
        self.expect("=")
        ring = self._need_ring()
        rows = self.grid(_PolyDomain(ring, ring.nvars))
        self.expect(";")
        self._declare(name, PolyMatrix(ring, rows), tok)

    def decl_module(self):
        self._module_like("module")

    def decl_family(self):
        self._module_like("family")

    def _module_like(self, kind):
        self.expect(kind)
        tok = self.tok
        name = self.name()
        self.expect("=")
        self.expect("coker")
        ring = self._need_ring()
        source = self.free()
        self.expect("->")
        target_tok = self.tok
        target = self.free()
        if not target:
            raise self.error("target free module must be nonzero", target_tok)
        allowed = ring.nfiber if kind == "module" else ring.nvars
        if self.accept("by"):
            grid_tok = self.tok
            rows = self.grid(_PolyDomain(ring, allowed))
        else:
            grid_tok = self.tok
            rows = [[] for _ in target]
        self.expect(";")
        if len(rows) != len(target) or any(len(row) != len(source) for row in rows):
            raise ParseError(
                f"matrix should be {len(target)}x{len(source)} for this map", grid_tok.line, grid_tok.col
            )
        mat = PolyMatrix(ring, rows)
        for i, row in enumerate(mat.entries):
            for j, f in enumerate(row):
                want = target[i] - source[j]
                if f.terms and f.x_degrees() != {want}:
                    raise ParseError(
                        f"entry ({i + 1},{j + 1}) must be homogeneous of degree {want} in the fibre variables",
                        grid_tok.line,
                        grid_tok.col,
                    )
        self._declare(name, ModuleDecl(kind, tuple(source), tuple(target), mat), tok)

    def free(self):
        if self.tok.kind == "num" and self.tok.text == "0":
            self.i += 1
            return []
        twists = []
        while True:
            t = self.tok
            if t.text != "S":
                raise self.error("expected a free module S(a)^k")
            self.i += 1
            a = 0
            if self.accept("("):
                a = self.integer()
                self.expect(")")
            k = 1
            if self.accept("^"):
                k = self.integer()
                if k < 0:
                    raise self.error("negative rank")
            twists += [a] * k
            if not self.accept("+"):
                return twists

    def decl_grass(self):
        tok = self.tok
        self.expect("grass")
        name = "G"
        if self.tok.kind == "name" and self.toks[self.i + 1].text == "=" and self.tok.text != "r":
            tok = self.tok
            name = self.name()
            self.expect("=")
        self.expect("r")
        self.expect("=")
        r = self.integer()
        self.expect("d")
        self.expect("=")
        d = self.integer()
        grid_tok = self.tok
        rows = self.grid(_FunctionDomain())
        self.expect(";")
        if len(rows) != d or any(len(row) != r for row in rows):
            raise ParseError(f"grass point must be a {d}x{r} matrix", grid_tok.line, grid_tok.col)
        self._declare(name, GrassDecl(r, d, tuple(tuple(row) for row in rows)), tok)

    # expressions

    def grid(self, dom):
        self.expect("[")
        rows = []
        if not self.peek("]"):
            rows.append(self.row(dom))
            while self.accept(","):
                tok = self.tok
                rows.append(self.row(dom))
                if len(rows[-1]) != len(rows[0]):
                    raise self.error("rows of a matrix must have equal length", tok)
        self.expect("]")
        return rows

    def row(self, dom):
        self.expect("[")
        out = []
        if not self.peek("]"):
            out.append(self.expr(dom))
            while self.accept(","):
                out.append(self.expr(dom))
        self.expect("]")
        return out

    def expr(self, dom):
        neg = False
        if self.accept("-"):
            neg = True
        else:
            self.accept("+")
        value = self.term(dom)
        if neg:
            value = -value
        while True:
            if self.accept("+"):
                value = value + self.term(dom)
            elif self.accept("-"):
                value = value - self.term(dom)
            else:
                return value

    def term(self, dom):
        value = self.factor(dom)
        while True:
            if self.accept("*"):
                value = value * self.factor(dom)
            elif self.peek("/"):
                tok = self.tok
                self.i += 1
                value = dom.divide(value, self.factor(dom), self, tok)
            else:
                return value

    def factor(self, dom):
        base = self.atom(dom)
        if self.accept("^"):
            k = self.integer()
            if k < 0:
                raise self.error("negative exponents are not allowed")
            base = base**k
        return base

    def atom(self, dom):
        t = self.tok
        if self.accept("-"):
            return -self.atom(dom)
        if self.accept("("):
            v = self.expr(dom)
            self.expect(")")
            return v
        if t.kind == "num":
            self.i += 1
            return dom.const(int(t.text))
        if t.kind == "name":
            self.i += 1
            return dom.var(t.text, self, t)
        raise self.error(f"unexpected {t.text or 'end of input'!r} in expression")


class _PolyDomain:
    def __init__(self, ring, allowed):
        self.ring = ring
        self.allowed = allowed

    def const(self, c):
        return MultiPoly.constant(self.ring, c)

    def var(self, name, parser, tok):
        if name not in self.ring.names:
            raise ParseError(f"undeclared variable {name!r}", tok.line, tok.col)
        i = self.ring.index(name)
        if i >= self.allowed:
            raise ParseError(f"base variable {name!r} not allowed here", tok.line, tok.col)
        return self.ring.gen(i)

    def divide(self, a, b, parser, tok):
        if not b.is_constant() or b.is_zero():
            raise ParseError("can only divide by nonzero constants", tok.line, tok.col)
        return a / b.constant_value()


class _FunctionDomain:
    def const(self, c):
        return RationalFunction((c,))

    def var(self, name, parser, tok):
        if name != "t":
            raise ParseError(f"only 't' may appear in a grass point, found {name!r}", tok.line, tok.col)
        return RationalFunction.t()

    def divide(self, a, b, parser, tok):
        if b.is_zero():
            raise ParseError("division by zero", tok.line, tok.col)
        return a / b


def parse(text):
    return _Parser(text).document()


def parse_expression(text, ring):
    """Parse a single polynomial over ``ring``."""
    p = _Parser(text)
    p.doc.ring = ring
    v = p.expr(_PolyDomain(ring, ring.nvars))
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r} after expression")
    return v


def parse_matrix(text, ring):
    p = _Parser(text)
    rows = p.grid(_PolyDomain(ring, ring.nvars))
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r} after matrix")
    return PolyMatrix(ring, rows)


# --------------------------------------------------------------------------
# printer


def format_poly(f):
    return format_terms(f.ring.names, f.terms)


def format_grid(rows, fmt):
    return "[" + ", ".join("[" + ", ".join(fmt(x) for x in row) + "]" for row in rows) + "]"


def format_free(twists):
    if not twists:
        return "0"
    parts = []
    i = 0
    while i < len(twists):
        j = i
        while j < len(twists) and twists[j] == twists[i]:
            j += 1
        a, k = twists[i], j - i
        parts.append(("S" if a == 0 else f"S({a})") + f"^{k}")
        i = j
    return " + ".join(parts)


def format_document(doc):
    lines = []
    if doc.ring is not None:
        line = "ring " + ", ".join(doc.ring.fiber_names)
        if doc.ring.base_names:
            line += " over " + ", ".join(doc.ring.base_names)
        lines.append(line + ";")
    for name, obj in doc.objects.items():
        kind = _kind(obj)
        if kind == "poly":
            lines.append(f"poly {name} = {format_poly(obj)};")
        elif kind == "matrix":
            lines.append(f"matrix {name} = {format_grid(obj.entries, format_poly)};")
        elif kind == "grass":
            grid = format_grid(obj.entries, str)
            lines.append(f"grass {name} = r={obj.r} d={obj.d} {grid};")
        else:
            text = f"{kind} {name} = coker {format_free(obj.source)} -> {format_free(obj.target)}"
            if obj.source:
                text += " by " + format_grid(obj.matrix.entries, format_poly)
            lines.append(text + ";")
    return "\n".join(lines) + "\n"
