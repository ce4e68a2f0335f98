"""``quotkit`` entry point: argument handling, dispatch, JSON output, cache
and exit codes (0 ok, 1 other failure, 2 parse error, 3 precondition
violated, 4 resource cap hit)."""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .. import __version__
from ..core import MultiPoly, PolyMatrix, PolyRing, RationalFunction, format_terms
from ..errors import ParseError, QuotkitError, RefineCapExceeded
from ..flattening import FamilyPresentation, fitting_ideal, fitting_ideals, hilbert_stratification, rank_strata
from ..grassmann import all_subsets, dvr_limit, normalize, plucker, transition
from ..groebner import GradedModule
from ..numpoly import NumericalPolynomial
from ..quotgrass import (
    GrassSectionPoint,
    KernelFamily,
    QuotientDatum,
    ambient_basis,
    grass_point_of_quotient,
    quot_stratum,
    quotient_from_grass_point,
    quotients_agree,
)
from ..regularity import castelnuovo_checks, cech, is_m_regular, mumford_bound, regularity
from .cache import ResultCache, cache_key
from .parser import format_document, parse

COMMANDS = {
    "grass": ("normalize", "transition", "plucker", "limit"),
    "gb": ("basis", "resolve", "betti", "hilb"),
    "reg": ("cohomology", "regularity", "mumford-bound", "check"),
    "flat": ("fitting", "strata", "stratify"),
    "quot": ("embed", "recover", "stratum"),
}

# commands that need no input document
STANDALONE = {("reg", "mumford-bound")}


class CapFlagged(Exception):
    """Carries a finished result whose computation hit a soft cap."""

    def __init__(self, result, message):
        super().__init__(message)
        self.result = result


# --------------------------------------------------------------------------
# value formatting


def num(x):
    if isinstance(x, RationalFunction):
        if x.is_constant():
            x = x.constant_value()
        else:
            return str(x)
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def grid(rows):
    return [[num(x) for x in row] for row in rows]


# --------------------------------------------------------------------------
# document objects -> library objects


def fiber_ring(doc):
    return PolyRing(doc.ring.fiber_names)


def to_module(doc, decl, order):
    R = fiber_ring(doc)
    k = doc.ring.nfiber
    rels = []
    for j in range(decl.matrix.cols):
        f = {}
        for i in range(decl.matrix.rows):
            for e, c in decl.matrix[i, j].terms.items():
                f[(i, e[:k])] = c
        rels.append(f)
    return GradedModule(R, [-a for a in decl.target], rels, order)


def to_family(doc, decl):
    return FamilyPresentation.from_matrix(doc.ring, decl.target, decl.matrix)


def to_base_matrix(doc, M):
    """Matrix over the base variables (or over all variables when the ring
    has no base part)."""
    ring = doc.ring
    if not ring.base_names:
        flat = PolyRing(ring.names)
        return PolyMatrix(flat, [[MultiPoly(flat, e.terms) for e in row] for row in M.entries])
    base = PolyRing(ring.base_names)
    k = ring.nfiber
    rows = []
    for row in M.entries:
        out = []
        for e in row:
            if any(any(x[:k]) for x in e.terms):
                raise ParseError("matrix entries must use base variables only")
            out.append(MultiPoly(base, {x[k:]: c for x, c in e.terms.items()}))
        rows.append(out)
    return PolyMatrix(base, rows)


def pick(doc, args, kind):
    name = getattr(args, kind, None)
    if name:
        return name, doc.get(name, kind)
    return doc.first(kind)


def grass_matrix(doc, args):
    _, g = pick(doc, args, "grass")
    return g


def _rational_grid(g):
    rows = []
    for row in g.entries:
        if all(x.is_constant() for x in row):
            rows.append([x.constant_value() for x in row])
        else:
            return [list(row) for row in g.entries]
    return rows


def parse_subset(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"bad subset {text!r}") from None


def parse_range(text):
    try:
        if ".." in text:
            a, b = text.split("..")
            return list(range(int(a), int(b) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"bad degree range {text!r}") from None


def parse_hp(text):
    try:
        return NumericalPolynomial(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise ParseError(f"bad Hilbert polynomial {text!r}") from None


# --------------------------------------------------------------------------
# commands


def cmd_grass(cmd, doc, args):
    g = grass_matrix(doc, args)
    M = _rational_grid(g)
    if cmd == "limit":
        J, _, X0 = dvr_limit(g.entries)
        return {"chart": list(J), "limit_t0": grid(X0.X)}
    p = normalize(M)
    if cmd == "normalize":
        return {"chart": list(p.I), "X": grid(p.X)}
    if cmd == "transition":
        if not args.to:
            raise ParseError("transition needs --to")
        q = transition(p, parse_subset(args.to))
        return {"chart": list(q.I), "X": grid(q.X)}
    c = plucker(p)
    return {
        "subsets": [list(K) for K in all_subsets(p.r, p.d)],
        "coords": [num(x) for x in c.vector()],
    }


def _module(doc, args):
    _, decl = pick(doc, args, "module")
    return to_module(doc, decl, args.order)


def cmd_gb(cmd, doc, args):
    M = _module(doc, args)
    if cmd == "basis":
        gb = M.gb()
        return {"order": args.order, "basis": [_elem(g, M.ring, M.rank) for g in gb.elements]}
    if cmd == "resolve":
        res = M.free_resolution()
        return {
            "degrees": [list(d) for d in res.degrees],
            "maps": [[_elem(col, M.ring, len(res.degrees[i])) for col in m] for i, m in enumerate(res.maps)],
        }
    if cmd == "betti":
        table = M.betti_table()
        return {"betti": table.to_dict(), "_pretty": table.pretty()}
    top = args.max_degree if args.max_degree is not None else 5
    return {
        "hilbert_polynomial": M.hilbert_polynomial().to_list(),
        "hilbert_function": [M.hilbert_function(d) for d in range(top + 1)],
    }


def _elem(f, ring, rank):
    """Module element as a list of component polynomials."""
    return [format_terms(ring.names, {e: v for (k, e), v in f.items() if k == c}) for c in range(rank)]


def cmd_reg(cmd, doc, args):
    if cmd == "mumford-bound":
        if args.p is None or args.n is None or args.hp is None:
            raise ParseError("mumford-bound needs -p, -n and --hp")
        return {"bound": mumford_bound(args.p, args.n, parse_hp(args.hp))}
    M = _module(doc, args)
    cap = args.cech_cap
    if cmd == "regularity":
        return {"regularity": regularity(M, cap)}
    if cmd == "cohomology":
        degrees = parse_range(args.degrees) if args.degrees else list(range(-2, 3))
        cx = cech(M, cap)
        return {"cohomology": {str(d): list(cx.cohomology(d)) for d in degrees}}
    if args.r is None:
        raise ParseError("check needs -r")
    rep = castelnuovo_checks(M, args.r, cap)
    out = {"m_regular": is_m_regular(M, args.r, cap)}
    out.update(rep.to_dict())
    return out


def cmd_flat(cmd, doc, args):
    if cmd == "stratify":
        _, decl = pick(doc, args, "family")
        F = to_family(doc, decl)
        N = args.N if args.N is not None else 0
        strat = hilbert_stratification(F, N, args.refine_cap)
        result = {"N": N, "capped": strat.capped, "strata": strat.to_list()}
        if strat.capped:
            raise CapFlagged(result, "refinement cap reached before the ideals stabilized")
        return result
    _, M = pick(doc, args, "matrix")
    psi = to_base_matrix(doc, M)
    if cmd == "fitting":
        if args.k is not None:
            return {"k": args.k, "ideal": fitting_ideal(psi, args.k).to_strings()}
        return {"fitting": {str(k - 1): I.to_strings() for k, I in enumerate(fitting_ideals(psi))}}
    return {"strata": [s.to_dict() for s in rank_strata(psi)]}


def cmd_quot(cmd, doc, args):
    if cmd == "embed":
        M = _module(doc, args)
        if any(M.degrees):
            raise ParseError("embed needs a quotient of S^p (all target twists 0)")
        q = QuotientDatum(M.rank, M.n, M.relations, M.ring)
        r = args.r
        if r is None:
            bound = M.betti_table().regularity_bound()
            r = max(0, (bound if bound is not None else 0) + (1 if M.relations else 0))
        g = grass_point_of_quotient(q, r)
        out = g.to_dict()
        back = quotient_from_grass_point(g, ring=M.ring)
        out["hilbert_polynomial"] = q.hilbert_polynomial.to_list()
        out["roundtrip"] = quotients_agree(q, back, r)
        return out
    _, K = pick(doc, args, "matrix")
    if args.r is None:
        raise ParseError(f"{cmd} needs -r")
    p = args.p or 1
    if cmd == "recover":
        R = fiber_ring(doc)
        n = R.nvars - 1
        basis = ambient_basis(p, n, args.r)
        rows = []
        for row in K.entries:
            if len(row) != len(basis):
                raise ParseError(f"kernel rows need {len(basis)} entries")
            if not all(e.is_constant() or e.is_zero() for e in row):
                raise ParseError("kernel rows must be rational numbers")
            rows.append([e.constant_value() if e.terms else Fraction(0) for e in row])
        g = GrassSectionPoint(args.r, p, n, basis, [], rows)
        q = quotient_from_grass_point(g, ring=R)
        return {
            "kernel": [_elem(f, R, p) for f in q.kernel],
            "hilbert_polynomial": q.hilbert_polynomial.to_list(),
        }
    if args.hp is None:
        raise ParseError("stratum needs --hp")
    base = to_base_matrix(doc, K)
    fam = KernelFamily(p, doc.ring.nfiber - 1, args.r, [list(row) for row in base.entries], base.ring.names)
    s = quot_stratum(fam, parse_hp(args.hp), args.N, args.refine_cap)
    return s.to_dict()


HANDLERS = {"grass": cmd_grass, "gb": cmd_gb, "reg": cmd_reg, "flat": cmd_flat, "quot": cmd_quot}


# --------------------------------------------------------------------------
# argument parsing and the run loop


def build_parser():
    ap = argparse.ArgumentParser(prog="quotkit", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"quotkit {__version__}")
    groups = ap.add_subparsers(dest="group", required=True)
    for group, cmds in COMMANDS.items():
        gp = groups.add_parser(group)
        sub = gp.add_subparsers(dest="command", required=True)
        for c in cmds:
            sp = sub.add_parser(c)
            _common(sp)
    return ap


def _common(sp):
    sp.add_argument("-i", "--input", help="input .qk file ('-' for stdin)")
    sp.add_argument("--module")
    sp.add_argument("--family")
    sp.add_argument("--matrix")
    sp.add_argument("--grass")
    sp.add_argument("--to", help="target chart, e.g. 2,3")
    sp.add_argument("-p", type=int)
    sp.add_argument("-n", type=int)
    sp.add_argument("-r", type=int)
    sp.add_argument("-k", type=int)
    sp.add_argument("-N", type=int)
    sp.add_argument("--hp", help="binomial-basis coefficients, e.g. 1,1")
    sp.add_argument("--degrees", help="a..b or a,b,c")
    sp.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--refine-cap", type=int)
    sp.add_argument("--cech-cap", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--pretty", action="store_true")
    sp.add_argument("--no-cache", action="store_true")
    sp.add_argument("--verify-cache", action="store_true", help="recompute and compare with the cached entry")


PARAMS = ("module", "family", "matrix", "grass", "to", "p", "n", "r", "k", "N", "hp", "degrees",
          "order", "max_degree", "refine_cap", "cech_cap", "seed")


def render(result, pretty):
    shown = {k: v for k, v in result.items() if not k.startswith("_")}
    if pretty:
        if "_pretty" in result:
            return result["_pretty"] + "\n"
        return json.dumps(shown, indent=2) + "\n"
    return json.dumps(shown) + "\n"


def _read_input(path):
    if path is None:
        return None
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    random.seed(args.seed)
    key = (args.group, args.command)
    try:
        text = _read_input(args.input)
        if text is None and key not in STANDALONE:
            raise ParseError("this command needs an input document (-i)")
        doc = parse(text) if text is not None else None
        canonical = format_document(doc) if doc is not None else ""
        params = {k: getattr(args, k) for k in PARAMS}
        ckey = cache_key(f"{args.group} {args.command}", canonical, params, __version__)
        cache = None if args.no_cache else ResultCache()
        cached = cache.get(ckey) if cache is not None else None
        if cached is not None and not args.verify_cache:
            payload = json.loads(cached)
        else:
            code, note = 0, None
            try:
                result = HANDLERS[args.group](args.command, doc, args)
            except CapFlagged as flagged:
                result, code, note = flagged.result, RefineCapExceeded.exit_code, str(flagged)
            payload = {"code": code, "result": result, "note": note}
            if cached is not None and json.dumps(payload) != cached:
                raise QuotkitError("cached entry differs from recomputation")
            if cache is not None and cached is None:
                cache.put(ckey, json.dumps(payload))
        if payload.get("note"):
            print(f"quotkit: {payload['note']}", file=stderr)
        stdout.write(render(payload["result"], args.pretty))
        return payload["code"]
    except QuotkitError as exc:
        print(f"quotkit: {type(exc).__name__}: {exc}", file=stderr)
        return exc.exit_code
    except (ValueError, ZeroDivisionError) as exc:
        print(f"quotkit: invalid input: {exc}", file=stderr)
        return ParseError.exit_code
    except OSError as exc:
        print(f"quotkit: {exc}", file=stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
