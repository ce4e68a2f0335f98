import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quotkit.cli.main import run
from quotkit.cli.parser import format_document, parse, parse_expression, parse_matrix
from quotkit.core import PolyMatrix, PolyRing
from quotkit.errors import ParseError

from oracles import monomials_oracle

P1 = "ring x0..x1;\nmodule M = coker 0 -> S^1;\n"
LIMIT = "ring x0;\ngrass r=2 d=1 [[1, 1/t]];\n"
JUMP = "ring x0..x1 over y;\nfamily F = coker S(-1)^2 -> S^1 by [[y*x0, y*x1]];\n"


@pytest.fixture
def cache(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("QUOTKIT_CACHE", str(d))
    return d


class Out:
    def __init__(self):
        self.text = ""

    def write(self, s):
        self.text += s

    def flush(self):
        pass


def call(args, text=None, tmp=None):
    if text is not None:
        f = Path(tmp) / "in.qk"
        f.write_text(text)
        args = args + ["-i", str(f)]
    out, err = Out(), Out()
    code = run(args, out, err)
    return code, out.text, err.text


class TestParser:
    def test_poly_example(self):
        R = PolyRing(("x0", "x1", "x2"))
        f = parse_expression("3/2*x0^2*x1 - x2", R)
        assert f.terms == {(2, 1, 0): Fraction(3, 2), (0, 0, 1): -1}

    def test_matrix_example(self):
        R = PolyRing(("x0",))
        assert parse_matrix("[[1,0],[0,1]]", R) == PolyMatrix.identity(R, 2)

    def test_module_example(self):
        doc = parse("ring x0..x1; module M = coker S(-1)^1 -> S^1 by [[x0]];")
        M = doc.get("M", "module")
        assert list(M.source) == [-1] and list(M.target) == [0]
        assert str(M.matrix[0, 0]) == "x0"

    def test_comments_and_whitespace(self):
        a = parse("ring x0 ,x1 ;  # comment\n poly f = x0 *x1;")
        b = parse("ring x0, x1; poly f = x0*x1;")
        assert format_document(a) == format_document(b)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as exc:
            parse("ring x0..x1;\npoly f = x0 + ;")
        assert exc.value.line == 2 and exc.value.column is not None

    def test_undeclared_variable(self):
        with pytest.raises(ParseError, match="undeclared"):
            parse("ring x0..x1; poly f = x0 + z;")

    def test_inconsistent_dimensions(self):
        with pytest.raises(ParseError):
            parse("ring x0..x1; module M = coker S(-1)^2 -> S^1 by [[x0]];")
        with pytest.raises(ParseError):
            parse("ring x0..x1; matrix A = [[1, 2], [3]];")

    def test_duplicate_name(self):
        with pytest.raises(ParseError):
            parse("ring x0; poly f = x0; poly f = 1;")

    def test_base_variables_rejected_in_modules(self):
        with pytest.raises(ParseError):
            parse("ring x0..x1 over y; module M = coker S(-1)^1 -> S^1 by [[y*x0]];")


coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@st.composite
def forms(draw, names, deg):
    nv = len(names)
    ms = monomials_oracle(nv, deg)
    chosen = draw(st.lists(st.sampled_from(ms), max_size=3, unique=True))
    parts = []
    for e in chosen:
        c = draw(coeffs)
        if c == 0:
            continue
        factors = [f"{n}^{k}" if k > 1 else n for n, k in zip(names, e) if k]
        parts.append("(" + str(c) + ")" + "".join("*" + f for f in factors))
    return " + ".join(parts) or "0"


@st.composite
def documents(draw):
    nf = draw(st.integers(1, 3))
    fib = [f"x{i}" for i in range(nf)]
    base = ["y"] if draw(st.booleans()) else []
    lines = ["ring " + ", ".join(fib) + (" over y" if base else "") + ";"]
    names = fib + base
    lines.append(f"poly f = {draw(forms(names, draw(st.integers(0, 3))))};")
    rows, cols = draw(st.integers(1, 2)), draw(st.integers(1, 2))
    grid = [[draw(forms(names, 1)) for _ in range(cols)] for _ in range(rows)]
    lines.append("matrix A = [" + ", ".join("[" + ", ".join(r) + "]" for r in grid) + "];")
    d = draw(st.integers(1, 2))
    m = draw(st.integers(1, 2))
    mgrid = [[draw(forms(fib, d)) for _ in range(m)] for _ in range(rows)]
    lines.append(
        f"module M = coker S(-{d})^{m} -> S^{rows} by ["
        + ", ".join("[" + ", ".join(r) + "]" for r in mgrid) + "];"
    )
    a, b = draw(st.integers(-3, 3)), draw(st.integers(1, 3))
    lines.append(f"grass G = r=2 d=1 [[{a} + t, 1/({b}*t + t^2)]];")
    return "\n".join(lines) + "\n"


@settings(max_examples=60, deadline=None)
@given(documents())
def test_print_parse_roundtrip(text):
    doc = parse(text)
    printed = format_document(doc)
    again = parse(printed)
    assert again.canonical() == doc.canonical()
    assert format_document(again) == printed


class TestCommands:
    def test_regularity(self, tmp_path, cache):
        assert call(["reg", "regularity"], P1, tmp_path) == (0, '{"regularity": 0}\n', "")

    def test_limit(self, tmp_path, cache):
        code, out, _ = call(["grass", "limit"], LIMIT, tmp_path)
        assert code == 0 and json.loads(out) == {"chart": [2], "limit_t0": [[0, 1]]}

    def test_mumford_bound(self, cache):
        assert call(["reg", "mumford-bound", "-p", "1", "-n", "1", "--hp", "0,1"]) == (0, '{"bound": 1}\n', "")

    def test_grass_commands(self, tmp_path, cache):
        doc = "ring x0;\ngrass G = r=4 d=2 [[1, 0, 2, 3], [0, 1, 5, 7]];\n"
        code, out, _ = call(["grass", "plucker"], doc, tmp_path)
        res = json.loads(out)
        assert code == 0 and res["coords"] == [1, 5, 7, -2, -3, -1]
        code, out, _ = call(["grass", "transition", "--to", "3,4"], doc, tmp_path)
        assert code == 0 and json.loads(out)["chart"] == [3, 4]
        code, out, _ = call(["grass", "normalize"], doc, tmp_path)
        assert json.loads(out) == {"chart": [1, 2], "X": [[1, 0, 2, 3], [0, 1, 5, 7]]}

    def test_gb_commands(self, tmp_path, cache):
        doc = "ring x0..x3;\nmodule C = coker S(-2)^3 -> S^1 by [[x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2]];\n"
        code, out, _ = call(["gb", "betti"], doc, tmp_path)
        assert json.loads(out) == {"betti": {"0,0": 1, "1,2": 3, "2,3": 2}}
        code, out, _ = call(["gb", "hilb", "--max-degree", "4"], doc, tmp_path)
        assert json.loads(out) == {"hilbert_polynomial": [1, 3], "hilbert_function": [1, 4, 7, 10, 13]}
        code, out, _ = call(["gb", "basis"], doc, tmp_path)
        assert code == 0 and len(json.loads(out)["basis"]) == 3
        code, out, _ = call(["gb", "resolve"], doc, tmp_path)
        assert json.loads(out)["degrees"] == [[0], [2, 2, 2], [3, 3]]
        code, out, _ = call(["gb", "betti", "--pretty"], doc, tmp_path)
        assert code == 0 and "." in out and "{" not in out

    def test_reg_commands(self, tmp_path, cache):
        code, out, _ = call(["reg", "cohomology", "--degrees=-3..0"], P1, tmp_path)
        assert json.loads(out) == {"cohomology": {"-3": [0, 2], "-2": [0, 1], "-1": [0, 0], "0": [1, 0]}}
        code, out, _ = call(["reg", "check", "-r", "0"], P1, tmp_path)
        assert json.loads(out) == {"m_regular": True, "mult_surjective": True, "globally_generated": True, "higher_vanishing": True}

    def test_flat_commands(self, tmp_path, cache):
        doc = "ring x0 over y;\nmatrix A = [[y]];\n"
        code, out, _ = call(["flat", "strata"], doc, tmp_path)
        assert json.loads(out)["strata"] == [
            {"label": 0, "closed": [], "excluded": [["y"]]},
            {"label": 1, "closed": ["y"], "excluded": []},
        ]
        code, out, _ = call(["flat", "fitting", "-k", "0"], doc, tmp_path)
        assert json.loads(out) == {"k": 0, "ideal": ["y"]}
        code, out, _ = call(["flat", "stratify", "-N", "1"], JUMP, tmp_path)
        res = json.loads(out)
        assert code == 0 and [s["label"] for s in res["strata"]] == [[], [1, 1]]

    def test_quot_commands(self, tmp_path, cache):
        doc = "ring x0..x1;\nmodule Q = coker S(-1)^1 -> S^1 by [[x0]];\n"
        code, out, _ = call(["quot", "embed", "-r", "2"], doc, tmp_path)
        res = json.loads(out)
        assert res["quotient"] == [[0, 0, 1]] and res["kernel"] == [[1, 0, 0], [0, 1, 0]]
        assert res["roundtrip"] is True and res["hilbert_polynomial"] == [1]
        code, out, _ = call(["quot", "recover", "-r", "1"], "ring x0..x1;\nmatrix K = [[1, 0]];\n", tmp_path)
        assert json.loads(out) == {"kernel": [["x0"]], "hilbert_polynomial": [1]}
        fam = "ring x0..x1 over y;\nmatrix K = [[y, y]];\n"
        code, out, _ = call(["quot", "stratum", "-r", "1", "--hp", "1,1"], fam, tmp_path)
        assert json.loads(out) == {"label": [1, 1], "closed": ["y"], "excluded": []}


class TestExitCodes:
    def test_success(self, tmp_path, cache):
        assert call(["reg", "regularity"], P1, tmp_path)[0] == 0

    def test_parse_error(self, tmp_path, cache):
        code, out, err = call(["reg", "regularity"], "ring x0..x1; module M = coker 0 -> S^1 by", tmp_path)
        assert code == 2 and out == "" and "line 1" in err

    def test_precondition_rank_deficient(self, tmp_path, cache):
        doc = "ring x0;\ngrass r=3 d=2 [[1, 2, 3], [2, 4, 6]];\n"
        code, _, err = call(["grass", "normalize"], doc, tmp_path)
        assert code == 3 and "RankDeficient" in err

    def test_precondition_outside_overlap(self, tmp_path, cache):
        doc = "ring x0;\ngrass r=2 d=1 [[1, 0]];\n"
        code, _, err = call(["grass", "transition", "--to", "2"], doc, tmp_path)
        assert code == 3 and "OutsideOverlap" in err

    def test_precondition_unbounded_regularity(self, tmp_path, cache):
        doc = "ring x0..x1;\nmodule P = coker S(-1)^1 -> S^1 by [[x0]];\n"
        assert call(["reg", "regularity"], doc, tmp_path)[0] == 3

    def test_stabilization_cap(self, tmp_path, cache):
        doc = "ring x0..x2;\nmodule M = coker 0 -> S^1;\n"
        code, _, err = call(["reg", "cohomology", "--degrees=-8", "--cech-cap", "2"], doc, tmp_path)
        assert code == 4 and "StabilizationFailure" in err

    def test_refine_cap(self, tmp_path, cache):
        code, out, err = call(["flat", "stratify", "-N", "1", "--refine-cap", "1"], JUMP, tmp_path)
        assert code == 4 and json.loads(out)["capped"] is True and "cap" in err

    def test_missing_file(self, cache):
        assert call(["reg", "regularity", "-i", "/nonexistent/x.qk"])[0] == 1


class TestCache:
    def test_warm_cold_identical(self, tmp_path, cache):
        doc = "ring x0..x3;\nmodule C = coker S(-2)^3 -> S^1 by [[x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2]];\n"
        cold = call(["reg", "cohomology", "--degrees=-2..2"], doc, tmp_path)
        assert list(cache.rglob("*.json"))
        warm = call(["reg", "cohomology", "--degrees=-2..2"], doc, tmp_path)
        bypass = call(["reg", "cohomology", "--degrees=-2..2", "--no-cache"], doc, tmp_path)
        assert cold == warm == bypass

    def test_flagged_result_replays_code_and_note(self, tmp_path, cache):
        args = ["flat", "stratify", "-N", "1", "--refine-cap", "1"]
        assert call(args, JUMP, tmp_path) == call(args, JUMP, tmp_path)

    def test_key_ignores_formatting(self, tmp_path, cache):
        call(["reg", "regularity"], P1, tmp_path)
        n = len(list(cache.rglob("*.json")))
        call(["reg", "regularity"], "ring x0 .. x1 ; # same\nmodule M = coker 0 -> S^1;", tmp_path)
        assert len(list(cache.rglob("*.json"))) == n

    def test_verify_cache(self, tmp_path, cache):
        args = ["reg", "regularity"]
        call(args, P1, tmp_path)
        assert call(args + ["--verify-cache"], P1, tmp_path)[0] == 0
        (entry,) = cache.rglob("*.json")
        entry.write_text(json.dumps({"code": 0, "result": {"regularity": 7}, "note": None}))
        assert call(args, P1, tmp_path)[1] == '{"regularity": 7}\n'
        code, _, err = call(args + ["--verify-cache"], P1, tmp_path)
        assert code == 1 and "differs" in err

    def test_console_script_is_deterministic(self, tmp_path):
        f = tmp_path / "c.qk"
        f.write_text(JUMP)
        env = dict(os.environ, QUOTKIT_CACHE=str(tmp_path / "c"))
        cmd = [sys.executable, "-m", "quotkit.cli.main", "flat", "stratify", "-N", "1", "-i", str(f)]
        outs = [subprocess.run(cmd, capture_output=True, text=True, env=env) for _ in range(2)]
        assert outs[0].returncode == outs[1].returncode == 0
        assert outs[0].stdout == outs[1].stdout
