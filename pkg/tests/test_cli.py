import io

import pytest

from mvlogic.cli import (
    GOLDEN,
    LogicFileError,
    golden_text,
    load_logic,
    parse_logic_text,
    parse_mv_text,
    run,
    serialize_logic,
    serialize_mv,
)
from mvlogic.logics import builtin
from mvlogic.mv import chain, is_isomorphic, product, two


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_files_match_builtins(name):
    m = parse_logic_text(golden_text(name))
    assert m == builtin(name)
    assert parse_logic_text(serialize_logic(m)) == m


@pytest.mark.parametrize("name", ["lukasiewicz:5", "godel:3", "post:3:1"])
def test_serialize_round_trip(name):
    m = builtin(name)
    assert parse_logic_text(serialize_logic(m)) == m


L3_SHORT = """\
logic tiny
values 0 1/2 1
designated 1
connective neg 1
  1 1/2
"""


@pytest.mark.parametrize(
    "text, message",
    [
        (L3_SHORT, "table size mismatch at line 5: expected 3 entries, got 2"),
        ("logic x\nvalues 0 1 1\n", "duplicate value 1 at line 2"),
        ("logic x\nvalues 0 1\n", "missing section 'designated'"),
        ("logic x\nvalues 0 1\ndesignated 1\nconnective neg 1\n", "expected 1 rows, got 0"),
        ("logic x\nvalues 0 1\ndesignated 7\n", "unknown value 7 at line 3"),
        ("frobnicate\n", "unknown keyword"),
    ],
)
def test_logic_file_errors(text, message):
    with pytest.raises(LogicFileError) as info:
        parse_logic_text(text)
    assert message in str(info.value)


def test_load_logic_from_path(tmp_path):
    path = tmp_path / "mine.logic"
    path.write_text(golden_text("belnap"), encoding="utf-8")
    assert load_logic(str(path)) == builtin("belnap")
    with pytest.raises(LogicFileError):
        load_logic(str(tmp_path / "missing.logic"))
    code, out, _ = call("check", "p & q |- p", "--logic", str(path), "--mode", "entails")
    assert code == 0


def test_mv_files():
    alg = product(two(), chain(3))
    again = parse_mv_text(serialize_mv(chain(4)))
    assert is_isomorphic(again, chain(4))
    assert len(alg) == 6
    with pytest.raises(LogicFileError, match="missing section 'neg'"):
        parse_mv_text("algebra a\nvalues 0 1\noplus\n  0 1\n  1 1\n")
    with pytest.raises(LogicFileError, match="M"):
        parse_mv_text("algebra a\nvalues 0 1\noplus\n  0 0\n  0 1\nneg\n  1 0\n")


def test_mv_file_on_the_command_line(tmp_path):
    path = tmp_path / "i4.mv"
    path.write_text(serialize_mv(chain(4)), encoding="utf-8")
    code, out, _ = call("mv", "classify", str(path))
    assert code == 0 and "simple: True" in out


def test_check_exit_codes():
    assert call("check", "p -> p", "--method", "tableau")[0] == 0
    code, out, _ = call("check", "p | ~p")
    assert code == 1 and "p=1/2" in out
    assert call("check", "p, p -> q |- q", "--method", "resolution")[0] == 0
    assert call("check", "p | ~p", "--logic", "classical", "--method", "sequent")[0] == 0
    assert call("check", "p | ~p", "--mode", "satisfiable")[0] == 0
    assert call("check", "p & ~p", "--mode", "satisfiable")[0] == 1
    assert call("check", "p & ~p", "--logic", "classical", "--mode", "satisfiable")[0] == 1


def test_usage_errors():
    assert call()[0] == 2
    assert call("check", "p ->")[0] == 2
    assert call("check", "p", "--logic", "nope")[0] == 2
    code, _, err = call("check", "p", "--logic", "godel:3", "--method", "resolution")
    assert code == 2 and "error" in err
    assert call("eval", "p -> q", "--val", "p=1")[0] == 2
    assert call("mv", "axioms", "Q7")[0] == 2


def test_bound_exit_code():
    big = " | ".join(f"a{i}" for i in range(18))
    assert call("check", big, "--logic", "classical")[0] == 3


def test_xcheck():
    code, out, _ = call("xcheck", "p | ~p")
    assert code == 1
    assert "countermodel p=1/2" in out and "agree" in out
    code, out, _ = call("xcheck", "p -> (q -> p)", "--logic", "classical")
    assert code == 0 and "nonclausal" in out


def test_eval():
    code, out, _ = call("eval", "p -> q", "--val", "p=1/2,q=0")
    assert code == 1 and out.strip() == "1/2"
    code, out, _ = call("eval", "~p")
    assert code == 0 and len(out.splitlines()) == 3


def test_normal_forms():
    code, out, _ = call("cnf", "--conn", "imp", "--value", "0")
    assert code == 0
    assert out.splitlines() == ["p:{1}", "q:{0}"]
    code, out, _ = call("cnf", "p -> (p -> ~p)")
    assert code == 0 and "p:{0,1/2}" in out
    code, out, _ = call("dnf", "--conn", "neg", "--sign", "0,1/2")
    assert code == 0 and out.strip()


def test_prove_and_verify(tmp_path):
    code, out, _ = call("prove", "p -> p")
    assert code == 0 and "by axiom" in out
    derivation = out.split("\n", 1)[1]
    path = tmp_path / "d.txt"
    path.write_text(derivation, encoding="utf-8")
    assert call("prove", "p -> p", "--verify", str(path))[:2] == (0, "accepted\n")
    path.write_text(derivation.replace("by axiom", "by weakening", 1), encoding="utf-8")
    code, out, _ = call("prove", "--verify", str(path))
    assert code == 1 and out.startswith("rejected at step")


def test_prove_resolution_and_verify(tmp_path):
    code, out, _ = call("prove", "p |- p | q", "--method", "resolution", "--logic", "classical")
    assert code == 0
    path = tmp_path / "r.txt"
    path.write_text(out.split("\n", 1)[1], encoding="utf-8")
    assert call("prove", "--method", "resolution", "--verify", str(path))[0] == 0


def test_hilbert_verify(tmp_path):
    path = tmp_path / "h.txt"
    path.write_text("1: p -> (q -> p) by Ax1\n", encoding="utf-8")
    assert call("prove", "--method", "hilbert", "--verify", str(path))[0] == 0
    path.write_text("1: p -> (p -> q) by Ax1\n", encoding="utf-8")
    code, out, _ = call("prove", "--method", "hilbert", "--verify", str(path))
    assert code == 1 and "line 1" in out


def test_synth():
    code, out, _ = call("synth", "--n", "3", "--table", "0 2 1")
    assert code == 0 and out.strip()
    assert call("synth", "--n", "3", "--table", "0 5 1")[0] == 2


def test_mv_subcommands():
    assert call("mv", "axioms", "I4")[0] == 0
    code, out, _ = call("mv", "classify", "2x2")
    assert "simple: False" in out and "center: {(0,0), (0,1), (1,0), (1,1)}" in out
    code, out, _ = call("mv", "ideals", "2xI3", "--generate", "(1,0)")
    assert out.strip() == "{(0,0), (1,0)}"
    code, out, _ = call("mv", "quotient", "2xI3", "--ideal", "(0,0);(1,0)")
    assert code == 0 and out.startswith("values (0,0) (0,1/2) (0,1)")
    assert call("mv", "order", "I5", "1/4")[1].strip() == "4"
    assert call("mv", "order", "chang", "(0,1)")[1].startswith("infinite")
    assert call("mv", "chang", "oplus", "(0,3)", "(1,-2)")[1].strip() == "(1,0)"
    assert call("mv", "chang-axioms", "--bound", "3")[0] == 0
    assert call("mv", "compile", "p + p")[1].strip() == "[0,1/2]: 2x+0 ; [1/2,1]: 0x+1"
    assert call("mv", "decide", "p + ~p")[0] == 0
    assert call("mv", "decide", "p | ~p")[0] == 1
    assert call("mv", "falsify", "p | ~p")[0] == 1


def test_logic_command():
    code, out, _ = call("logic", "--logic", "lukasiewicz:3")
    assert code == 0
    assert parse_logic_text(out) == builtin("lukasiewicz:3")
