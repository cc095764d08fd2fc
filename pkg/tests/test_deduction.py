from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import formulas
from mvlogic.core import App, Atom, decide, parse_formula
from mvlogic.deduction import (
    DerivationStep,
    Sequent,
    SequentDerivation,
    check_derivation,
    check_hilbert_proof,
    format_derivation,
    format_hilbert_proof,
    format_sequent,
    parse_derivation,
    parse_hilbert_proof,
    parse_sequent,
    sequent_decide,
    sf,
    to_sequent,
)
from mvlogic.deduction.sequents import check_valid_by_enumeration
from mvlogic.errors import FormulaSyntaxError, MVLogicError
from mvlogic.logics import builtin, lukasiewicz

L3 = lukasiewicz(3)
H = Fraction(1, 2)
p, q = Atom("p"), Atom("q")


def test_sequent_text():
    s = parse_sequent("p, q => p -> q => p", L3)
    assert s == Sequent([sf(p, 0), sf(q, 0), sf(App("imp", (p, q)), H), sf(p, 1)])
    assert format_sequent(s, L3) == "p, q => p -> q => p"
    assert parse_sequent(format_sequent(s, L3), L3) == s
    with pytest.raises(FormulaSyntaxError):
        parse_sequent("p => q", L3)
    with pytest.raises(MVLogicError):
        Sequent([p])


def test_to_sequent_places():
    s = to_sequent([q], p, L3)
    assert s == Sequent([sf(q, 0), sf(q, H), sf(p, 1)])


def test_identity_derivation():
    v = sequent_decide(to_sequent([], parse_formula("p -> p", L3), L3), L3)
    assert v.holds
    assert check_derivation(v.derivation, L3)
    text = format_derivation(v.derivation, L3)
    assert "intro imp@" in text and "by axiom" in text
    assert check_derivation(parse_derivation(text, L3), L3, goal=v.derivation.root.sequent)


def test_countermodel():
    v = sequent_decide(to_sequent([], parse_formula("p | ~p", L3), L3), L3)
    assert not v.holds and v.witness == {"p": H}


LOGICS = ["classical", "lukasiewicz:3", "lukasiewicz:4", "godel:3", "post:3", "post:4:2", "kleene-weak", "belnap"]


@pytest.mark.parametrize("name", LOGICS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_search_agrees_with_tables(name, data):
    m = builtin(name)
    prem = data.draw(st.lists(formulas(m, max_leaves=5), max_size=2))
    goal = data.draw(formulas(m, max_leaves=6))
    seq = to_sequent(prem, goal, m)
    v = sequent_decide(seq, m)
    assert v.holds == decide("consequence", prem, goal, m).holds
    assert v.holds == check_valid_by_enumeration(seq, m)[0]
    if v.holds:
        res = check_derivation(v.derivation, m, goal=seq)
        assert res, res.reason
    else:
        assert not seq.holds(v.witness, m)


@settings(max_examples=40, deadline=None)
@given(formulas(L3, max_leaves=6))
def test_derivation_text_round_trip(f):
    seq = to_sequent([], f, L3)
    v = sequent_decide(seq, L3)
    if v.holds:
        again = parse_derivation(format_derivation(v.derivation, L3), L3)
        assert [s.sequent for s in again.steps] == [s.sequent for s in v.derivation.steps]
        assert check_derivation(again, L3, goal=seq)


AXIOM = Sequent([sf(p, 0), sf(p, H), sf(p, 1)])


@pytest.mark.parametrize(
    "steps, where, fragment",
    [
        ([], None, "empty derivation"),
        ([DerivationStep(2, AXIOM, "axiom")], 1, "numbered 2"),
        ([DerivationStep(1, AXIOM, "axiom", (), (1,))], 1, "not an earlier step"),
        ([DerivationStep(1, Sequent([sf(p, 0), sf(p, 1)]), "axiom")], 1, "not an axiom"),
        (
            [DerivationStep(1, AXIOM, "axiom"), DerivationStep(2, Sequent([sf(p, 0)]), "weakening", (), (1,))],
            2,
            "only add",
        ),
        ([DerivationStep(1, AXIOM, "guess")], 1, "unknown rule"),
        (
            [
                DerivationStep(1, AXIOM | {sf(q, 0)}, "weakening", (), ()),
            ],
            1,
            "one premiss",
        ),
    ],
)
def test_checker_rejects(steps, where, fragment):
    res = check_derivation(SequentDerivation(steps), L3)
    assert not res.ok
    assert res.where == where
    assert fragment in res.reason


def test_intro_with_wrong_premisses():
    good = sequent_decide(to_sequent([], parse_formula("p -> p", L3), L3), L3).derivation
    last = good.steps[-1]
    assert last.rule == "intro"
    bad_value = DerivationStep(last.index, last.sequent, "intro", (last.params[0], 1 if last.params[1] != 1 else 0), last.premisses)
    res = check_derivation(SequentDerivation(good.steps[:-1] + [bad_value]), L3)
    assert not res.ok and res.where == last.index


def test_goal_mismatch():
    d = SequentDerivation([DerivationStep(1, AXIOM, "axiom")])
    assert check_derivation(d, L3)
    res = check_derivation(d, L3, goal=Sequent([sf(q, 1)]))
    assert not res.ok and "goal" in res.reason


def test_parse_derivation_errors():
    with pytest.raises(FormulaSyntaxError, match="line 1"):
        parse_derivation("nonsense", L3)
    with pytest.raises(FormulaSyntaxError, match="conn@value"):
        parse_derivation("1: p => p => p by intro imp", L3)
    with pytest.raises(FormulaSyntaxError, match="premiss list"):
        parse_derivation("1: p => p => p by axiom from x", L3)


HILBERT = """\
1: p -> (p -> p) by Ax1
2: (p -> (p -> p)) -> (q -> (p -> (p -> p))) by Ax1 [alpha:=p -> (p -> p), beta:=q]
3: q -> (p -> (p -> p)) by MP 1, 2
"""


def test_hilbert_accepts_and_round_trips():
    proof = parse_hilbert_proof(HILBERT, L3)
    assert check_hilbert_proof(proof, "Ax1-4")
    assert proof.conclusion == parse_formula("q -> (p -> (p -> p))", L3)
    again = parse_hilbert_proof(format_hilbert_proof(proof, L3), L3)
    assert again == proof


def test_hilbert_derived_connectives_are_expanded():
    # x + y abbreviates ~x -> y, on both sides of the comparison
    text = "1: (p + q) -> (r -> (~p -> q)) by Ax1 [alpha:=p + q, beta:=r]\n"
    assert check_hilbert_proof(parse_hilbert_proof(text, L3), "Ax1-4")


@pytest.mark.parametrize(
    "text, system, line, fragment",
    [
        ("1: ((~p -> p) -> p) by Ax5\n", "Ax1-4", 1, "not an axiom of Ax1-4"),
        (HILBERT + "3: p by MP 1, 2\n", "Ax1-4", 3, "appears twice"),
        ("1: q by MP 2, 3\n", "Ax1-4", 1, "not an earlier line"),
        (HILBERT + "4: p by MP 1, 3\n", "Ax1-4", 4, "antecedent"),
        (HILBERT + "4: p -> p by MP 1, 1\n", "Ax1-4", 4, "antecedent of line 1"),
        ("1: p -> p by Ax1\n", "Ax1-4", 1, "not an instance"),
    ],
)
def test_hilbert_rejects(text, system, line, fragment):
    res = check_hilbert_proof(parse_hilbert_proof(text, L3), system)
    assert not res.ok
    assert res.where == line
    assert fragment in res.reason


def test_hilbert_consequent_mismatch():
    text = HILBERT + "4: p -> (p -> p) by Ax1\n5: q by MP 4, 2\n"
    res = check_hilbert_proof(parse_hilbert_proof(text, L3), "Ax1-4")
    assert not res.ok and res.where == 5 and "consequent" in res.reason


def test_hilbert_systems():
    assert not check_hilbert_proof(parse_hilbert_proof(HILBERT, L3), "Ax9").ok
    text = "1: (p + p + p) -> (p + p) by Ax5''\n"
    assert check_hilbert_proof(parse_hilbert_proof(text, L3), "Ax1-4+5''+6j", n=3)


def test_hilbert_parse_errors():
    with pytest.raises(FormulaSyntaxError, match="line 1"):
        parse_hilbert_proof("p -> p", L3)
    with pytest.raises(FormulaSyntaxError, match="justification"):
        parse_hilbert_proof("1: p by magic", L3)
    with pytest.raises(FormulaSyntaxError, match="metavariable"):
        parse_hilbert_proof("1: p -> (q -> p) by Ax1 [delta:=p]", L3)


def test_sequent_search_on_hard_l4_query():
    # nested mixed connectives, where the derivation shares subproofs
    m = lukasiewicz(4)
    f = parse_formula("((p * q) -> (q & p)) <-> ((p | q) + ~(p -> q))", m)
    v = sequent_decide(to_sequent([], f, m), m)
    assert v.holds == decide("valid", [], f, m).holds
    if v.holds:
        assert check_derivation(v.derivation, m)
