import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import formulas, valuations
from mvlogic.core import App, Atom, decide, evaluate, parse_formula
from mvlogic.errors import MVLogicError, ResourceLimitExceeded
from mvlogic.logics import builtin, classical, lukasiewicz
from mvlogic.resolution import (
    BOUND_EXCEEDED,
    SAT_NOT_SHOWN,
    UNSAT,
    RefutationStep,
    Refutation,
    VerifierSystem,
    check_refutation,
    classical_verifier_system,
    clause,
    clause_set,
    clausify,
    find_model,
    format_refutation,
    is_satisfiable,
    nonclausal_decide,
    parse_refutation,
    resolve_consequence,
    resolvents,
    saturate,
    value_verifier_system,
)

L3 = lukasiewicz(3)
H = Fraction(1, 2)
p, q = Atom("p"), Atom("q")


@settings(max_examples=150, deadline=None)
@given(formulas(L3), valuations(L3))
def test_clausify_is_faithful(f, v):
    cs = clausify(f, L3, verify=False)
    assert all(c.holds(v) for c in cs) == (evaluate(f, v, L3) in L3.designated)


def test_clausify_with_sign():
    cs = clausify(App("imp", (p, q)), L3, sign=["0"])
    for a, b in itertools.product(L3.values, repeat=2):
        assert all(c.holds({"p": a, "q": b}) for c in cs) == (L3.apply("imp", a, b) == 0)


def test_resolvents():
    c1 = clause(("p", 1), ("q", 0))
    c2 = clause(("p", 0), ("p", H))
    got = {(r.literals, a, i, j) for r, a, i, j in resolvents(c1, c2)}
    assert got == {
        (frozenset({("q", 0), ("p", H)}), "p", 1, 0),
        (frozenset({("q", 0), ("p", 0)}), "p", 1, H),
    }


def test_refutation_round_trip_and_check():
    cs = clause_set([p, App("neg", (p,))], classical())
    sat = saturate(cs, classical())
    assert sat.unsat
    ok, _, _ = check_refutation(sat.refutation, cs)
    assert ok
    text = format_refutation(sat.refutation, classical())
    assert text.splitlines()[-1].split(":")[1].strip().startswith("{}")
    again = parse_refutation(text)
    assert [s.clause for s in again.steps] == [s.clause for s in sat.refutation.steps]
    assert check_refutation(again, cs)[0]


def test_refutation_checker_rejections():
    a = RefutationStep(1, clause(("p", 1)))
    b = RefutationStep(2, clause(("p", 0)))
    good = RefutationStep(3, clause(), (1, 2), "p", 1, 0)
    assert check_refutation(Refutation([a, b, good]))[0]
    same = RefutationStep(3, clause(), (1, 2), "p", 1, 1)
    assert "i ≠ j" in check_refutation(Refutation([a, b, same]))[2]
    wrong = RefutationStep(3, clause(("q", 0)), (1, 2), "p", 1, 0)
    assert "not the resolvent" in check_refutation(Refutation([a, b, wrong]))[2]
    assert "empty clause" in check_refutation(Refutation([a, b]))[2]
    assert "not an input" in check_refutation(Refutation([a, b, good]), [clause(("p", 1))])[2]
    late = RefutationStep(3, clause(), (1, 4), "p", 1, 0)
    assert "earlier steps" in check_refutation(Refutation([a, b, late]))[2]
    with pytest.raises(MVLogicError, match="line 1"):
        parse_refutation("what")


LOGICS = ["classical", "lukasiewicz:3", "lukasiewicz:4", "post:3", "post:4:2"]


@pytest.mark.parametrize("name", LOGICS)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_resolution_agrees_with_tables(name, data):
    m = builtin(name)
    prem = data.draw(st.lists(formulas(m, max_leaves=4), max_size=2))
    goal = data.draw(formulas(m, max_leaves=5))
    seed = data.draw(st.none() | st.integers(0, 99))
    verdict, sat = resolve_consequence(prem, goal, m, seed=seed)
    assert verdict.holds == decide("consequence", prem, goal, m).holds
    if verdict.holds:
        assert check_refutation(sat.refutation)[0]


def test_no_marker_is_an_error():
    with pytest.raises(MVLogicError):
        resolve_consequence([], p, builtin("godel:3"))


def test_find_model_and_satisfiable():
    cs = [clause(("p", 0), ("q", 1)), clause(("p", 1)), clause(("q", 0), ("q", H))]
    assert find_model(cs, L3) is None
    cs = cs[:2]
    model = find_model(cs, L3, atoms=["r"])
    assert all(c.holds(model) for c in cs) and "r" in model
    assert is_satisfiable([App("or", (p, App("neg", (p,))))], L3)
    assert not is_satisfiable([App("and", (p, App("neg", (p,))))], classical())


def test_saturation_cap():
    f = parse_formula("(p <-> q) & (q <-> ~p)", lukasiewicz(5))
    with pytest.raises(ResourceLimitExceeded):
        saturate(clause_set([f], lukasiewicz(5)), lukasiewicz(5), max_clauses=3)


def test_nonclausal_outcomes():
    m = classical()
    vs = classical_verifier_system(m)
    contradiction = [p, App("neg", (p,))]
    assert nonclausal_decide(contradiction, vs, m).outcome == UNSAT
    assert nonclausal_decide([p], vs, m).outcome == SAT_NOT_SHOWN
    tiny = classical_verifier_system(m, depth_bound=1)
    deep = [parse_formula("(p -> q) & (q -> r) & p & ~r", m)]
    assert nonclausal_decide(deep, tiny, m).outcome in (UNSAT, BOUND_EXCEEDED)
    assert nonclausal_decide(deep, vs, m, max_nodes=1).outcome == BOUND_EXCEEDED


@settings(max_examples=80, deadline=None)
@given(st.lists(formulas(classical(), max_leaves=5), min_size=1, max_size=3))
def test_nonclausal_unsat_is_sound(gamma):
    m = classical()
    res = nonclausal_decide(gamma, classical_verifier_system(m), m)
    if res.outcome == UNSAT:
        assert not is_satisfiable(gamma, m)
    elif res.outcome == SAT_NOT_SHOWN:
        assert is_satisfiable(gamma, m)


def test_verifier_system_validation():
    with pytest.raises(MVLogicError):
        VerifierSystem((), {}, frozenset([frozenset([0])]))
    with pytest.raises(MVLogicError):
        VerifierSystem((p,), {"neg": {(0,): 3}}, frozenset([frozenset([0])]))
    with pytest.raises(MVLogicError):
        VerifierSystem((p,), {"neg": {(0,): 0}}, frozenset())
    with pytest.raises(MVLogicError, match="not constant"):
        value_verifier_system(classical(), {0: p, 1: App("neg", (p,))})
    vs = classical_verifier_system(classical())
    with pytest.raises(MVLogicError, match="no table"):
        nonclausal_decide([p], VerifierSystem(vs.verifiers, {"neg": vs.tables["neg"]}, vs.unsat_family), classical())
