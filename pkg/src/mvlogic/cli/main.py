"""The ``mvlogic`` command.

Exit status: 0 affirmative verdict, 1 negative verdict, 2 usage or parse
error, 3 resource bound hit, 4 engines disagree (or an internal cross-check
failed).
"""

import argparse
import itertools
import math
import sys
from fractions import Fraction

from ..core.formula import App, sorted_atoms, subformulas
from ..core.semantics import decide, evaluate, truth_table
from ..core.syntax import format_formula, parse_formula
from ..core.values import format_sign, format_value
from ..deduction import (
    CheckResult,
    check_derivation,
    check_hilbert_proof,
    format_derivation,
    parse_derivation,
    parse_hilbert_proof,
    sequent_decide,
    to_sequent,
)
from ..errors import MVLogicError, ResourceLimitExceeded, VerificationError
from ..logics import find_marker, lukasiewicz, post, post_synthesize
from ..mv import (
    ChangView,
    LexPair,
    chain,
    chang_op,
    chang_order,
    check_axioms,
    classify,
    element_order,
    enumerate_ideals,
    gamma_z,
    generate,
    grid_falsify,
    is_maximal,
    is_prime,
    mcnaughton_compile,
    pl_decide,
    product,
    quotient,
    radical,
    two,
)
from ..resolution import (
    SAT_NOT_SHOWN,
    UNSAT,
    check_refutation,
    classical_verifier_system,
    clausify,
    format_refutation,
    nonclausal_decide,
    parse_refutation,
    resolve_consequence,
)
from ..signed import normal_form
from ..tableau import format_proof, tableau_decide
from .logicfile import load_logic, parse_mv_file, serialize_logic

OK, NO, USAGE, BOUND, DISAGREE = 0, 1, 2, 3, 4

EPILOG = """\
queries:
  "A" asks whether A is valid; "B1, B2 |- A" asks whether A follows from B1, B2.
  Formulas use the aliases of the logic (for lukasiewicz: -> ~ + * | & <-> 0 1)
  or functional notation such as imp(p, neg(q)).

logics:
  lukasiewicz:N  godel:N  post:N[:M]  kleene-strong  kleene-weak  bochvar
  belnap  classical, or a path to a .logic file.

refutations (prove --method resolution):
  one clause per line, "N: {p:0, q:1/2} input" for an input clause and
  "N: {q:1/2} <- A, B on p 1 vs 0" for the resolvent of clauses A and B,
  where A carries p:1 and B carries p:0. The last line is the empty clause {}.

exit status:
  0 affirmative verdict, 1 negative verdict, 2 usage or parse error,
  3 resource bound hit, 4 engines disagree.
"""


class UsageError(MVLogicError):
    pass


# -- small helpers ------------------------------------------------------------


def _split_top(text, sep=","):
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts if p.strip()]


def parse_query(text, matrix):
    """``(premises, goal, is_consequence)`` from ``"B1, B2 |- A"`` or ``"A"``."""
    if "|-" in text:
        left, _, right = text.partition("|-")
        if "|-" in right:
            raise UsageError("a query has at most one '|-'")
        prem = [parse_formula(p, matrix) for p in _split_top(left)]
        return prem, parse_formula(right, matrix), True
    return [], parse_formula(text, matrix), False


def format_model(model):
    return ", ".join(f"{a}={format_value(v)}" for a, v in sorted(model.items())) or "(no atoms)"


def _verdict_word(holds, consequence, mode="valid"):
    if mode == "satisfiable":
        return "satisfiable" if holds else "unsatisfiable"
    if consequence or mode == "entails":
        return "holds" if holds else "fails"
    return "valid" if holds else "not valid"


def _marker(matrix):
    return matrix.marker if matrix.marker is not None else find_marker(matrix)


def _parse_valuation(items, matrix):
    out = {}
    for item in items:
        for part in item.split(","):
            if not part.strip():
                continue
            name, eq, val = part.partition("=")
            if not eq:
                raise UsageError(f"assignments look like p=1/2, got {part!r}")
            out[name.strip()] = matrix.value(val.strip())
    return out


def _write(out, text=""):
    out.write(text + "\n")


# -- engines ------------------------------------------------------------------


def run_engine(method, premises, goal, matrix, seed=None):
    """``(holds, countermodel, proof_text)`` for ``premises |= goal``."""
    holds, model, text = _engine(method, premises, goal, matrix, seed)
    if model is not None:
        # atoms an engine never looked at are irrelevant; show them at the least value
        for a in sorted_atoms(list(premises) + [goal]):
            model.setdefault(a, matrix.least())
    return holds, model, text


def _engine(method, premises, goal, matrix, seed):
    if method == "table":
        v = decide("consequence", premises, goal, matrix)
        return v.holds, v.witness, None
    if method == "tableau":
        v, proof = tableau_decide(premises, goal, matrix)
        return v.holds, v.witness, format_proof(proof)
    if method == "sequent":
        v = sequent_decide(to_sequent(premises, goal, matrix), matrix)
        text = format_derivation(v.derivation, matrix) if v.holds else None
        return v.holds, v.witness, text
    if method == "resolution":
        marker = _marker(matrix)
        if marker is None:
            raise UsageError(f"{matrix.name} has no formula N(p); resolution is unavailable")
        v, sat = resolve_consequence(premises, goal, matrix, marker=marker, seed=seed)
        text = format_refutation(sat.refutation, matrix) if v.holds else None
        return v.holds, v.witness, text
    if method == "nonclausal":
        gamma = list(premises) + [App("neg", (goal,))]
        res = nonclausal_decide(gamma, classical_verifier_system(matrix), matrix)
        if res.outcome == UNSAT:
            return True, None, None
        if res.outcome == SAT_NOT_SHOWN:
            return False, None, None
        raise ResourceLimitExceeded("non-clausal search hit its bound")
    raise UsageError(f"unknown method {method!r}")


def applicable_engines(matrix):
    engines = ["table", "tableau", "sequent"]
    if matrix.designated and _marker(matrix) is not None:
        engines.append("resolution")
    if matrix.name == "classical":
        engines.append("nonclausal")
    return engines


def xcheck_query(premises, goal, matrix, engines=None):
    """Verdict of every applicable engine; engines that hit a bound are left out."""
    out = {}
    for e in engines or applicable_engines(matrix):
        try:
            out[e] = run_engine(e, premises, goal, matrix)
        except ResourceLimitExceeded:
            continue
    return out


def _disagree(results):
    return len({r[0] for r in results.values()}) > 1


def minimize_disagreement(premises, goal, matrix, engines):
    """A smallest query among sub-queries on which the engines still disagree."""
    best = (list(premises), goal)
    changed = True
    while changed:
        changed = False
        prem, g = best
        candidates = [(prem[:i] + prem[i + 1:], g) for i in range(len(prem))]
        candidates += [(prem, s) for s in sorted(subformulas(g), key=lambda f: f.size) if s != g]
        for cand in candidates:
            if _disagree(xcheck_query(cand[0], cand[1], matrix, engines)):
                best = cand
                changed = True
                break
    return best


# -- commands -----------------------------------------------------------------


def cmd_eval(args, out):
    m = load_logic(args.logic)
    f = parse_formula(args.formula, m)
    val = _parse_valuation(args.val or [], m)
    atoms = sorted(f.atoms())
    if val or not atoms:
        missing = [a for a in atoms if a not in val]
        if missing:
            raise UsageError(f"no value given for {', '.join(missing)}")
        v = evaluate(f, val, m)
        _write(out, format_value(v))
        return OK if v in m.designated else NO
    for row, v in truth_table(f, m, atoms):
        _write(out, f"{format_model(row)}  ->  {format_value(v)}")
    return OK


def cmd_check(args, out):
    m = load_logic(args.logic)
    prem, goal, cons = parse_query(args.query, m)
    mode = args.mode or ("consequence" if cons else "valid")
    if mode in ("satisfiable", "entails"):
        if args.method != "table":
            raise UsageError(f"mode {mode} is only available with --method table")
        v = decide(mode, prem, goal, m)
        holds, model = v.holds, v.witness
    else:
        holds, model, _ = run_engine(args.method, prem, goal, m, seed=args.seed)
    _write(out, _verdict_word(holds, cons, mode))
    if model is not None:
        label = "model" if mode == "satisfiable" else "countermodel"
        _write(out, f"{label}: {format_model(model)}")
    return OK if holds else NO


def cmd_prove(args, out):
    m = load_logic(args.logic)
    if args.verify:
        with open(args.verify, encoding="utf-8") as fh:
            text = fh.read()
        if args.method == "sequent":
            goal = None
            if args.query:
                prem, g, _ = parse_query(args.query, m)
                goal = to_sequent(prem, g, m)
            res = check_derivation(parse_derivation(text, m), m, goal)
            where = "step"
        elif args.method == "hilbert":
            res = check_hilbert_proof(parse_hilbert_proof(text, m), args.system)
            where = "line"
        elif args.method == "resolution":
            res = CheckResult(*check_refutation(parse_refutation(text)))
            where = "step"
        else:
            raise UsageError("--verify takes --method sequent, hilbert or resolution")
        if res.ok:
            _write(out, "accepted")
            return OK
        _write(out, f"rejected at {where} {res.where}: {res.reason}" if res.where else f"rejected: {res.reason}")
        return NO
    if not args.query:
        raise UsageError("prove needs a query or --verify FILE")
    if args.method == "hilbert":
        raise UsageError("Hilbert proofs are checked with --verify, not searched for")
    prem, goal, cons = parse_query(args.query, m)
    holds, model, text = run_engine(args.method, prem, goal, m, seed=args.seed)
    _write(out, _verdict_word(holds, cons))
    if holds and text:
        _write(out, text)
    if model is not None:
        _write(out, f"countermodel: {format_model(model)}")
    return OK if holds else NO


def _sign(args, m):
    if args.sign:
        return frozenset(m.value(t) for t in args.sign.split(","))
    if args.value is not None:
        return frozenset([m.value(args.value)])
    return None


def _literal(formula, sign, m):
    return f"{format_formula(formula, m)}:{format_sign(sign, m)}"


def cmd_normal_form(args, out, mode):
    m = load_logic(args.logic)
    sign = _sign(args, m)
    if args.formula:
        if mode != "cnf":
            raise UsageError("dnf takes --conn, not a formula")
        f = parse_formula(args.formula, m)
        cls = clausify(f, m, sign=sign)
        for c in sorted(cls, key=lambda c: (len(c), c.format(m))):
            by_atom = {}
            for a, v in c.sorted_literals(m):
                by_atom.setdefault(a, set()).add(v)
            _write(out, " | ".join(f"{a}:{format_sign(s, m)}" for a, s in by_atom.items()) or "⊥")
        return OK
    if not args.conn or sign is None:
        raise UsageError(f"{mode} needs --conn and --value (or --sign), or a formula")
    cs = normal_form(args.conn, sign, mode, matrix=m)
    inner, empty = (" | ", "⊥") if mode == "cnf" else (" & ", "⊤")
    for clause in cs.clauses:
        _write(out, inner.join(_literal(x.formula, x.sign, m) for x in clause) or empty)
    if not cs.clauses:
        _write(out, "⊤" if mode == "cnf" else "⊥")
    return OK


def cmd_synth(args, out):
    n = args.n
    entries = [int(t) for t in args.table.replace(",", " ").split()]
    k = round(math.log(len(entries), n)) if len(entries) > 1 else 0
    if n ** k != len(entries):
        raise UsageError(f"{len(entries)} entries is not a power of {n}")
    if any(not 0 <= e < n for e in entries):
        raise UsageError(f"entries must lie in 0..{n - 1}")
    rows = list(itertools.product(range(n), repeat=k))
    target = {tuple(Fraction(x) for x in r): Fraction(e) for r, e in zip(rows, entries)}
    term = post_synthesize(n, k, target)
    _write(out, format_formula(term, post(n)))
    return OK


# -- mv -------------------------------------------------------------------------


def parse_algebra(text):
    """``I3``, ``2``, ``Z2`` (Γ(ℤ, 2)), products like ``I3xI3``, or a path to an algebra file."""
    if text.endswith(".mv"):
        return parse_mv_file(text)
    factors = []
    for part in text.split("x"):
        part = part.strip()
        if part == "2":
            factors.append(two())
        elif part[:1] == "I" and part[1:].isdigit():
            factors.append(chain(int(part[1:])))
        elif part[:1] == "Z" and part[1:].isdigit():
            factors.append(gamma_z(int(part[1:])))
        else:
            raise UsageError(f"unknown algebra {part!r}; use I<n>, 2, Z<u>, products AxB or a .mv file")
    alg = factors[0]
    for f in factors[1:]:
        alg = product(alg, f)
    return alg


def parse_element(alg, text):
    want = text.replace(" ", "")
    for a in alg.elements:
        if alg.format_element(a) == want:
            return a
    raise UsageError(f"{text!r} is not an element of {alg.name}")


def _elements(alg, text):
    return [parse_element(alg, t) for t in text.split(";") if t.strip()]


def _fmt_set(alg, J):
    return "{" + ", ".join(alg.format_element(a) for a in alg.elements if a in J) + "}"


def parse_lexpair(text):
    a, _, b = text.strip().strip("()").partition(",")
    try:
        return LexPair(int(a), int(b))
    except ValueError:
        raise UsageError(f"Chang elements look like (a,b), got {text!r}") from None


def cmd_mv(args, out):
    sub = args.mv_command
    L = lukasiewicz(3)
    if sub == "axioms":
        alg = parse_algebra(args.algebra)
        r = check_axioms(alg, args.system)
        _write(out, str(r))
        return OK if r.ok else NO
    if sub == "classify":
        alg = parse_algebra(args.algebra)
        c = classify(alg)
        _write(out, f"simple: {c.simple}")
        _write(out, f"semisimple: {c.semisimple}")
        _write(out, f"hyperarchimedean: {c.hyperarchimedean}")
        _write(out, f"center: {_fmt_set(alg, c.center)}")
        return OK
    if sub == "ideals":
        alg = parse_algebra(args.algebra)
        if args.generate is not None:
            _write(out, _fmt_set(alg, generate(alg, _elements(alg, args.generate))))
            return OK
        ideals = enumerate_ideals(alg)
        for J in ideals:
            tags = []
            if is_prime(alg, J):
                tags.append("prime")
            if is_maximal(alg, J, ideals):
                tags.append("maximal")
            rad = radical(alg, J, ideals)
            tags.append(f"radical {_fmt_set(alg, rad)}")
            _write(out, f"{_fmt_set(alg, J)}  {', '.join(tags)}")
        return OK
    if sub == "quotient":
        alg = parse_algebra(args.algebra)
        q, _ = quotient(alg, _elements(alg, args.ideal))
        elements, rows, neg = q.tables()
        _write(out, "values " + " ".join(alg.format_element(a) for a in elements))
        _write(out, "oplus")
        for r in rows:
            _write(out, "  " + " ".join(alg.format_element(a) for a in r))
        _write(out, "neg")
        _write(out, "  " + " ".join(alg.format_element(a) for a in neg))
        return OK
    if sub == "order":
        if args.algebra == "chang":
            cert = chang_order(parse_lexpair(args.element))
            _write(out, "infinite" if cert.order == math.inf else str(cert.order))
            _write(out, cert.reason)
            return OK
        alg = parse_algebra(args.algebra)
        k = element_order(alg, parse_element(alg, args.element))
        _write(out, "infinite" if k == math.inf else str(k))
        return OK
    if sub == "chang":
        x = parse_lexpair(args.x)
        y = parse_lexpair(args.y) if args.y else None
        if args.op != "neg" and y is None:
            raise UsageError(f"{args.op} takes two elements")
        r = chang_op(x, y, args.op)
        _write(out, str(r))
        if args.op == "leq":
            return OK if r else NO
        return OK
    if sub == "chang-axioms":
        r = check_axioms(ChangView(args.bound), "M")
        _write(out, str(r))
        return OK if r.ok else NO
    if sub == "compile":
        _write(out, str(mcnaughton_compile(parse_formula(args.formula, L))))
        return OK
    if sub == "decide":
        f = parse_formula(args.formula, L)
        if args.equals:
            ans = pl_decide(f, "equals", parse_formula(args.equals, L))
            _write(out, "equal" if ans else "different")
        else:
            ans = pl_decide(f)
            _write(out, "valid" if ans else "not valid")
        return OK if ans else NO
    if sub == "falsify":
        hit = grid_falsify(parse_formula(args.formula, L), args.bound)
        if hit is None:
            _write(out, f"none found up to denominator {args.bound}")
            return OK
        model, v = hit
        _write(out, f"countermodel: {format_model(model)}")
        _write(out, f"value: {format_value(v)}")
        return NO
    raise UsageError("mv needs a subcommand")


def cmd_xcheck(args, out):
    m = load_logic(args.logic)
    prem, goal, cons = parse_query(args.query, m)
    engines = applicable_engines(m)
    results = xcheck_query(prem, goal, m, engines)
    for e, (holds, model, _) in results.items():
        line = f"{e}: {_verdict_word(holds, cons)}"
        if model is not None:
            line += f", countermodel {format_model(model)}"
        _write(out, line)
    skipped = [e for e in engines if e not in results]
    if skipped:
        _write(out, f"bound hit, no verdict: {', '.join(skipped)}")
    if not results:
        return BOUND
    if _disagree(results):
        p2, g2 = minimize_disagreement(prem, goal, m, list(results))
        q = ", ".join(format_formula(b, m) for b in p2)
        q = f"{q} |- {format_formula(g2, m)}" if p2 else format_formula(g2, m)
        _write(out, f"DISAGREEMENT; smallest witness: {q}")
        return DISAGREE
    holds = next(iter(results.values()))[0]
    _write(out, f"agree: {_verdict_word(holds, cons)}")
    return OK if holds else NO


def cmd_logic(args, out):
    out.write(serialize_logic(load_logic(args.logic)))
    return OK


# -- argument parsing ---------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(
        prog="mvlogic",
        description="Decide, prove and cross-check queries in finite-valued logics and MV-algebras.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def with_logic(sp):
        sp.add_argument("--logic", default="lukasiewicz:3", help="built-in name or .logic file (default lukasiewicz:3)")
        return sp

    sp = with_logic(sub.add_parser("eval", help="evaluate a formula or print its truth table"))
    sp.add_argument("formula")
    sp.add_argument("--val", action="append", help="assignment such as p=1/2,q=0 (exit 0 iff designated)")
    sp.set_defaults(func=cmd_eval)

    sp = with_logic(sub.add_parser("check", help="decide validity, consequence, satisfiability or entailment"))
    sp.add_argument("query")
    sp.add_argument("--method", choices=["table", "tableau", "sequent", "resolution"], default="table")
    sp.add_argument("--mode", choices=["valid", "consequence", "satisfiable", "entails"])
    sp.add_argument("--seed", type=int, help="randomize resolution clause selection")
    sp.set_defaults(func=cmd_check)

    sp = with_logic(sub.add_parser("prove", help="print a proof object, or verify one with --verify"))
    sp.add_argument("query", nargs="?")
    sp.add_argument("--method", choices=["tableau", "sequent", "resolution", "hilbert"], default="sequent")
    sp.add_argument("--verify", metavar="FILE", help="check a sequent derivation, Hilbert proof or refutation")
    sp.add_argument("--system", default="Ax1-4", help="Hilbert axiom system (default Ax1-4)")
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_prove)

    for mode in ("cnf", "dnf"):
        sp = with_logic(sub.add_parser(mode, help=f"signed {mode.upper()} of a connective at a value or sign"))
        sp.add_argument("formula", nargs="?", help="(cnf only) clausify this formula instead")
        sp.add_argument("--conn")
        sp.add_argument("--value")
        sp.add_argument("--sign", help="comma-separated set of values")
        sp.set_defaults(func=lambda a, o, mode=mode: cmd_normal_form(a, o, mode))

    sp = sub.add_parser("synth", help="a Post term (over | and ~) computing a given table")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--table", required=True, help="row-major outputs, e.g. '0 2 1' for a unary function")
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("mv", help="MV-algebra operations")
    mv = sp.add_subparsers(dest="mv_command", required=True)
    ALG = "I<n>, 2, Z<u>, products such as I3xI3, or a .mv file"
    s = mv.add_parser("axioms", help="check an identity system")
    s.add_argument("algebra", help=ALG)
    s.add_argument("--system", choices=["M", "C", "L"], default="M")
    s = mv.add_parser("classify", help="simple / semisimple / hyperarchimedean and the center")
    s.add_argument("algebra", help=ALG)
    s = mv.add_parser("ideals", help="all ideals with their properties, or the ideal generated by --generate")
    s.add_argument("algebra", help=ALG)
    s.add_argument("--generate", metavar="ELEMS", help="elements separated by ';'")
    s = mv.add_parser("quotient", help="tables of the quotient by an ideal")
    s.add_argument("algebra", help=ALG)
    s.add_argument("--ideal", required=True, metavar="ELEMS", help="elements separated by ';'")
    s = mv.add_parser("order", help="order of an element ('chang' for Chang's algebra)")
    s.add_argument("algebra", help=ALG + ", or chang")
    s.add_argument("element")
    s = mv.add_parser("chang", help="an operation of Chang's algebra on pairs (a,b)")
    s.add_argument("op", choices=["oplus", "otimes", "neg", "vee", "wedge", "leq"])
    s.add_argument("x")
    s.add_argument("y", nargs="?")
    s = mv.add_parser("chang-axioms", help="M1-M8 on Chang's algebra for |b| <= bound")
    s.add_argument("--bound", type=int, default=20)
    s = mv.add_parser("compile", help="piecewise-linear function of a one-variable formula")
    s.add_argument("formula")
    s = mv.add_parser("decide", help="exact [0,1]-validity (or equality) of one-variable formulas")
    s.add_argument("formula")
    s.add_argument("--equals")
    s = mv.add_parser("falsify", help="search rational grids for a valuation below 1")
    s.add_argument("formula")
    s.add_argument("--bound", type=int, default=12)
    sp.set_defaults(func=cmd_mv)

    sp = with_logic(sub.add_parser("xcheck", help="run every applicable engine and compare verdicts"))
    sp.add_argument("query")
    sp.set_defaults(func=cmd_xcheck)

    sp = with_logic(sub.add_parser("logic", help="print a logic in file format"))
    sp.set_defaults(func=cmd_logic)
    return p


def run(argv=None, out=None, err=None):
    """Run a command line; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args, out)
    except ResourceLimitExceeded as e:
        err.write(f"resource bound: {e}\n")
        return BOUND
    except VerificationError as e:
        err.write(f"internal cross-check failed: {e}\n")
        return DISAGREE
    except (MVLogicError, ValueError, OSError) as e:
        err.write(f"error: {e}\n")
        return USAGE


def main():
    sys.exit(run())
