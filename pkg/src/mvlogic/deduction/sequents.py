"""Many-sided sequents: backward proof search and a derivation checker.

A sequent is a set of signed formulas with singleton signs, read
disjunctively. Search uses only the introduction rules built from the
singleton CNFs plus axioms ``G, {A^i : i in M}``, all invertible, so the
order in which formulas are decomposed does not matter.
"""

import itertools
from dataclasses import dataclass, field

from ..core.formula import Atom, sorted_atoms
from ..core.semantics import evaluate
from ..core.syntax import format_formula, parse_formula
from ..core.values import format_value
from ..errors import FormulaSyntaxError, MVLogicError, ResourceLimitExceeded, VerificationError
from ..signed.normal_forms import instantiate, normal_form
from ..signed.signs import SignedFormula, singleton_signs

DEFAULT_STEP_CAP = 200_000


def sf(formula, value):
    return SignedFormula(formula, frozenset([value]))


class Sequent(frozenset):
    """A finite set of singly-signed formulas."""

    def __new__(cls, items=()):
        items = frozenset(items)
        for x in items:
            if not isinstance(x, SignedFormula) or len(x.sign) != 1:
                raise MVLogicError("sequent members must be signed formulas with singleton signs")
        return super().__new__(cls, items)

    def slots(self, matrix):
        """Gamma_i = {A : A^i in G}, in the order of the matrix values."""
        out = {v: [] for v in matrix.values}
        for x in self:
            out[x.value].append(x.formula)
        return out

    def holds(self, valuation, matrix):
        return any(x.holds(valuation, matrix) for x in self)

    def format(self, matrix):
        return format_sequent(self, matrix)


def to_sequent(premises, goal, matrix):
    """The sequent valid iff ``premises |= goal``: goal at designated places, premises elsewhere."""
    items = []
    for v in matrix.values:
        if v in matrix.designated:
            items.append(sf(goal, v))
        else:
            items.extend(sf(b, v) for b in premises)
    return Sequent(items)


def axiom_formula(seq, matrix):
    """A formula carrying every truth value in ``seq``, or None."""
    seen = {}
    need = len(matrix.values)
    for x in seq:
        seen.setdefault(x.formula, set()).add(x.value)
    hits = [f for f, vals in seen.items() if len(vals) == need]
    if not hits:
        return None
    return min(hits, key=lambda f: (f.size, format_formula(f)))


@dataclass
class DerivationStep:
    """One inference: ``rule`` with ``params`` concluding ``sequent`` from earlier steps."""

    index: int
    sequent: Sequent
    rule: str
    params: tuple = ()
    premisses: tuple = ()


@dataclass
class SequentDerivation:
    """Steps in dependency order; the last step is the end sequent."""

    steps: list = field(default_factory=list)

    @property
    def root(self):
        return self.steps[-1]

    def step(self, index):
        return self.steps[index - 1]

    def format(self, matrix):
        return format_derivation(self, matrix)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    where: int = None
    reason: str = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class SequentVerdict:
    holds: bool
    derivation: SequentDerivation = None
    witness: dict = None

    def __bool__(self):
        return self.holds


def _cnf(matrix, conn, value):
    return normal_form(conn, {value}, "cnf", singleton_signs(matrix), matrix)


def sequent_decide(seq, matrix, step_cap=DEFAULT_STEP_CAP):
    """Decide validity of a sequent by decomposition.

    Returns a :class:`SequentVerdict`: a derivation (intro rules and axioms)
    when valid, otherwise a valuation satisfying no member.
    """
    seq = Sequent(seq)
    steps = []
    budget = [0]
    failure = []
    # shared subgoals are proved once and cited again, so the derivation is a DAG
    proved = {}

    def prove(goal):
        if goal in proved:
            return proved[goal]
        budget[0] += 1
        if budget[0] > step_cap:
            raise ResourceLimitExceeded(f"sequent search exceeds {step_cap} steps")
        ax = axiom_formula(goal, matrix)
        if ax is not None:
            steps.append(DerivationStep(len(steps) + 1, goal, "axiom"))
            proved[goal] = len(steps)
            return len(steps)
        compound = [x for x in goal if not isinstance(x.formula, Atom)]
        if not compound:
            failure.append(goal)
            return None
        pick = min(
            compound,
            key=lambda x: (len(_cnf(matrix, x.formula.conn, x.value).clauses), x.formula.size, _key(x, matrix)),
        )
        rest = goal - {pick}
        cnf = instantiate(_cnf(matrix, pick.formula.conn, pick.value), pick.formula.args)
        prem_ids = []
        for clause in cnf.clauses:
            sub = prove(Sequent(rest | frozenset(clause)))
            if sub is None:
                return None
            prem_ids.append(sub)
        steps.append(
            DerivationStep(len(steps) + 1, goal, "intro", (pick.formula.conn, pick.value), tuple(prem_ids))
        )
        proved[goal] = len(steps)
        return len(steps)

    if prove(seq) is not None:
        return SequentVerdict(True, SequentDerivation(steps))
    leaf = failure[-1]
    model = {}
    for x in leaf:
        carried = {y.value for y in leaf if y.formula == x.formula}
        model[x.formula.name] = next(v for v in _ordered(matrix) if v not in carried)
    default = matrix.least()
    for a in sorted_atoms([x.formula for x in seq]):
        model.setdefault(a, default)
    if seq.holds(model, matrix):
        raise VerificationError("literal leaf does not yield a falsifying valuation")
    return SequentVerdict(False, witness=model)


def _ordered(matrix):
    least = matrix.least()
    return [least] + [v for v in matrix.values if v != least]


def _key(x, matrix):
    return (format_formula(x.formula, matrix), matrix.index(x.value))


# -- checking --------------------------------------------------------------


def check_derivation(d, matrix, goal=None):
    """Check every step of ``d``; report the first failing step.

    Rules: ``axiom``; ``weakening`` (one premiss, a subset); ``intro`` with
    params (c, i); ``cut`` with params (i, j); ``rousseau`` with params
    (c, i1, ..., iu). The principal or cut formula is inferred.
    """
    if not d.steps:
        return CheckResult(False, None, "empty derivation")
    for pos, step in enumerate(d.steps, 1):
        if step.index != pos:
            return CheckResult(False, pos, f"step numbered {step.index} at position {pos}")
        for k in step.premisses:
            if not 1 <= k < pos:
                return CheckResult(False, pos, f"premiss {k} is not an earlier step")
        prems = [d.step(k).sequent for k in step.premisses]
        try:
            reason = _check_step(step, prems, matrix)
        except MVLogicError as exc:
            reason = str(exc)
        if reason is not None:
            return CheckResult(False, pos, reason)
    if goal is not None and Sequent(goal) != d.root.sequent:
        return CheckResult(False, len(d.steps), "end sequent differs from the goal")
    return CheckResult(True)


def _check_step(step, prems, matrix):
    concl = step.sequent
    rule = step.rule
    if rule == "axiom":
        if prems:
            return "axiom takes no premisses"
        if axiom_formula(concl, matrix) is None:
            return "not an axiom: no formula carries every truth value"
        return None
    if rule == "weakening":
        if len(prems) != 1:
            return "weakening takes one premiss"
        if not prems[0] <= concl:
            return "weakening may only add formulas"
        return None
    if rule == "intro":
        return _check_intro(step, prems, matrix)
    if rule == "cut":
        return _check_cut(step, prems, matrix)
    if rule == "rousseau":
        return _check_rousseau(step, prems, matrix)
    return f"unknown rule {rule!r}"


def _value(matrix, v):
    return matrix.value(v) if isinstance(v, str) else v


def _contexts(concl, principal):
    out = [concl - {principal}]
    out.append(frozenset(concl))
    return out


def _check_intro(step, prems, matrix):
    if len(step.params) != 2:
        return "intro needs a connective and a value"
    conn, value = step.params[0], _value(matrix, step.params[1])
    c = matrix.connective(conn)
    candidates = [
        x for x in step.sequent
        if not isinstance(x.formula, Atom) and x.formula.conn == conn and x.value == value
    ]
    if not candidates:
        return f"no principal formula {conn}^{format_value(value)} in the conclusion"
    registered = _cnf(matrix, conn, value)
    for principal in candidates:
        for ctx in _contexts(step.sequent, principal):
            expected = instantiate(registered, principal.formula.args)
            want = {frozenset(ctx | frozenset(cl)) for cl in expected.clauses}
            if want == {frozenset(p) for p in prems}:
                return None
            if _intro_semantic(ctx, principal, prems, c, value, matrix):
                return None
    return f"premisses do not match an introduction rule for {conn} at {format_value(value)}"


def _intro_semantic(ctx, principal, prems, conn, value, matrix):
    """Premisses G, F_s whose side parts are clauses of some CNF of (c A1..Au)^value.

    The clauses are checked against the table for every assignment of values
    to the distinct arguments.
    """
    args = principal.formula.args
    distinct = list(dict.fromkeys(args))
    clauses = []
    for p in prems:
        if not ctx <= p:
            return False
        side = p - ctx
        if any(x.formula not in distinct for x in side):
            return False
        clauses.append(side)
    for row in itertools.product(matrix.values, repeat=len(distinct)):
        env = dict(zip(distinct, row))
        sat = all(any(env[x.formula] == x.value for x in clause) for clause in clauses)
        if sat != (conn.table[tuple(env[a] for a in args)] == value):
            return False
    return True


def _check_cut(step, prems, matrix):
    if len(step.params) != 2:
        return "cut needs two values"
    i, j = (_value(matrix, v) for v in step.params)
    if i == j:
        return "cut requires i ≠ j"
    if len(prems) != 2:
        return "cut takes two premisses"
    left, right = prems
    formulas = {x.formula for x in left if x.value == i} & {x.formula for x in right if x.value == j}
    if not formulas:
        return f"no cut formula signed {format_value(i)} on the left and {format_value(j)} on the right"
    for a in formulas:
        for g in (left - {sf(a, i)}, left):
            for f in (right - {sf(a, j)}, right):
                if g | f == step.sequent:
                    return None
    return "conclusion is not the union of the cut contexts"


def _check_rousseau(step, prems, matrix):
    if not step.params:
        return "rousseau needs a connective"
    conn = step.params[0]
    vals = tuple(_value(matrix, v) for v in step.params[1:])
    c = matrix.connective(conn)
    if len(vals) != c.arity:
        return f"rousseau for {conn} needs {c.arity} argument values"
    if len(prems) != c.arity:
        return f"rousseau for {conn} takes {c.arity} premisses"
    value = c.table[vals]
    candidates = [x for x in step.sequent if not isinstance(x.formula, Atom)
                  and x.formula.conn == conn and x.value == value]
    wrong = [x for x in step.sequent if not isinstance(x.formula, Atom)
             and x.formula.conn == conn and x.value != value]
    if not candidates:
        if wrong:
            return f"value condition fails: {conn}({', '.join(map(format_value, vals))}) = {format_value(value)}"
        return f"no principal {conn} formula in the conclusion"
    for principal in candidates:
        for ctx in _contexts(step.sequent, principal):
            want = [ctx | {sf(a, v)} for a, v in zip(principal.formula.args, vals)]
            if all(p == w for p, w in zip(prems, want)):
                return None
    return "premisses do not match G, A_r^(i_r)"


# -- text ------------------------------------------------------------------


def _split_top(text, sep):
    out, depth, cur = [], 0, ""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith(sep, i):
            out.append(cur)
            cur = ""
            i += len(sep)
            continue
        cur += ch
        i += 1
    out.append(cur)
    return out


def parse_sequent(text, matrix):
    """Read ``G0 => G1 => ... => G(n-1)``, one slot per value in matrix order."""
    slots = _split_top(text, "=>")
    if len(slots) != len(matrix.values):
        raise FormulaSyntaxError(f"expected {len(matrix.values)} slots separated by '=>', got {len(slots)}", 0)
    items = []
    for v, slot in zip(matrix.values, slots):
        if not slot.strip():
            continue
        for part in _split_top(slot, ","):
            if not part.strip():
                raise FormulaSyntaxError("empty formula in sequent slot", 0)
            items.append(sf(parse_formula(part, matrix), v))
    return Sequent(items)


def format_sequent(seq, matrix):
    slots = Sequent(seq).slots(matrix)
    parts = []
    for v in matrix.values:
        fs = sorted(slots[v], key=lambda f: (f.size, format_formula(f, matrix)))
        parts.append(", ".join(format_formula(f, matrix) for f in fs))
    return " => ".join(p if p else "" for p in parts).replace("  ", " ").strip()


def format_derivation(d, matrix):
    lines = []
    for step in d.steps:
        just = step.rule
        if step.params:
            if step.rule == "intro":
                just += f" {step.params[0]}@{format_value(_value(matrix, step.params[1]))}"
            else:
                just += " " + " ".join(p if isinstance(p, str) else format_value(p) for p in step.params)
        if step.premisses:
            just += " from " + ", ".join(map(str, step.premisses))
        lines.append(f"{step.index}: {format_sequent(step.sequent, matrix)} by {just}")
    return "\n".join(lines)


def parse_derivation(text, matrix):
    """Read ``N: <sequent> by <rule> [params] [from k, l, ...]`` lines; ``#`` starts a comment."""
    steps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            head, body = line.split(":", 1)
            index = int(head)
            seq_text, just = body.rsplit(" by ", 1)
        except ValueError:
            raise FormulaSyntaxError(f"line {lineno}: expected 'N: sequent by rule'", 0) from None
        prems = ()
        if " from " in just:
            just, refs = just.split(" from ", 1)
            try:
                prems = tuple(int(r) for r in refs.replace(",", " ").split())
            except ValueError:
                raise FormulaSyntaxError(f"line {lineno}: bad premiss list {refs!r}", 0) from None
        words = just.split()
        if not words:
            raise FormulaSyntaxError(f"line {lineno}: missing rule name", 0)
        rule, params = words[0], words[1:]
        if rule == "intro":
            if len(params) != 1 or "@" not in params[0]:
                raise FormulaSyntaxError(f"line {lineno}: intro needs 'conn@value'", 0)
            conn, val = params[0].split("@", 1)
            params = [conn, val]
        steps.append(DerivationStep(index, parse_sequent(seq_text, matrix), rule, tuple(params), prems))
    return SequentDerivation(steps)


def check_valid_by_enumeration(seq, matrix):
    """Brute-force validity of a sequent (for cross-checks)."""
    atoms = sorted_atoms([x.formula for x in seq])
    for vals in itertools.product(matrix.values, repeat=len(atoms)):
        env = dict(zip(atoms, vals))
        if not any(evaluate(x.formula, env, matrix) == x.value for x in seq):
            return False, env
    return True, None
