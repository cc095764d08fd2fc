"""Saturation of signed clause sets and refutations.

From ``D, p^i`` and ``D', p^j`` with ``i != j`` the rule derives ``D, D'``.
No literal outside the input ever appears, so the closure is finite and
the loop below always stops.
"""

import random
import re
from dataclasses import dataclass

from ..core.formula import sorted_atoms, substitute
from ..core.semantics import Verdict, evaluate
from ..core.values import format_value, parse_value
from ..errors import MVLogicError, ResourceLimitExceeded, VerificationError
from ..logics.marker import negation_marker
from .clauses import SignedClause, clausify

DEFAULT_CLAUSE_CAP = 200_000


@dataclass(frozen=True)
class RefutationStep:
    index: int
    clause: SignedClause
    parents: tuple = ()  # empty for input clauses
    atom: str = None
    i: object = None
    j: object = None

    @property
    def is_input(self):
        return not self.parents


@dataclass
class Refutation:
    steps: list

    @property
    def conclusion(self):
        return self.steps[-1].clause

    def inputs(self):
        return [s.clause for s in self.steps if s.is_input]

    def format(self, matrix=None):
        return format_refutation(self, matrix)


@dataclass
class SaturationResult:
    unsat: bool
    refutation: Refutation = None
    clauses: frozenset = frozenset()
    generated: int = 0

    def __bool__(self):
        return self.unsat


def resolvents(c1, c2):
    """Every ``(resolvent, atom, i, j)`` of ``c1`` (carrying p^i) with ``c2`` (carrying p^j)."""
    out = []
    for a, i in c1.literals:
        for b, j in c2.literals:
            if a == b and i != j:
                lits = (c1.literals - {(a, i)}) | (c2.literals - {(b, j)})
                out.append((SignedClause(lits), a, i, j))
    return out


def _tautology(lits, size):
    per = {}
    for a, v in lits:
        per[a] = per.get(a, 0) + 1
    return any(k == size for k in per.values())


def saturate(clauses, matrix=None, seed=None, max_clauses=DEFAULT_CLAUSE_CAP):
    """Close ``clauses`` under resolution or stop at the empty clause.

    Given-clause loop with forward and backward subsumption; tautologies
    (an atom carrying every value) are dropped when ``matrix`` is known.
    The next given clause is the shortest one, or a random one when ``seed``
    is set.
    """
    size = len(matrix.values) if matrix is not None else None
    records = []  # (clause, parents, atom, i, j)
    index = {}

    def record(c, parents=(), atom=None, i=None, j=None):
        if c.literals not in index:
            index[c.literals] = len(records)
            records.append((c, parents, atom, i, j))
        return index[c.literals]

    rng = random.Random(seed) if seed is not None else None
    pending = []
    for c in sorted(set(clauses), key=lambda c: (len(c), c.format(matrix))):
        if size and _tautology(c.literals, size):
            continue
        pending.append(record(c))
        if c.is_empty:
            return SaturationResult(True, _extract(records, index[c.literals]), frozenset(), 0)

    processed = []  # record ids
    generated = 0
    while pending:
        if rng is None:
            k = min(range(len(pending)), key=lambda n: (len(records[pending[n]][0]), pending[n]))
        else:
            k = rng.randrange(len(pending))
        gid = pending.pop(k)
        g = records[gid][0].literals
        if any(records[p][0].literals <= g for p in processed):
            continue
        processed = [p for p in processed if not g <= records[p][0].literals]
        for pid in processed:
            parent = records[pid][0]
            for res, a, i, j in resolvents(records[gid][0], parent):
                generated += 1
                if size and _tautology(res.literals, size):
                    continue
                lits = res.literals
                if any(records[p][0].literals <= lits for p in processed):
                    continue
                if any(records[p][0].literals <= lits for p in pending):
                    continue
                rid = record(res, (gid, pid), a, i, j)
                if res.is_empty:
                    return SaturationResult(True, _extract(records, rid), None, generated)
                pending.append(rid)
                if len(records) > max_clauses:
                    raise ResourceLimitExceeded(f"saturation exceeds {max_clauses} clauses")
        processed.append(gid)
    final = frozenset(records[p][0] for p in processed)
    return SaturationResult(False, None, final, generated)


def _extract(records, rid):
    """The ancestry of record ``rid``, renumbered from 1 in dependency order."""
    needed, stack = set(), [rid]
    while stack:
        r = stack.pop()
        if r in needed:
            continue
        needed.add(r)
        stack.extend(records[r][1])
    order = sorted(needed)  # parents are always recorded before children
    number = {r: n for n, r in enumerate(order, 1)}
    steps = []
    for r in order:
        c, parents, atom, i, j = records[r]
        steps.append(RefutationStep(number[r], c, tuple(number[p] for p in parents), atom, i, j))
    return Refutation(steps)


def check_refutation(ref, inputs=None):
    """``(ok, step, reason)``: each resolvent correctly formed with i != j, ending in {}."""
    seen = {}
    allowed = None if inputs is None else {c.literals for c in inputs}
    for step in ref.steps:
        if step.index in seen:
            return False, step.index, "duplicate step number"
        if step.is_input:
            if allowed is not None and step.clause.literals not in allowed:
                return False, step.index, "not an input clause"
        else:
            if len(step.parents) != 2 or any(p not in seen for p in step.parents):
                return False, step.index, "parents must be two earlier steps"
            if step.i == step.j:
                return False, step.index, "resolution requires i ≠ j"
            c1, c2 = (seen[p] for p in step.parents)
            a = step.atom
            if (a, step.i) not in c1.literals or (a, step.j) not in c2.literals:
                return False, step.index, f"parents do not carry {a}:{format_value(step.i)} and {a}:{format_value(step.j)}"
            want = (c1.literals - {(a, step.i)}) | (c2.literals - {(a, step.j)})
            if want != step.clause.literals:
                return False, step.index, "clause is not the resolvent of its parents"
        seen[step.index] = step.clause
    if not ref.steps or not ref.steps[-1].clause.is_empty:
        return False, None, "does not end in the empty clause"
    return True, None, None


def format_refutation(ref, matrix=None):
    """One numbered clause per line; resolvents name parents, atom and the two values.

    ``3: {q:0} <- 1, 2 on p 1 vs 0`` means clause 3 resolves 1 (carrying p:1)
    against 2 (carrying p:0).
    """
    lines = []
    for s in ref.steps:
        text = f"{s.index}: {s.clause.format(matrix)}"
        if s.is_input:
            text += " input"
        else:
            text += f" <- {s.parents[0]}, {s.parents[1]} on {s.atom} {format_value(s.i)} vs {format_value(s.j)}"
        lines.append(text)
    return "\n".join(lines)


_STEP = re.compile(r"^\s*(\d+):\s*\{(.*?)\}\s*(input|<-\s*(\d+)\s*,\s*(\d+)\s+on\s+(\S+)\s+(\S+)\s+vs\s+(\S+))\s*$")


def parse_refutation(text):
    steps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        m = _STEP.match(raw)
        if not m:
            raise MVLogicError(f"line {lineno}: cannot read refutation step")
        lits = set()
        for part in filter(None, (x.strip() for x in m.group(2).split(","))):
            a, _, v = part.partition(":")
            lits.add((a.strip(), parse_value(v)))
        c = SignedClause(frozenset(lits))
        if m.group(3) == "input":
            steps.append(RefutationStep(int(m.group(1)), c))
        else:
            steps.append(
                RefutationStep(
                    int(m.group(1)), c, (int(m.group(4)), int(m.group(5))), m.group(6),
                    parse_value(m.group(7)), parse_value(m.group(8)),
                )
            )
    return Refutation(steps)


def clause_set(formulas, matrix, verify=True):
    """E_Gamma: the union of the clause translations of ``formulas``."""
    out = set()
    for f in formulas:
        out |= clausify(f, matrix, verify=verify)
    return frozenset(out)


def find_model(clauses, matrix, atoms=()):
    """A valuation satisfying every clause, by backtracking over atoms; ``None`` if none."""
    clauses = list(clauses)
    names = sorted({a for c in clauses for a in c.atoms()} | set(atoms))
    model = {}

    def ok(c):
        # falsified only when every literal's atom is set and disagrees
        for a, v in c.literals:
            if a not in model or model[a] == v:
                return True
        return False

    def go(k):
        if k == len(names):
            return True
        for v in matrix.values:
            model[names[k]] = v
            if all(ok(c) for c in clauses) and go(k + 1):
                return True
        del model[names[k]]
        return False

    return dict(model) if go(0) else None


def resolve_consequence(premises, goal, matrix, marker=None, seed=None, max_clauses=DEFAULT_CLAUSE_CAP):
    """Decide ``premises |= goal`` as unsatisfiability of premises plus N(goal).

    Returns ``(verdict, saturation)``. When the clauses saturate, the
    countermodel is a model of the saturated set and is re-checked against
    the original query.
    """
    premises = list(premises)
    n = negation_marker(matrix, marker)
    negated = substitute(n, {"p": goal})
    clauses = clause_set(premises + [negated], matrix)
    sat = saturate(clauses, matrix, seed=seed, max_clauses=max_clauses)
    if sat.unsat:
        return Verdict(True), sat
    atoms = sorted_atoms(premises + [goal])
    model = find_model(sat.clauses, matrix, atoms)
    if model is None:
        raise VerificationError("saturated clause set has no model")
    if any(evaluate(b, model, matrix) not in matrix.designated for b in premises) or (
        evaluate(goal, model, matrix) in matrix.designated
    ):
        raise VerificationError("model of the saturated clauses is not a countermodel")
    return Verdict(False, model), sat


def is_satisfiable(formulas, matrix, seed=None):
    """Whether some valuation designates every formula, by saturation."""
    return not saturate(clause_set(formulas, matrix), matrix, seed=seed).unsat
