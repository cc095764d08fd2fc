"""Signed clauses and the translation of a formula into them."""

import functools
import itertools
from dataclasses import dataclass

from ..core.formula import Atom, placeholder_atoms, sorted_atoms
from ..core.semantics import compile_formula
from ..core.values import format_value
from ..errors import VerificationError
from ..signed.normal_forms import normal_form
from ..signed.signs import SignedFormula, singleton_signs

VERIFY_ROW_CAP = 20_000


@dataclass(frozen=True)
class SignedClause:
    """A disjunction of literals ``p^i``; ``literals`` holds ``(atom name, value)`` pairs."""

    literals: frozenset

    def __iter__(self):
        return iter(self.literals)

    def __len__(self):
        return len(self.literals)

    @property
    def is_empty(self):
        return not self.literals

    def atoms(self):
        return {a for a, _ in self.literals}

    def signed_formulas(self):
        return frozenset(SignedFormula(Atom(a), frozenset([v])) for a, v in self.literals)

    def holds(self, valuation):
        return any(valuation.get(a) == v for a, v in self.literals)

    def is_tautology(self, matrix):
        per_atom = {}
        for a, v in self.literals:
            per_atom.setdefault(a, set()).add(v)
        return any(len(vs) == len(matrix.values) for vs in per_atom.values())

    def sorted_literals(self, matrix=None):
        order = {v: i for i, v in enumerate(matrix.values)} if matrix is not None else {}
        return sorted(self.literals, key=lambda lv: (lv[0], order.get(lv[1], 0), str(lv[1])))

    def format(self, matrix=None):
        if not self.literals:
            return "{}"
        return "{" + ", ".join(f"{a}:{format_value(v)}" for a, v in self.sorted_literals(matrix)) + "}"


def clause(*literals):
    return SignedClause(frozenset(literals))


def _prune(clauses, matrix):
    """Drop tautologies and subsumed clauses; keep a deterministic order."""
    out = []
    for c in sorted(set(clauses), key=len):
        if any(len(vs) == len(matrix.values) for vs in _by_atom(c).values()):
            continue
        if any(d <= c for d in out):
            continue
        out.append(c)
    return frozenset(out)


def _by_atom(c):
    out = {}
    for a, v in c:
        out.setdefault(a, set()).add(v)
    return out


def _or(parts, matrix):
    """CNF of a disjunction of CNFs (each a frozenset of clause frozensets)."""
    acc = frozenset([frozenset()])
    for part in parts:
        if not part:
            return frozenset()  # one disjunct is true
        acc = _prune((x | y for x in acc for y in part), matrix)
    return acc


def clausify(formula, matrix, sign=None, verify=True):
    """Clauses whose conjunction says "the value of ``formula`` lies in ``sign``".

    ``sign`` defaults to the designated set. Subformulas are translated with
    the singleton CNFs of their connectives; literals on one subformula are
    merged, so an argument signed with every value becomes true and one
    signed with none drops out. The result is compared with the truth table
    when it has at most ``VERIFY_ROW_CAP`` rows.
    """
    sign = matrix.designated if sign is None else frozenset(matrix.value(v) for v in sign)
    raw = _cnf(matrix, formula, frozenset(sign))
    result = frozenset(SignedClause(c) for c in raw)
    if verify:
        _verify(formula, sign, result, matrix)
    return result


@functools.lru_cache(maxsize=65536)
def _cnf(matrix, formula, sign):
    if sign == matrix.all_values:
        return frozenset()
    if not sign:
        return frozenset([frozenset()])
    if isinstance(formula, Atom):
        return frozenset([frozenset((formula.name, v) for v in sign)])
    # the CNF for the whole sign over singleton literals, one literal set per argument place
    whole = normal_form(formula.conn, sign, "cnf", singleton_signs(matrix), matrix)
    place = {name: i for i, name in enumerate(placeholder_atoms(len(formula.args)))}
    clauses = []
    for cl in whole.clauses:
        merged = {}
        for sf in cl:
            i = place[sf.formula.name]
            merged[i] = merged.get(i, frozenset()) | sf.sign
        parts = [_cnf(matrix, formula.args[i], s) for i, s in sorted(merged.items())]
        clauses.extend(_or(parts, matrix))
    return _prune(clauses, matrix)


def _verify(formula, sign, clauses, matrix):
    atoms = sorted_atoms([formula])
    if len(matrix.values) ** len(atoms) > VERIFY_ROW_CAP:
        return
    fn = compile_formula(formula, atoms, matrix)
    for vals in itertools.product(matrix.values, repeat=len(atoms)):
        valuation = dict(zip(atoms, vals))
        if all(c.holds(valuation) for c in clauses) != (fn(vals) in sign):
            raise VerificationError(f"clause translation disagrees with the table at {valuation}")


def format_clauses(clauses, matrix=None):
    ordered = sorted(clauses, key=lambda c: (len(c), c.format(matrix)))
    return "\n".join(c.format(matrix) for c in ordered)
