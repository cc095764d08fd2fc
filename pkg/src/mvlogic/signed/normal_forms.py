"""S-th conjunctive and disjunctive normal forms for connectives.

A conjunct of a DNF constrains each argument place to a set of values, so it
is a box (product of sets) inside the rows where the connective lands in S.
A clause of a CNF is falsified exactly on a box inside the other rows. The
forms below cover those rows with maximal boxes whose sides the sign system
can express, chosen greedily, and every result is checked row by row
before it is returned.
"""

import functools
import itertools
from dataclasses import dataclass

from ..core.formula import Atom, placeholder_atoms, substitute
from ..core.values import format_sign
from ..errors import MVLogicError, VerificationError
from .expressions import FALSE, TRUE, And, Lit, Or
from .signs import SignedFormula, default_sign_system, sort_signs


class SignSystemError(MVLogicError):
    """The sign system cannot express the requested normal form."""


@dataclass(frozen=True)
class ClauseSet:
    """A CNF (conjunction of disjunctive clauses) or DNF (disjunction of conjunctions).

    ``clauses`` is a tuple of tuples of :class:`SignedFormula`; order is
    deterministic but carries no meaning.
    """

    mode: str
    clauses: tuple

    def as_sets(self):
        return frozenset(frozenset(c) for c in self.clauses)

    def __len__(self):
        return len(self.clauses)

    def to_expression(self):
        inner, outer = (Or, And) if self.mode == "cnf" else (And, Or)
        unit_in, unit_out = (FALSE, TRUE) if self.mode == "cnf" else (TRUE, FALSE)
        parts = []
        for clause in self.clauses:
            lits = [Lit(sf) for sf in clause]
            parts.append(lits[0] if len(lits) == 1 else inner(tuple(lits)) if lits else unit_in)
        if not parts:
            return unit_out
        return parts[0] if len(parts) == 1 else outer(tuple(parts))

    def holds(self, valuation, matrix):
        from .expressions import eval_sfe

        return eval_sfe(self.to_expression(), valuation, matrix)

    def substitute(self, mapping):
        """Replace placeholder atoms by formulas (``mapping`` keyed by atom name)."""
        return ClauseSet(
            self.mode,
            tuple(
                tuple(SignedFormula(substitute(sf.formula, mapping), sf.sign) for sf in clause)
                for clause in self.clauses
            ),
        )

    def format(self, matrix=None):
        """One clause per line, literals joined by `` | `` (CNF) or `` & `` (DNF)."""
        sep = " | " if self.mode == "cnf" else " & "
        empty = "false" if self.mode == "cnf" else "true"
        lines = []
        for clause in self.clauses:
            lines.append(sep.join(sf.format(matrix) for sf in clause) if clause else empty)
        return "\n".join(lines)


def _intersection_closure(signs, full):
    out = set(signs) | {full}
    while True:
        new = {a & b for a in out for b in out} - out - {frozenset()}
        if not new:
            return out
        out |= new


def _union_closure(signs):
    out = set(signs)
    while True:
        new = {a | b for a in out for b in out} - out
        if not new:
            return out
        out |= new


def _maximal_boxes(target, sides, u):
    """Maximal boxes (tuples of sides) all of whose points lie in ``target``."""
    inside = []
    for box in itertools.product(sides, repeat=u):
        if all(t in target for t in itertools.product(*box)):
            inside.append(box)
    maximal = []
    for box in inside:
        if not any(o != box and all(a <= b for a, b in zip(box, o)) for o in inside):
            maximal.append(box)
    return maximal


def _cover(target, boxes, full):
    points = {box: frozenset(itertools.product(*box)) for box in boxes}
    uncovered = set(target)
    chosen = []
    while uncovered:
        best = max(
            boxes,
            key=lambda b: (len(points[b] & uncovered), -sum(s != full for s in b)),
            default=None,
        )
        if best is None or not points[best] & uncovered:
            return None
        chosen.append(best)
        uncovered -= points[best]
    # absorption: drop boxes covered by the others
    for box in list(chosen):
        others = set().union(*(points[b] for b in chosen if b != box)) if len(chosen) > 1 else set()
        if points[box] <= others:
            chosen.remove(box)
    return chosen


def _as_intersection(side, signs):
    supers = [s for s in signs if side <= s]
    minimal = [s for s in supers if not any(o < s for o in supers)]
    if not minimal or frozenset.intersection(*minimal) != side:
        return None
    for s in list(minimal):
        rest = [o for o in minimal if o != s]
        if rest and frozenset.intersection(*rest) == side:
            minimal = rest
    return minimal


def _as_union(part, signs):
    subs = [s for s in signs if s <= part]
    maximal = [s for s in subs if not any(s < o for o in subs)]
    if not maximal or frozenset.union(*maximal) != part:
        return None
    for s in list(maximal):
        rest = [o for o in maximal if o != s]
        if rest and frozenset.union(*rest) == part:
            maximal = rest
    return maximal


def normal_form(conn, sign, mode="cnf", signsystem=None, matrix=None):
    """S-th CNF or DNF for ``conn`` over placeholder atoms p, q, r, ...

    ``signsystem`` defaults to all singletons, M\\D and M. Literal signs are
    drawn from it; the returned forms are checked against the table.
    """
    if matrix is None:
        raise MVLogicError("normal_form needs the matrix")
    name = conn if isinstance(conn, str) else conn.name
    matrix.connective(name)
    sign = frozenset(sign)
    if not sign or not sign <= matrix.all_values:
        raise MVLogicError("sign must be a nonempty subset of M")
    if mode not in ("cnf", "dnf"):
        raise ValueError("mode is 'cnf' or 'dnf'")
    system = default_sign_system(matrix) if signsystem is None else frozenset(map(frozenset, signsystem))
    for s in system:
        if not s or not s <= matrix.all_values:
            raise MVLogicError("every sign of the system must be a nonempty subset of M")
    return _normal_form(matrix, name, sign, mode, system)


@functools.lru_cache(maxsize=4096)
def _normal_form(matrix, name, sign, mode, system):
    conn = matrix.connective(name)
    u = conn.arity
    full = matrix.all_values
    atoms = [Atom(a) for a in placeholder_atoms(u)]
    rows = list(itertools.product(matrix.values, repeat=u))
    hits = {t for t in rows if conn.table[t] in sign}
    ordered = sort_signs(system, matrix)

    if mode == "dnf":
        target = hits
        sides = sort_signs(_intersection_closure(system, full), matrix)
    else:
        target = set(rows) - hits
        sides = sort_signs({full - t for t in _union_closure(system)} | {full}, matrix)
        sides = [s for s in sides if s]

    if not target:
        clauses = ()
    else:
        boxes = _maximal_boxes(target, sides, u)
        chosen = _cover(target, boxes, full)
        if chosen is None:
            raise SignSystemError(f"sign system cannot express the {mode} of {name} at {format_sign(sign, matrix)}")
        clauses = []
        for box in chosen:
            lits = []
            for atom, side in zip(atoms, box):
                if side == full:
                    continue
                if mode == "dnf":
                    parts = _as_intersection(side, ordered)
                else:
                    parts = _as_union(full - side, ordered)
                if parts is None:
                    raise SignSystemError(f"sign system cannot express {format_sign(side, matrix)}")
                lits.extend(SignedFormula(atom, s) for s in sort_signs(parts, matrix))
            clauses.append(tuple(lits))
        clauses = tuple(clauses)

    result = ClauseSet(mode, clauses)
    _verify(result, conn, sign, matrix, atoms, rows)
    return result


def _verify(result, conn, sign, matrix, atoms, rows):
    names = [a.name for a in atoms]
    for t in rows:
        valuation = dict(zip(names, t))
        if _holds(result, valuation) != (conn.table[t] in sign):
            raise VerificationError(f"normal form for {conn.name} disagrees with its table at {t}")


def _holds(cs, valuation):
    def lit_holds(sf):
        return valuation[sf.formula.name] in sf.sign

    if cs.mode == "cnf":
        return all(any(lit_holds(sf) for sf in c) for c in cs.clauses)
    return any(all(lit_holds(sf) for sf in c) for c in cs.clauses)


def instantiate(cs, args):
    """Substitute argument formulas for the placeholder atoms of a normal form."""
    names = placeholder_atoms(len(args))
    return cs.substitute(dict(zip(names, args)))
