"""Signs (nonempty sets of truth values) and signed formulas."""

import itertools
from dataclasses import dataclass

from ..core.formula import Atom, Formula
from ..core.syntax import format_formula
from ..core.values import format_sign
from ..errors import MVLogicError


def make_sign(values, matrix):
    """A sign over ``matrix``: a nonempty frozenset of its truth values."""
    if not isinstance(values, (set, frozenset, list, tuple)):
        values = [values]
    sign = frozenset(matrix.value(v) for v in values)
    if not sign:
        raise MVLogicError("a sign must be nonempty")
    return sign


@dataclass(frozen=True)
class SignedFormula:
    """``formula`` takes a value in ``sign``."""

    formula: Formula
    sign: frozenset

    @property
    def is_literal(self):
        return isinstance(self.formula, Atom)

    @property
    def is_singleton(self):
        return len(self.sign) == 1

    @property
    def value(self):
        """The value of a singleton sign."""
        if len(self.sign) != 1:
            raise MVLogicError("not a singleton sign")
        return next(iter(self.sign))

    def holds(self, valuation, matrix):
        from ..core.semantics import evaluate

        return evaluate(self.formula, valuation, matrix) in self.sign

    def format(self, matrix=None):
        text = format_formula(self.formula, matrix)
        if not isinstance(self.formula, Atom):
            text = f"({text})"
        return f"{text}:{format_sign(self.sign, matrix)}"


def signed(formula, sign, matrix=None):
    if matrix is not None:
        sign = make_sign(sign, matrix)
    return SignedFormula(formula, frozenset(sign))


def sign_apply(conn, signs):
    """Image of a connective on signs: {c(i1, ..., iu) : it in St}."""
    signs = list(signs)
    if len(signs) != conn.arity:
        raise MVLogicError(f"{conn.name} takes {conn.arity} signs, got {len(signs)}")
    return frozenset(conn.table[t] for t in itertools.product(*signs))


def sign_closure(generators, matrix):
    """Least family of signs containing ``generators`` and closed under every connective."""
    signs = {frozenset(g) for g in generators}
    for s in signs:
        if not s or not s <= matrix.all_values:
            raise MVLogicError("generators must be nonempty subsets of M")
    conns = matrix.connectives
    while True:
        new = set()
        pool = list(signs)
        for conn in conns:
            for combo in itertools.product(pool, repeat=conn.arity):
                out = sign_apply(conn, combo)
                if out not in signs:
                    new.add(out)
        if not new:
            return frozenset(signs)
        signs |= new


def singleton_signs(matrix):
    return frozenset(frozenset([v]) for v in matrix.values)


def default_sign_system(matrix):
    """All singletons, the undesignated set M\\D (when nonempty) and M."""
    out = set(singleton_signs(matrix))
    if matrix.undesignated:
        out.add(matrix.undesignated)
    out.add(matrix.all_values)
    return frozenset(out)


def sort_signs(signs, matrix):
    """Deterministic order: by size, then by the positions of the values in M."""
    return sorted(signs, key=lambda s: (len(s), sorted(matrix.index(v) for v in s)))
