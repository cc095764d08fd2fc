"""Finite first-order structures with distribution quantifiers.

A quantifier is interpreted by a map from nonempty sets of truth values to a
truth value; ``QxA(x)`` takes the value of that map on the set of values
``{S(A(a)) : a in S}`` (the distribution of ``A``).
"""

import itertools
from dataclasses import dataclass, field

from ..errors import EvaluationError, MatrixError


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Func:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Elem:
    """A domain element used as an individual constant (the L(S) extension)."""

    element: object


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Conn:
    conn: str
    args: tuple = ()


@dataclass(frozen=True)
class Quant:
    quantifier: str
    var: str
    body: object


def nonempty_subsets(values):
    values = list(values)
    for r in range(1, len(values) + 1):
        for combo in itertools.combinations(values, r):
            yield frozenset(combo)


def quantifier_from_order(matrix, kind="inf"):
    """Extensional quantifier map ``X -> inf X`` (or ``sup X``) over the declared order."""
    if matrix.order is None:
        raise MatrixError("deriving inf/sup quantifiers needs a declared order")
    bound = matrix.inf if kind == "inf" else matrix.sup
    return {X: bound(X) for X in nonempty_subsets(matrix.values)}


@dataclass(frozen=True)
class FOStructure:
    """Finite domain plus interpretations of function, predicate and quantifier symbols."""

    domain: tuple
    functions: dict = field(default_factory=dict)
    predicates: dict = field(default_factory=dict)
    quantifiers: dict = field(default_factory=dict)

    def validate(self, matrix):
        if not self.domain:
            raise MatrixError("the domain must be nonempty")
        values = set(matrix.values)
        need = set(nonempty_subsets(matrix.values))
        for name, q in self.quantifiers.items():
            if set(q) != need:
                raise MatrixError(f"quantifier {name} must be defined on all {len(need)} nonempty subsets")
            if not set(q.values()) <= values:
                raise MatrixError(f"quantifier {name} leaves M")
        for name, table in self.predicates.items():
            if not set(table.values()) <= values:
                raise MatrixError(f"predicate {name} takes values outside M")


def _term(term, structure, env):
    if isinstance(term, Var):
        if term.name not in env:
            raise EvaluationError(f"unbound variable {term.name}")
        return env[term.name]
    if isinstance(term, Elem):
        return term.element
    if isinstance(term, Func):
        if term.name not in structure.functions:
            raise EvaluationError(f"function symbol {term.name} missing from structure")
        args = tuple(_term(t, structure, env) for t in term.args)
        return structure.functions[term.name][args]
    raise TypeError(f"not a term: {term!r}")


def evaluate_sentence(structure, sentence, matrix, env=None):
    """Value of a closed first-order formula in a finite structure."""
    env = dict(env or {})

    def ev(f, env):
        if isinstance(f, Pred):
            if f.name not in structure.predicates:
                raise EvaluationError(f"predicate symbol {f.name} missing from structure")
            args = tuple(_term(t, structure, env) for t in f.args)
            return structure.predicates[f.name][args]
        if isinstance(f, Conn):
            return matrix.apply(f.conn, *(ev(a, env) for a in f.args))
        if isinstance(f, Quant):
            if f.quantifier not in structure.quantifiers:
                raise EvaluationError(f"quantifier {f.quantifier} missing from structure")
            dist = frozenset(ev(f.body, {**env, f.var: a}) for a in structure.domain)
            return structure.quantifiers[f.quantifier][dist]
        raise TypeError(f"not a first-order formula: {f!r}")

    return ev(sentence, env)
