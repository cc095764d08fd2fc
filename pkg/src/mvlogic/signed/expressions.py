"""Boolean combinations of signed formulas, their two-valued evaluation and simplification."""

from dataclasses import dataclass

from ..core.semantics import evaluate
from .signs import SignedFormula


class SFExpression:
    __slots__ = ()

    def __and__(self, other):
        return And((self, other))

    def __or__(self, other):
        return Or((self, other))

    def __invert__(self):
        return Not(self)


@dataclass(frozen=True)
class Lit(SFExpression):
    sf: SignedFormula


@dataclass(frozen=True)
class Not(SFExpression):
    arg: SFExpression


@dataclass(frozen=True)
class And(SFExpression):
    args: tuple


@dataclass(frozen=True)
class Or(SFExpression):
    args: tuple


@dataclass(frozen=True)
class Const(SFExpression):
    value: bool


TRUE = Const(True)
FALSE = Const(False)


def lit(formula, sign):
    return Lit(SignedFormula(formula, frozenset(sign)))


def eval_sfe(expr, valuation, matrix):
    """The two-valued reading: A^S is true iff the value of A lies in S."""
    cache = {}

    def value_of(f):
        if f not in cache:
            cache[f] = evaluate(f, valuation, matrix)
        return cache[f]

    def go(e):
        if isinstance(e, Lit):
            return value_of(e.sf.formula) in e.sf.sign
        if isinstance(e, Not):
            return not go(e.arg)
        if isinstance(e, And):
            return all(go(a) for a in e.args)
        if isinstance(e, Or):
            return any(go(a) for a in e.args)
        if isinstance(e, Const):
            return e.value
        raise TypeError(f"not a signed formula expression: {e!r}")

    return go(expr)


def expr_formulas(expr):
    """Signed formulas occurring in ``expr``, in first-occurrence order."""
    out = {}

    def go(e):
        if isinstance(e, Lit):
            out.setdefault(e.sf, None)
        elif isinstance(e, Not):
            go(e.arg)
        elif isinstance(e, (And, Or)):
            for a in e.args:
                go(a)

    go(expr)
    return list(out)


def simplify(expr, matrix):
    """Equivalent ¬-free expression with the obvious contradictions and covers removed.

    Negated literals become the disjunction of the other singleton signs;
    A^S and A^T in one conjunction with no common value give false; a
    disjunction whose signs on one formula cover M gives true.
    """
    return _simp(expr, matrix, negate=False)


def _complement_literals(sf, matrix):
    rest = [v for v in matrix.values if v not in sf.sign]
    return [Lit(SignedFormula(sf.formula, frozenset([v]))) for v in rest]


def _simp(e, matrix, negate):
    if isinstance(e, Const):
        return Const(e.value != negate)
    if isinstance(e, Lit):
        if not negate:
            return e
        return _build(Or, _complement_literals(e.sf, matrix), matrix)
    if isinstance(e, Not):
        return _simp(e.arg, matrix, not negate)
    if isinstance(e, (And, Or)):
        kind = type(e)
        if negate:
            kind = Or if kind is And else And
        return _build(kind, [_simp(a, matrix, negate) for a in e.args], matrix)
    raise TypeError(f"not a signed formula expression: {e!r}")


def _build(kind, parts, matrix):
    unit, zero = (TRUE, FALSE) if kind is And else (FALSE, TRUE)
    flat = []
    for p in parts:
        if isinstance(p, kind):
            flat.extend(p.args)
        else:
            flat.append(p)
    out = []
    signs = {}
    for p in flat:
        if p == zero:
            return zero
        if p == unit or p in out:
            continue
        out.append(p)
        if isinstance(p, Lit):
            f = p.sf.formula
            if kind is And:
                signs[f] = signs.get(f, matrix.all_values) & p.sf.sign
                if not signs[f]:
                    return FALSE
            else:
                signs[f] = signs.get(f, frozenset()) | p.sf.sign
                if signs[f] == matrix.all_values:
                    return TRUE
    if not out:
        return unit
    if len(out) == 1:
        return out[0]
    return kind(tuple(out))


def format_expr(expr, matrix=None):
    if isinstance(expr, Lit):
        return expr.sf.format(matrix)
    if isinstance(expr, Const):
        return "true" if expr.value else "false"
    if isinstance(expr, Not):
        return f"not {_wrap(expr.arg, matrix)}"
    sep = " & " if isinstance(expr, And) else " | "
    return sep.join(_wrap(a, matrix) for a in expr.args)


def _wrap(e, matrix):
    text = format_expr(e, matrix)
    return f"[{text}]" if isinstance(e, (And, Or)) else text
