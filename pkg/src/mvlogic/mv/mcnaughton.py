"""One-variable McNaughton functions as exact piecewise-linear maps on [0, 1].

Pieces are a·x + b with integer a, b. Breakpoints are rationals; every
crossing of two such pieces is rational, so all arithmetic is exact.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..core.formula import Atom, sorted_atoms
from ..core.values import format_value
from ..errors import MVLogicError, ResourceLimitExceeded

ZERO, ONE = Fraction(0), Fraction(1)


@dataclass(frozen=True)
class PLFunction:
    """``breakpoints`` 0 = x0 < ... < xm = 1; ``pieces[i] = (a, b)`` on [x_i, x_(i+1)]."""

    breakpoints: tuple
    pieces: tuple

    def __post_init__(self):
        bp, pcs = self.breakpoints, self.pieces
        if len(bp) < 2 or bp[0] != 0 or bp[-1] != 1 or len(pcs) != len(bp) - 1:
            raise MVLogicError("breakpoints must run from 0 to 1 with one piece per segment")
        for a, b in pcs:
            if type(a) is not int or type(b) is not int:
                raise MVLogicError("coefficients must be integers")
        for i, x in enumerate(bp):
            if i and bp[i - 1] >= x:
                raise MVLogicError("breakpoints must increase")
            left = _at(pcs[i - 1], x) if i else None
            right = _at(pcs[i], x) if i < len(pcs) else None
            if left is not None and right is not None and left != right:
                raise MVLogicError(f"discontinuity at {x}")
            v = right if right is not None else left
            # linear pieces stay in range iff their ends do
            if not ZERO <= v <= ONE:
                raise MVLogicError(f"value {v} at {x} leaves [0,1]")

    def __call__(self, x):
        x = Fraction(x)
        if not ZERO <= x <= ONE:
            raise MVLogicError("argument outside [0,1]")
        for i, p in enumerate(self.pieces):
            if x <= self.breakpoints[i + 1]:
                return _at(p, x)
        raise AssertionError("unreachable")

    def is_one(self):
        return self.pieces == ((0, 1),)

    def __str__(self):
        parts = []
        for i, (a, b) in enumerate(self.pieces):
            lo, hi = self.breakpoints[i], self.breakpoints[i + 1]
            parts.append(f"[{format_value(lo)},{format_value(hi)}]: {a}x{b:+d}")
        return " ; ".join(parts)


def _at(piece, x):
    a, b = piece
    return a * x + b


def constant(c):
    return PLFunction((ZERO, ONE), ((0, c),))


IDENTITY = PLFunction((ZERO, ONE), ((1, 0),))


def normalize(bp, pieces):
    """Merge neighbouring segments that carry the same piece."""
    out_bp, out_p = [bp[0]], []
    for i, p in enumerate(pieces):
        if out_p and out_p[-1] == p:
            out_bp[-1] = bp[i + 1]
        else:
            out_p.append(p)
            out_bp.append(bp[i + 1])
    return PLFunction(tuple(out_bp), tuple(out_p))


def _refine(f, g):
    """Common segments of f and g with the piece of each on that segment."""
    bp = sorted(set(f.breakpoints) | set(g.breakpoints))
    i = j = 0
    fb, gb = f.breakpoints, g.breakpoints
    for lo, hi in zip(bp, bp[1:]):
        while fb[i + 1] <= lo:
            i += 1
        while gb[j + 1] <= lo:
            j += 1
        yield lo, hi, f.pieces[i], g.pieces[j]


def _extremum(lo, hi, p, q, larger):
    """Pieces of max(p, q) (``larger``) or min(p, q) on [lo, hi], split at the crossing."""
    da, db = p[0] - q[0], p[1] - q[1]  # p - q = da*x + db
    if da == 0:
        return [(hi, p if (db >= 0) == larger else q)]
    x = Fraction(-db, da)
    if lo < x < hi:
        # p - q changes sign at x; it is increasing iff da > 0
        first, second = (q, p) if (da > 0) == larger else (p, q)
        return [(x, first), (hi, second)]
    mid_positive = (da * (lo + hi) / 2 + db) >= 0
    return [(hi, p if mid_positive == larger else q)]


def _combine(f, g, op):
    """Pointwise ``op(p, q)``; op maps two pieces to (piece1, piece2, larger?)."""
    bp, pieces = [ZERO], []
    for lo, hi, p, q in _refine(f, g):
        u, v, larger = op(p, q)
        for t, r in _extremum(lo, hi, u, v, larger):
            bp.append(t)
            pieces.append(r)
    return normalize(bp, pieces)


def pl_neg(f):
    return PLFunction(f.breakpoints, tuple((-a, 1 - b) for a, b in f.pieces))


def pl_oplus(f, g):
    return _combine(f, g, lambda p, q: ((p[0] + q[0], p[1] + q[1]), (0, 1), False))


def pl_otimes(f, g):
    return _combine(f, g, lambda p, q: ((p[0] + q[0], p[1] + q[1] - 1), (0, 0), True))


def pl_vee(f, g):
    return _combine(f, g, lambda p, q: (p, q, True))


def pl_wedge(f, g):
    return _combine(f, g, lambda p, q: (p, q, False))


def pl_imp(f, g):
    return pl_oplus(pl_neg(f), g)


def pl_iff(f, g):
    return pl_wedge(pl_imp(f, g), pl_imp(g, f))


_OPS = {
    "neg": pl_neg,
    "oplus": pl_oplus,
    "otimes": pl_otimes,
    "or": pl_vee,
    "and": pl_wedge,
    "imp": pl_imp,
    "iff": pl_iff,
}


def mcnaughton_compile(formula):
    """The function [0,1] -> [0,1] of a formula in at most one atom.

    Connectives are read by their Łukasiewicz names: neg, oplus, otimes,
    imp, or (max), and (min), iff, and the constants zero and one.
    """
    atoms = sorted_atoms([formula])
    if len(atoms) > 1:
        raise MVLogicError(f"one variable expected, got {', '.join(atoms)}")
    cache = {}

    def go(f):
        if f in cache:
            return cache[f]
        if isinstance(f, Atom):
            out = IDENTITY
        elif f.conn == "zero" and not f.args:
            out = constant(0)
        elif f.conn == "one" and not f.args:
            out = constant(1)
        elif f.conn in _OPS:
            out = _OPS[f.conn](*(go(a) for a in f.args))
        else:
            raise MVLogicError(f"no piecewise-linear reading for connective {f.conn!r}")
        cache[f] = out
        return out

    return go(formula)


def pl_decide(formula, query="is_one", other=None):
    """``is_one``: the formula is 1 everywhere; ``equals``: same function as ``other``."""
    f = mcnaughton_compile(formula)
    if query == "is_one":
        return f.is_one()
    if query == "equals":
        if other is None:
            raise MVLogicError("equals needs a second formula")
        return f == mcnaughton_compile(other)
    raise ValueError("query is 'is_one' or 'equals'")


def unit_eval(formula, valuation):
    """Value in the standard MV-algebra on [0,1] with exact rationals."""
    def go(f):
        if isinstance(f, Atom):
            return Fraction(valuation[f.name])
        args = [go(a) for a in f.args]
        c = f.conn
        if c == "zero":
            return ZERO
        if c == "one":
            return ONE
        if c == "neg":
            return 1 - args[0]
        if c == "oplus":
            return min(args[0] + args[1], ONE)
        if c == "otimes":
            return max(args[0] + args[1] - 1, ZERO)
        if c == "imp":
            return min(1 - args[0] + args[1], ONE)
        if c == "or":
            return max(args)
        if c == "and":
            return min(args)
        if c == "iff":
            return 1 - abs(args[0] - args[1])
        raise MVLogicError(f"no [0,1] reading for connective {c!r}")

    return go(formula)


def grid_falsify(formula, max_denominator, cap=1_000_000):
    """First valuation over {0, 1/k, ..., 1}, k <= max_denominator, where the value is not 1.

    Returns ``(valuation, value)`` or ``None``. ``None`` only means that no
    counterexample lies on these grids.
    """
    atoms = sorted_atoms([formula])
    seen = set()
    count = 0
    for k in range(1, max_denominator + 1):
        grid = [Fraction(i, k) for i in range(k + 1)]
        for point in itertools.product(grid, repeat=len(atoms)):
            if point in seen:
                continue
            seen.add(point)
            count += 1
            if count > cap:
                raise ResourceLimitExceeded(f"grid search exceeds {cap} points")
            valuation = dict(zip(atoms, point))
            v = unit_eval(formula, valuation)
            if v != ONE:
                return valuation, v
    return None


__all__ = [
    "IDENTITY",
    "PLFunction",
    "constant",
    "grid_falsify",
    "mcnaughton_compile",
    "normalize",
    "pl_decide",
    "unit_eval",
]
