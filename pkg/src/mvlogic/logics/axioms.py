"""Derived Łukasiewicz connectives and Hilbert axiom schemes.

Schemes are formulas whose atoms ``alpha``, ``beta``, ``gamma`` act as
metavariables. Łukasiewicz schemes are stated over (->, ~) only; the
sums and products in Ax5'' and Ax6j are expanded through the templates.
"""

from ..core.formula import App, Atom, substitute
from ..errors import MVLogicError

METAVARS = ("alpha", "beta", "gamma")

A, B, C = (Atom(m) for m in METAVARS)


def imp(x, y):
    return App("imp", (x, y))


def neg(x):
    return App("neg", (x,))


def _or(x, y):
    return App("or", (x, y))


def _and(x, y):
    return App("and", (x, y))


ONE = App("one", ())

_TEMPLATES = {
    "zero": neg(ONE),
    "oplus": imp(neg(A), B),
    "otimes": neg(imp(neg(neg(A)), neg(B))),
    "or": imp(imp(A, B), B),
    "and": neg(imp(imp(neg(A), neg(B)), neg(B))),
    "iff": neg(imp(neg(neg(imp(A, B))), neg(imp(B, A)))),
}
_NAMES = {"vee": "or", "wedge": "and"}


def derived_lukasiewicz(conn):
    """Template over (->, ~, 1) defining ``conn`` in terms of ``alpha``/``beta``.

    ``conn`` is one of zero, oplus, otimes, vee (or), wedge (and), iff.
    """
    name = _NAMES.get(conn, conn)
    if name not in _TEMPLATES:
        raise MVLogicError(f"{conn!r} is not a derived Łukasiewicz connective")
    return _TEMPLATES[name]


def expand_derived(formula):
    """Rewrite every derived connective into (->, ~, 1), innermost first."""
    cache = {}

    def go(f):
        if isinstance(f, Atom):
            return f
        hit = cache.get(f)
        if hit is not None:
            return hit
        args = tuple(go(a) for a in f.args)
        if f.conn in _TEMPLATES:
            out = substitute(_TEMPLATES[f.conn], dict(zip(("alpha", "beta"), args)))
        else:
            out = App(f.conn, args)
        cache[f] = out
        return out

    return go(formula)


def multiple(k, x, conn="oplus"):
    """x (+) x (+) ... (+) x with k >= 1 summands, nested to the right."""
    if k < 1:
        raise ValueError("need at least one summand")
    out = x
    for _ in range(k - 1):
        out = App(conn, (x, out))
    return out


LUKASIEWICZ_AXIOMS = {
    "Ax1": imp(A, imp(B, A)),
    "Ax2": imp(imp(A, B), imp(imp(B, C), imp(A, C))),
    "Ax3": imp(imp(neg(A), neg(B)), imp(B, A)),
    "Ax4": imp(imp(imp(A, B), B), imp(imp(B, A), A)),
    "Ax5": imp(imp(neg(A), A), A),
    "Ax5'": imp(imp(imp(A, neg(A)), A), A),
}


def ax5n(n, expand=True):
    f = imp(multiple(n, A), multiple(n - 1, A))
    return expand_derived(f) if expand else f


def ax6_indices(n):
    return [k for k in range(2, n - 1) if (n - 1) % k]


def ax6j(n, j, expand=True):
    # the n-1 fold sum ranges over the whole implication
    if j not in ax6_indices(n):
        raise ValueError(f"Ax6j needs 1 < j < n-1 with j not dividing n-1 (n={n}, j={j})")
    body = imp(multiple(j, A), App("otimes", (A, multiple(j - 1, A))))
    f = multiple(n - 1, body)
    return expand_derived(f) if expand else f


SYSTEMS = ("Ax1-4", "Ax1-4+5", "Ax1-3+5'", "Ax1-4+5''+6j")


def axiom_system(system, n=None):
    """Named schemes of a Hilbert system, as a dict name -> scheme.

    ``Ax1-4+5''+6j`` may be written with its parameter, e.g. ``Ax1-4+5''+6j(5)``.
    """
    if system.startswith("Ax1-4+5''+6j"):
        rest = system[len("Ax1-4+5''+6j"):]
        if rest:
            if not (rest.startswith("(") and rest.endswith(")")):
                raise MVLogicError(f"bad system name {system!r}")
            n = int(rest[1:-1])
        if n is None or n < 3:
            raise MVLogicError("Ax1-4+5''+6j needs n >= 3")
        out = {k: LUKASIEWICZ_AXIOMS[k] for k in ("Ax1", "Ax2", "Ax3", "Ax4")}
        out["Ax5''"] = ax5n(n)
        for j in ax6_indices(n):
            out[f"Ax6_{j}"] = ax6j(n, j)
        return out
    picks = {
        "Ax1-4": ("Ax1", "Ax2", "Ax3", "Ax4"),
        "Ax1-4+5": ("Ax1", "Ax2", "Ax3", "Ax4", "Ax5"),
        "Ax1-3+5'": ("Ax1", "Ax2", "Ax3", "Ax5'"),
    }
    if system not in picks:
        raise MVLogicError(f"unknown axiom system {system!r}; expected one of {', '.join(SYSTEMS)}")
    return {k: LUKASIEWICZ_AXIOMS[k] for k in picks[system]}


IPC_AXIOMS = {
    "Ax1": imp(A, imp(B, A)),
    "Ax2": imp(imp(A, B), imp(imp(A, imp(B, C)), imp(A, C))),
    "Ax3": imp(A, imp(B, _and(A, B))),
    "Ax4": imp(_and(A, B), A),
    "Ax5": imp(_and(A, B), B),
    "Ax6": imp(A, _or(A, B)),
    "Ax7": imp(B, _or(A, B)),
    "Ax8": imp(imp(A, C), imp(imp(B, C), imp(_or(A, B), C))),
    "Ax9": imp(imp(A, B), imp(imp(A, neg(B)), neg(A))),
    "Ax10": imp(neg(A), imp(A, B)),
    "Ax11": _or(imp(A, B), imp(B, A)),
}
