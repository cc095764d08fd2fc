"""The designation flip N(p): designated exactly when its argument is not."""

import itertools

from ..core.formula import App, Atom
from ..core.semantics import compile_formula
from ..errors import MVLogicError, ResourceLimitExceeded, VerificationError


def is_marker(matrix, formula, atom="p"):
    """Whether ``formula`` (in one atom) is designated exactly off D."""
    fn = compile_formula(formula, [atom], matrix)
    return all((v in matrix.designated) != (fn((v,)) in matrix.designated) for v in matrix.values)


def negation_marker(matrix, candidate=None):
    """N(p) for ``matrix``, checked at every truth value.

    Uses ``candidate`` if given, else the matrix's registered marker, else
    searches the unary term functions of the matrix (see :func:`find_marker`).
    """
    formula = candidate if candidate is not None else matrix.marker
    if formula is None:
        formula = find_marker(matrix)
        if formula is None:
            raise MVLogicError(f"{matrix.name} has no formula N(p) flipping designation")
    if set(formula.atoms()) - {"p"}:
        raise VerificationError("N(p) must contain no atom other than p")
    if not is_marker(matrix, formula):
        raise VerificationError(f"candidate fails 'i in D iff N(i) not in D' over {matrix.name}")
    return formula


def unary_clone(matrix, limit=50000):
    """Every unary function definable from ``p``, with a smallest-depth witness.

    Returns a dict mapping value tuples (ordered like ``matrix.values``) to terms.
    Generation proceeds in rounds; round r contains terms of depth r.
    """
    values = matrix.values
    p = Atom("p")
    found = {tuple(values): p}
    for c in matrix.connective_names:
        conn = matrix.connective(c)
        if conn.arity == 0:
            out = conn.table[()]
            found.setdefault(tuple(out for _ in values), App(c, ()))
    frontier = dict(found)
    while frontier:
        new = {}
        known = list(found.items())
        for c in matrix.connective_names:
            conn = matrix.connective(c)
            if conn.arity == 0:
                continue
            for combo in itertools.product(known, repeat=conn.arity):
                if not any(fn in frontier for fn, _ in combo):
                    continue
                key = tuple(
                    conn.table[tuple(fn[k] for fn, _ in combo)] for k in range(len(values))
                )
                if key not in found and key not in new:
                    new[key] = App(c, tuple(t for _, t in combo))
                    if len(found) + len(new) > limit:
                        raise ResourceLimitExceeded("unary clone exceeds search limit")
        found.update(new)
        frontier = new
    return found


def find_marker(matrix):
    """Least-depth N(p) among all unary term functions, or None if none exists."""
    if not matrix.designated or set(matrix.designated) == set(matrix.values):
        return None
    d = matrix.designated
    best = None
    for key, term in unary_clone(matrix).items():
        if all((v in d) != (out in d) for v, out in zip(matrix.values, key)):
            if best is None or (term.depth, term.size) < (best.depth, best.size):
                best = term
    return best
