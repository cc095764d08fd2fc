"""Truth-table semantics: evaluation and brute-force decision.

``decide`` is the ground-truth oracle the proof engines are checked against,
so it is deliberately the most direct code in the package.
"""

import itertools
from dataclasses import dataclass

from ..errors import EvaluationError, MatrixError, ResourceLimitExceeded
from .formula import App, Atom, atoms_of

DEFAULT_ATOM_CAP = 16


def evaluate(formula, valuation, matrix):
    """Value of ``formula`` under ``valuation`` (a mapping atom name -> value)."""
    cache = {}

    def ev(f):
        if isinstance(f, Atom):
            try:
                return valuation[f.name]
            except KeyError:
                raise EvaluationError(f"atom {f.name!r} missing from valuation") from None
        hit = cache.get(f)
        if hit is not None:
            return hit
        try:
            table = matrix._conns[f.conn].table
        except KeyError:
            raise MatrixError(f"{matrix.name} has no connective {f.conn!r}") from None
        out = table[tuple(ev(a) for a in f.args)]
        cache[f] = out
        return out

    return ev(formula)


def compile_formula(formula, atoms, matrix):
    """Compile to a function of a value tuple ordered like ``atoms``.

    Shared subterms are evaluated once per call.
    """
    position = {a: i for i, a in enumerate(atoms)}
    order = []
    slot = {}

    def visit(f):
        if f in slot:
            return slot[f]
        if isinstance(f, Atom):
            if f.name not in position:
                raise EvaluationError(f"atom {f.name!r} missing from valuation")
            slot[f] = ("atom", position[f.name])
            return slot[f]
        args = tuple(visit(a) for a in f.args)
        try:
            table = matrix._conns[f.conn].table
        except KeyError:
            raise MatrixError(f"{matrix.name} has no connective {f.conn!r}") from None
        idx = len(order)
        order.append((table, args))
        slot[f] = ("node", idx)
        return slot[f]

    root = visit(formula)

    def run(vals):
        out = [None] * len(order)
        for i, (table, args) in enumerate(order):
            out[i] = table[tuple(vals[a[1]] if a[0] == "atom" else out[a[1]] for a in args)]
        return vals[root[1]] if root[0] == "atom" else out[root[1]]

    return run


def valuations(atoms, matrix, cap=DEFAULT_ATOM_CAP):
    """Enumerate every valuation of ``atoms`` (in order) as a dict."""
    atoms = list(atoms)
    if len(atoms) > cap:
        raise ResourceLimitExceeded(f"{len(atoms)} atoms exceed the enumeration cap of {cap}")
    for vals in itertools.product(matrix.values, repeat=len(atoms)):
        yield dict(zip(atoms, vals))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision query.

    ``witness`` is a counter-valuation when validity/consequence fails, a
    satisfying valuation when satisfiability holds, and ``None`` otherwise.
    """

    holds: bool
    witness: dict = None

    def __bool__(self):
        return self.holds


def decide(mode, premises, goal, matrix, cap=DEFAULT_ATOM_CAP):
    """Decide ``valid``, ``satisfiable``, ``consequence`` or (ordered matrices) ``entails``.

    ``valid`` and ``satisfiable`` look only at ``goal``; ``premises`` is ignored.
    ``entails`` needs exactly one premise A and checks sigma(A) <= sigma(goal)
    in the declared order for every valuation.
    """
    premises = list(premises or ())
    if mode in ("valid", "satisfiable"):
        premises = []
    elif mode == "entails":
        if matrix.order is None:
            raise MatrixError("entails needs a declared order on the matrix")
        if len(premises) != 1:
            raise ValueError("entails takes exactly one premise")
    elif mode != "consequence":
        raise ValueError(f"unknown mode {mode!r}")

    atoms = sorted(atoms_of(premises + [goal]))
    if len(atoms) > cap:
        raise ResourceLimitExceeded(f"{len(atoms)} atoms exceed the enumeration cap of {cap}")
    goal_fn = compile_formula(goal, atoms, matrix)
    prem_fns = [compile_formula(b, atoms, matrix) for b in premises]
    designated = matrix.designated

    for vals in itertools.product(matrix.values, repeat=len(atoms)):
        g = goal_fn(vals)
        if mode == "satisfiable":
            if g in designated:
                return Verdict(True, dict(zip(atoms, vals)))
            continue
        if mode == "entails":
            if not matrix.leq(prem_fns[0](vals), g):
                return Verdict(False, dict(zip(atoms, vals)))
            continue
        if g in designated:
            continue
        if all(fn(vals) in designated for fn in prem_fns):
            return Verdict(False, dict(zip(atoms, vals)))
    if mode == "satisfiable":
        return Verdict(False)
    return Verdict(True)


def is_valid(formula, matrix):
    return decide("valid", (), formula, matrix).holds


def truth_table(formula, matrix, atoms=None):
    """List of ``(valuation, value)`` rows over the formula's atoms."""
    atoms = sorted(formula.atoms()) if atoms is None else list(atoms)
    fn = compile_formula(formula, atoms, matrix)
    return [
        (dict(zip(atoms, vals)), fn(vals))
        for vals in itertools.product(matrix.values, repeat=len(atoms))
    ]


def unary_function(formula, matrix, atom="p"):
    """The function of one atom induced by ``formula``, as a dict value -> value."""
    fn = compile_formula(formula, [atom], matrix)
    return {v: fn((v,)) for v in matrix.values}


def constant(conn):
    return App(conn, ())
