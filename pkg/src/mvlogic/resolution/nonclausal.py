"""Non-clausal resolution over a verifier system.

Verifiers are closed formulas standing for the values of a finite algebra
V. A step picks an atom p and formulas A_1(p), ..., A_h(p) already on the
branch, one per verifier W_s, and opens a branch with A_s(W_s) for each s.
Applications of a connective to verifiers are rewritten by V's tables. A
branch is closed once its formulas include a member of the unsat family.

The search is an and-or search over rule applications, deepened one level
at a time up to ``depth_bound``.
"""

import itertools
from dataclasses import dataclass, field

from ..core.formula import App, Atom, substitute
from ..core.semantics import evaluate, valuations
from ..errors import MVLogicError

UNSAT = "unsat"
SAT_NOT_SHOWN = "sat-not-shown"
BOUND_EXCEEDED = "bound-exceeded"

DEFAULT_NODE_CAP = 20_000

_TOKEN = "#"  # prefix of the internal names of verifiers; never a user atom


@dataclass(frozen=True)
class VerifierSystem:
    """``tables[c]`` maps tuples of verifier indices to a verifier index."""

    verifiers: tuple
    tables: dict = field(hash=False)
    unsat_family: frozenset
    depth_bound: int = 8

    def __post_init__(self):
        h = len(self.verifiers)
        if h == 0:
            raise MVLogicError("a verifier system needs at least one verifier")
        if len(set(self.verifiers)) != h:
            raise MVLogicError("verifiers must be distinct formulas")
        for conn, table in self.tables.items():
            if not table:
                raise MVLogicError(f"empty table for {conn}")
            arity = len(next(iter(table)))
            for args in itertools.product(range(h), repeat=arity):
                if args not in table:
                    raise MVLogicError(f"table for {conn} misses {args}")
                if table[args] not in range(h):
                    raise MVLogicError(f"table for {conn} leaves V at {args}")
        if not self.unsat_family:
            raise MVLogicError("the unsat family must be nonempty")
        for s in self.unsat_family:
            if not s or not set(s) <= set(range(h)):
                raise MVLogicError("members of the unsat family are nonempty sets of verifier indices")
        if self.depth_bound < 1:
            raise MVLogicError("depth_bound must be positive")

    @property
    def h(self):
        return len(self.verifiers)


def value_verifier_system(matrix, terms, depth_bound=8):
    """Verifiers naming the values of ``matrix`` one to one.

    ``terms`` maps each value to a formula that takes that value under every
    valuation (checked). Tables are the matrix tables and the unsat family
    is {W_v} for each undesignated v.
    """
    vals = list(matrix.values)
    if set(terms) != set(vals):
        raise MVLogicError("terms must name every value exactly once")
    for v in vals:
        t = terms[v]
        if any(evaluate(t, s, matrix) != v for s in valuations(sorted(t.atoms()), matrix)):
            raise MVLogicError(f"term for {v} is not constant")
    pos = {v: k for k, v in enumerate(vals)}
    tables = {}
    for name in matrix.connective_names:
        conn = matrix.connective(name)
        tables[name] = {
            tuple(pos[a] for a in args): pos[conn.table[args]]
            for args in itertools.product(vals, repeat=conn.arity)
        }
    family = frozenset(frozenset([pos[v]]) for v in vals if v not in matrix.designated)
    return VerifierSystem(tuple(terms[v] for v in vals), tables, family, depth_bound)


def classical_verifier_system(matrix, depth_bound=8):
    """V = {F, T} with F = v & ~v, T = v | ~v and the single unsat core {F}."""
    v = Atom("v")
    f = App("and", (v, App("neg", (v,)))) if "and" in matrix.connective_names else App("neg", (App("or", (v, App("neg", (v,)))),))
    t = App("or", (v, App("neg", (v,))))
    zero, one = matrix.values
    return value_verifier_system(matrix, {zero: f, one: t}, depth_bound)


def _token(k):
    return Atom(f"{_TOKEN}{k}")


def _token_index(f):
    if isinstance(f, Atom) and f.name.startswith(_TOKEN):
        return int(f.name[len(_TOKEN):])
    return None


class _OutOfBudget(Exception):
    pass


class _Engine:
    def __init__(self, vs, max_nodes):
        self.vs = vs
        self.max_nodes = max_nodes
        self.calls = 0
        self.lookup = {w: k for k, w in enumerate(vs.verifiers)}
        self.cut = False
        self.memo = {}
        self.instances = {}
        # a verifier outside every unsat core adds nothing to a branch
        self.inert = {_token(k) for k in range(vs.h) if not any(k in s for s in vs.unsat_family)}

    def internal(self, f):
        """Replace verifier subformulas by tokens, then rewrite by the tables."""
        if f in self.lookup:
            return _token(self.lookup[f])
        if isinstance(f, Atom):
            if f.name.startswith(_TOKEN):
                raise MVLogicError(f"atom names starting with {_TOKEN!r} are reserved")
            return f
        return self.rewrite(App(f.conn, tuple(self.internal(a) for a in f.args)))

    def rewrite(self, f):
        if isinstance(f, Atom):
            return f
        args = tuple(self.rewrite(a) for a in f.args)
        idx = [_token_index(a) for a in args]
        if all(i is not None for i in idx) and f.conn in self.vs.tables:
            return _token(self.vs.tables[f.conn][tuple(idx)])
        return App(f.conn, args)

    def closed(self, node):
        present = {_token_index(f) for f in node} - {None}
        return any(s <= present for s in self.vs.unsat_family)

    def closes_with(self, present, c):
        k = _token_index(c)
        if k is None:
            return False
        return any(s <= present | {k} for s in self.vs.unsat_family)

    def instance(self, a, p, k):
        key = (a, p, k)
        inst = self.instances.get(key)
        if inst is None:
            inst = self.instances[key] = self.rewrite(substitute(a, {p: _token(k)}))
        return inst

    def moves(self, node):
        """Rule applications that add something new on every branch.

        Each is ``(closing, p, slots)``: ``slots[s]`` lists the new formulas
        A(W_s), those that close the branch at once first, then by fewest
        atoms left. ``closing`` counts the slots that can close at once.
        """
        present = {_token_index(f) for f in node} - {None}
        out = []
        atoms = sorted({a for f in node for a in f.atoms() if not a.startswith(_TOKEN)})
        for p in atoms:
            carriers = [f for f in node if p in f.atoms()]
            slots = []
            for k in range(self.vs.h):
                opts = {self.instance(a, p, k) for a in carriers} - node - self.inert
                if not opts:
                    slots = None
                    break
                slots.append(sorted(opts, key=lambda c: (not self.closes_with(present, c), len(c.atoms()), c.size, repr(c))))
            if slots:
                closing = sum(self.closes_with(present, slot[0]) for slot in slots)
                out.append((closing, p, slots))
        out.sort(key=lambda m: (-m[0], sum(len(s) for s in m[2]), m[1]))
        return out

    def propagate(self, node):
        """Apply the steps that need no branching until none is left.

        A step is free when every branch but those closing at once gets the
        same new formula; adding formulas never hurts, so this is complete.
        Returns ``None`` when some step closes every branch.
        """
        while True:
            if self.closed(node):
                return None
            present = {_token_index(f) for f in node} - {None}
            added = set()
            for p in sorted({a for f in node for a in f.atoms() if not a.startswith(_TOKEN)}):
                carriers = [f for f in node if p in f.atoms()]
                open_slots = []
                for k in range(self.vs.h):
                    opts = {self.instance(a, p, k) for a in carriers}
                    if not any(self.closes_with(present, c) for c in opts):
                        open_slots.append(opts - self.inert)
                if not open_slots:
                    return None
                if len(open_slots) == 1:
                    added |= open_slots[0]
                else:
                    added |= set.intersection(*open_slots)
            added -= node
            if not added:
                return node
            node = node | added

    def refute(self, node, depth):
        node = self.propagate(node)
        if node is None:
            return True
        self.calls += 1
        if self.calls > self.max_nodes:
            raise _OutOfBudget
        known = self.memo.get(node)
        if known is not None and (known[0] or known[1] >= depth):
            return known[0]
        moves = self.moves(node)
        if depth == 0:
            if moves:
                self.cut = True
            return False
        # branches are independent, so a step closes iff every verifier slot
        # has some choice whose branch closes
        result = any(
            all(any(self.refute(node | {c}, depth - 1) for c in slot) for slot in slots)
            for _, _, slots in moves
        )
        self.memo[node] = (result, depth)
        return result


@dataclass
class NonclausalResult:
    outcome: str
    depth: int = None

    def __str__(self):
        return self.outcome


def nonclausal_decide(gamma, vs, matrix=None, max_nodes=DEFAULT_NODE_CAP):
    """``unsat``, ``sat-not-shown`` or ``bound-exceeded`` for the set ``gamma``.

    ``sat-not-shown`` means the search space ran out below the bound without
    closing every branch. Running past ``depth_bound`` or visiting more than
    ``max_nodes`` nodes gives ``bound-exceeded``. ``matrix`` (if given) is
    only used to check that the system covers its connectives.
    """
    if matrix is not None:
        missing = [c for c in matrix.connective_names if c not in vs.tables]
        if missing:
            raise MVLogicError(f"verifier system has no table for {', '.join(missing)}")
    engine = _Engine(vs, max_nodes)
    root = frozenset(engine.internal(f) for f in gamma)
    for depth in range(vs.depth_bound + 1):
        engine.cut = False
        try:
            if engine.refute(root, depth):
                return NonclausalResult(UNSAT, depth)
        except _OutOfBudget:
            return NonclausalResult(BOUND_EXCEEDED, depth)
        if not engine.cut:
            return NonclausalResult(SAT_NOT_SHOWN, depth)
    return NonclausalResult(BOUND_EXCEEDED, vs.depth_bound)
