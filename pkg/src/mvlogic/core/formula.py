"""Propositional formula trees.

Formulas are immutable and hash-cached: the proof engines keep them in sets
and dictionaries constantly, so structural hashing must be cheap.
"""

import itertools


class Formula:
    __slots__ = ()

    def atoms(self):
        raise NotImplementedError

    def is_atom(self):
        return isinstance(self, Atom)


class Atom(Formula):
    __slots__ = ("name", "_hash")

    def __init__(self, name):
        self.name = name
        self._hash = hash(("atom", name))

    def __eq__(self, other):
        return self is other or (isinstance(other, Atom) and other.name == self.name)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Atom({self.name!r})"

    def atoms(self):
        return frozenset((self.name,))

    @property
    def depth(self):
        return 0

    @property
    def size(self):
        return 1


class App(Formula):
    """Application of a named connective to a tuple of argument formulas."""

    __slots__ = ("conn", "args", "_hash", "_atoms", "_depth", "_size")

    def __init__(self, conn, args=()):
        self.conn = conn
        self.args = tuple(args)
        self._hash = hash((conn, self.args))
        self._atoms = None
        self._depth = 1 + max((a.depth for a in self.args), default=-1) if self.args else 0
        self._size = 1 + sum(a.size for a in self.args)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, App) or other._hash != self._hash:
            return False
        return other.conn == self.conn and other.args == self.args

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"App({self.conn!r}, {self.args!r})"

    def atoms(self):
        if self._atoms is None:
            out = frozenset()
            for a in self.args:
                out = out | a.atoms()
            self._atoms = out
        return self._atoms

    @property
    def depth(self):
        return self._depth

    @property
    def size(self):
        return self._size


def atom(name):
    return Atom(name)


def app(conn, *args):
    return App(conn, args)


def atoms_of(formulas):
    out = set()
    for f in formulas:
        out |= f.atoms()
    return out


def sorted_atoms(formulas):
    return sorted(atoms_of(formulas))


def substitute(formula, mapping):
    """Simultaneously replace atoms by formulas; ``mapping`` is keyed by atom name."""
    cache = {}

    def walk(f):
        if isinstance(f, Atom):
            return mapping.get(f.name, f)
        hit = cache.get(f)
        if hit is not None:
            return hit
        out = App(f.conn, tuple(walk(a) for a in f.args))
        cache[f] = out
        return out

    return walk(formula)


def subformulas(formula):
    """All distinct subformulas, children before parents."""
    seen = {}

    def walk(f):
        if f in seen:
            return
        if isinstance(f, App):
            for a in f.args:
                walk(a)
        seen[f] = None

    walk(formula)
    return list(seen)


def match(pattern, formula, metavars, binding=None):
    """First-order matching of ``pattern`` against ``formula``.

    Atoms of ``pattern`` whose names are in ``metavars`` are pattern variables;
    every other atom must match literally. Returns the binding or ``None``.
    """
    binding = dict(binding or {})
    stack = [(pattern, formula)]
    while stack:
        p, f = stack.pop()
        if isinstance(p, Atom):
            if p.name in metavars:
                bound = binding.get(p.name)
                if bound is None:
                    binding[p.name] = f
                elif bound != f:
                    return None
            elif p != f:
                return None
            continue
        if not isinstance(f, App) or f.conn != p.conn or len(f.args) != len(p.args):
            return None
        stack.extend(zip(p.args, f.args))
    return binding


def placeholder_atoms(k):
    """Atom names used for schematic arguments: p, q, r, s, then x1, x2, ..."""
    if k <= 4:
        return ["p", "q", "r", "s"][:k]
    return [f"x{i}" for i in range(1, k + 1)]


def enumerate_formulas(signature, atoms, depth):
    """Every formula of depth at most ``depth`` over ``atoms``.

    ``signature`` maps connective names to arities. Results come by depth,
    then in a fixed order, without duplicates.
    """
    layers = [[Atom(a) for a in atoms] + [App(c, ()) for c, k in signature.items() if k == 0]]
    seen = set(layers[0])
    for _ in range(depth):
        pool = [f for layer in layers for f in layer]
        fresh = []
        for c, k in signature.items():
            if k == 0:
                continue
            for args in itertools.product(pool, repeat=k):
                if max(a.depth for a in args) != len(layers) - 1:
                    continue
                f = App(c, args)
                if f not in seen:
                    seen.add(f)
                    fresh.append(f)
        layers.append(fresh)
    return [f for layer in layers for f in layer]
