"""Logical matrices: finite truth-value sets with designated values and tables."""

import itertools
from dataclasses import dataclass, field
from types import MappingProxyType

from ..errors import MatrixError
from .values import as_value, format_value

ALIAS_KINDS = {"prefix": 1, "infix": 2, "nullary": 0}


class Connective:
    """A named connective with a total truth table ``M^arity -> M``."""

    __slots__ = ("name", "arity", "table")

    def __init__(self, name, arity, table):
        self.name = name
        self.arity = arity
        self.table = MappingProxyType(
            {tuple(as_value(x) for x in k): as_value(v) for k, v in dict(table).items()}
        )

    def __call__(self, *args):
        return self.table[args]

    def __eq__(self, other):
        return (
            isinstance(other, Connective)
            and self.name == other.name
            and self.arity == other.arity
            and dict(self.table) == dict(other.table)
        )

    def __hash__(self):
        return hash((self.name, self.arity))

    def __repr__(self):
        return f"Connective({self.name!r}, arity={self.arity})"

    @classmethod
    def from_function(cls, name, arity, values, fn):
        return cls(name, arity, {args: fn(*args) for args in itertools.product(values, repeat=arity)})


@dataclass(frozen=True)
class Alias:
    symbol: str
    conn: str
    kind: str


@dataclass(frozen=True, eq=False)
class Matrix:
    """A finite logical matrix (M, D) together with its connective tables.

    ``order`` is an optional partial order given as a set of pairs ``(a, b)``
    meaning ``a <= b``; it is closed reflexively and transitively on
    construction. ``marker`` is an optional one-atom formula in ``p`` whose
    value is designated exactly when its argument is not.
    """

    name: str
    values: tuple
    designated: frozenset
    connectives: tuple
    order: frozenset = None
    aliases: tuple = ()
    marker: object = None
    _index: dict = field(default=None, init=False, repr=False)
    _conns: dict = field(default=None, init=False, repr=False)

    def __post_init__(self):
        values = tuple(as_value(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) < 2:
            raise MatrixError("a matrix needs at least two truth values")
        if len(set(values)) != len(values):
            dup = next(v for v in values if values.count(v) > 1)
            raise MatrixError(f"duplicate value {format_value(dup)}")
        designated = frozenset(as_value(v) for v in self.designated)
        object.__setattr__(self, "designated", designated)
        if not designated <= set(values):
            raise MatrixError("designated values must be drawn from the value set")
        index = {v: i for i, v in enumerate(values)}
        object.__setattr__(self, "_index", index)

        conns = {}
        for c in self.connectives:
            if c.name in conns:
                raise MatrixError(f"duplicate connective {c.name}")
            expected = set(itertools.product(values, repeat=c.arity))
            if set(c.table) != expected:
                raise MatrixError(f"table of {c.name} is not defined on exactly all of M^{c.arity}")
            bad = [v for v in c.table.values() if v not in index]
            if bad:
                raise MatrixError(f"table of {c.name} leaves M: {format_value(bad[0])}")
            conns[c.name] = c
        object.__setattr__(self, "connectives", tuple(self.connectives))
        object.__setattr__(self, "_conns", conns)

        aliases = tuple(self.aliases)
        seen = set()
        for a in aliases:
            if a.conn not in conns:
                raise MatrixError(f"alias {a.symbol!r} names unknown connective {a.conn}")
            if ALIAS_KINDS.get(a.kind) != conns[a.conn].arity:
                raise MatrixError(f"alias {a.symbol!r}: kind {a.kind} does not fit arity {conns[a.conn].arity}")
            if a.symbol in seen:
                raise MatrixError(f"alias {a.symbol!r} declared twice")
            seen.add(a.symbol)
        object.__setattr__(self, "aliases", aliases)

        if self.order is not None:
            object.__setattr__(self, "order", _close_order(self.order, values))

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.name == other.name
            and self.values == other.values
            and self.designated == other.designated
            and self._conns == other._conns
            and self.order == other.order
            and self.aliases == other.aliases
            and self.marker == other.marker
        )

    def __hash__(self):
        return hash((self.name, self.values, self.designated))

    def __repr__(self):
        return f"Matrix({self.name!r}, {len(self.values)} values)"

    # -- lookups -----------------------------------------------------------

    @property
    def undesignated(self):
        return frozenset(v for v in self.values if v not in self.designated)

    @property
    def all_values(self):
        return frozenset(self.values)

    def index(self, value):
        return self._index[value]

    def value(self, label):
        """Look up a truth value by label (``"1/2"``), int, or value."""
        if isinstance(label, str):
            for v in self.values:
                if format_value(v) == label.strip():
                    return v
            raise MatrixError(f"{label!r} is not a truth value of {self.name}")
        v = as_value(label)
        if v not in self._index:
            raise MatrixError(f"{format_value(v)} is not a truth value of {self.name}")
        return v

    def connective(self, name):
        try:
            return self._conns[name]
        except KeyError:
            raise MatrixError(f"{self.name} has no connective {name!r}") from None

    def has_connective(self, name):
        return name in self._conns

    @property
    def connective_names(self):
        return tuple(c.name for c in self.connectives)

    def apply(self, name, *args):
        return self._conns[name].table[args]

    def leq(self, a, b):
        if self.order is None:
            raise MatrixError(f"{self.name} has no declared order")
        return (a, b) in self.order

    @property
    def is_chain(self):
        if self.order is None:
            return False
        return all(self.leq(a, b) or self.leq(b, a) for a in self.values for b in self.values)

    def least(self, candidates=None):
        """Least value of ``candidates`` in declared order, else first listed."""
        pool = [v for v in self.values if candidates is None or v in candidates]
        if not pool:
            raise MatrixError("no candidate values")
        if self.order is not None:
            for v in pool:
                if all(self.leq(v, w) for w in pool):
                    return v
        return pool[0]

    def inf(self, subset):
        return self._bound(subset, lower=True)

    def sup(self, subset):
        return self._bound(subset, lower=False)

    def _bound(self, subset, lower):
        subset = list(subset)
        if not subset:
            raise MatrixError("bound of the empty set")
        if lower:
            cands = [v for v in self.values if all(self.leq(v, s) for s in subset)]
            best = [v for v in cands if all(self.leq(w, v) for w in cands)]
        else:
            cands = [v for v in self.values if all(self.leq(s, v) for s in subset)]
            best = [v for v in cands if all(self.leq(v, w) for w in cands)]
        if len(best) != 1:
            raise MatrixError("declared order is not a lattice on this subset")
        return best[0]

    def aliases_for(self, conn):
        return [a for a in self.aliases if a.conn == conn]

    def with_marker(self, marker):
        from dataclasses import replace

        return replace(self, marker=marker)

    def replace(self, **changes):
        from dataclasses import replace

        return replace(self, **changes)


def _close_order(pairs, values):
    values = tuple(values)
    rel = {(as_value(a), as_value(b)) for a, b in pairs}
    vs = set(values)
    for a, b in rel:
        if a not in vs or b not in vs:
            raise MatrixError("order mentions a value outside M")
    rel |= {(v, v) for v in values}
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    for a, b in rel:
        if a != b and (b, a) in rel:
            raise MatrixError("declared order is not antisymmetric")
    return frozenset(rel)


def chain_order(values):
    values = list(values)
    return frozenset((values[i], values[j]) for i in range(len(values)) for j in range(i, len(values)))
