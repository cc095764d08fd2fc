"""Finite MV-algebras given by tables, identity checking and constructions."""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..core.values import format_value, unit_interval_grid
from ..errors import MVLogicError


class FiniteMV:
    """A finite algebra (N, ⊕, ¬, 0, 1); ⊗ defaults to ¬(¬a ⊕ ¬b).

    ``elements`` fixes an enumeration of the carrier. With ``check=True``
    the tables must satisfy M1-M8 and the derived lattice must be bounded
    and distributive; ``check=False`` keeps a candidate for
    :func:`check_axioms`.
    """

    def __init__(self, elements, oplus, neg, zero, one, otimes=None, name=None, check=True):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise MVLogicError("duplicate element in carrier")
        self.zero, self.one = zero, one
        self.name = name or f"N{len(self.elements)}"
        carrier = set(self.elements)
        if zero not in carrier or one not in carrier:
            raise MVLogicError("0 and 1 must belong to the carrier")
        self._oplus = {}
        self._neg = {}
        for a in self.elements:
            x = neg[a] if isinstance(neg, dict) else neg(a)
            if x not in carrier:
                raise MVLogicError(f"¬{a!r} leaves the carrier")
            self._neg[a] = x
            for b in self.elements:
                y = oplus[a, b] if isinstance(oplus, dict) else oplus(a, b)
                if y not in carrier:
                    raise MVLogicError(f"{a!r} ⊕ {b!r} leaves the carrier")
                self._oplus[a, b] = y
        self._otimes = {}
        for a in self.elements:
            for b in self.elements:
                if otimes is None:
                    self._otimes[a, b] = self._neg[self._oplus[self._neg[a], self._neg[b]]]
                else:
                    y = otimes[a, b] if isinstance(otimes, dict) else otimes(a, b)
                    if y not in carrier:
                        raise MVLogicError(f"{a!r} ⊗ {b!r} leaves the carrier")
                    self._otimes[a, b] = y
        self._vee = {
            (a, b): self._oplus[self._neg[self._oplus[self._neg[a], b]], b]
            for a in self.elements
            for b in self.elements
        }
        self._wedge = {
            (a, b): self._otimes[self._neg[self._otimes[self._neg[a], b]], b]
            for a in self.elements
            for b in self.elements
        }
        if check:
            report = check_axioms(self, "M")
            if not report.ok:
                raise MVLogicError(f"not an MV-algebra: {report}")
            lattice = check_lattice(self)
            if lattice is not None:
                raise MVLogicError(f"derived lattice fails: {lattice}")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self._neg

    def __repr__(self):
        return f"FiniteMV({self.name}, {len(self)} elements)"

    def oplus(self, a, b):
        return self._oplus[a, b]

    def otimes(self, a, b):
        return self._otimes[a, b]

    def neg(self, a):
        return self._neg[a]

    def imp(self, a, b):
        return self._oplus[self._neg[a], b]

    def vee(self, a, b):
        return self._vee[a, b]

    def wedge(self, a, b):
        return self._wedge[a, b]

    def leq(self, a, b):
        return self._vee[a, b] == b

    def iff(self, a, b):
        return self.wedge(self.imp(a, b), self.imp(b, a))

    def distance(self, a, b):
        """¬(a ↔ b) = (a ⊗ ¬b) ∨ (b ⊗ ¬a)."""
        return self.vee(self.otimes(a, self.neg(b)), self.otimes(b, self.neg(a)))

    def multiple(self, k, a):
        """ka, with 0a = 0."""
        x = self.zero
        for _ in range(k):
            x = self.oplus(a, x)
        return x

    def power(self, a, k):
        """a^k, with a^0 = 1."""
        x = self.one
        for _ in range(k):
            x = self.otimes(a, x)
        return x

    def is_chain(self):
        return all(self.leq(a, b) or self.leq(b, a) for a in self.elements for b in self.elements)

    def format_element(self, a):
        if isinstance(a, tuple):
            return "(" + ",".join(format_value(x) if isinstance(x, Fraction) else str(x) for x in a) + ")"
        return format_value(a) if isinstance(a, Fraction) else str(a)

    def tables(self):
        """``(elements, oplus rows, neg row)`` in carrier order."""
        oplus = [[self._oplus[a, b] for b in self.elements] for a in self.elements]
        neg = [self._neg[a] for a in self.elements]
        return self.elements, oplus, neg


# -- identities -------------------------------------------------------------


def _identities():
    """``system -> [(name, arity, lhs, rhs)]``; sides are functions of (alg, *args)."""
    one = lambda n, *x: n.one  # noqa: E731
    L = [
        ("L1", 2, lambda n, a, b: n.oplus(n.neg(a), n.oplus(n.neg(b), a)), one),
        (
            "L2",
            3,
            lambda n, a, b, c: n.oplus(
                n.neg(n.oplus(n.neg(a), b)), n.oplus(n.neg(n.oplus(n.neg(b), c)), n.oplus(n.neg(a), c))
            ),
            one,
        ),
        ("L3", 2, lambda n, a, b: n.oplus(n.neg(n.oplus(n.neg(n.neg(a)), n.neg(b))), n.oplus(n.neg(b), a)), one),
        (
            "L4",
            2,
            lambda n, a, b: n.oplus(
                n.neg(n.oplus(n.neg(n.oplus(n.neg(a), b)), b)), n.oplus(n.neg(n.oplus(n.neg(b), a)), a)
            ),
            one,
        ),
    ]
    C = [
        ("C1", 2, lambda n, a, b: n.oplus(a, b), lambda n, a, b: n.oplus(b, a)),
        ("C1'", 2, lambda n, a, b: n.otimes(a, b), lambda n, a, b: n.otimes(b, a)),
        ("C2", 3, lambda n, a, b, c: n.oplus(a, n.oplus(b, c)), lambda n, a, b, c: n.oplus(n.oplus(a, b), c)),
        ("C2'", 3, lambda n, a, b, c: n.otimes(a, n.otimes(b, c)), lambda n, a, b, c: n.otimes(n.otimes(a, b), c)),
        ("C3", 1, lambda n, a: n.oplus(a, n.neg(a)), lambda n, a: n.one),
        ("C3'", 1, lambda n, a: n.otimes(a, n.neg(a)), lambda n, a: n.zero),
        ("C4", 1, lambda n, a: n.oplus(a, n.one), lambda n, a: n.one),
        ("C4'", 1, lambda n, a: n.otimes(a, n.zero), lambda n, a: n.zero),
        ("C5", 1, lambda n, a: n.oplus(a, n.zero), lambda n, a: a),
        ("C5'", 1, lambda n, a: n.otimes(a, n.one), lambda n, a: a),
        ("C6", 2, lambda n, a, b: n.neg(n.oplus(a, b)), lambda n, a, b: n.otimes(n.neg(a), n.neg(b))),
        ("C6'", 2, lambda n, a, b: n.neg(n.otimes(a, b)), lambda n, a, b: n.oplus(n.neg(a), n.neg(b))),
        ("C7", 1, lambda n, a: n.neg(n.neg(a)), lambda n, a: a),
        ("C8", 0, lambda n: n.neg(n.zero), lambda n: n.one),
        ("C9", 2, lambda n, a, b: n.vee(a, b), lambda n, a, b: n.vee(b, a)),
        ("C9'", 2, lambda n, a, b: n.wedge(a, b), lambda n, a, b: n.wedge(b, a)),
        ("C10", 3, lambda n, a, b, c: n.vee(a, n.vee(b, c)), lambda n, a, b, c: n.vee(n.vee(a, b), c)),
        ("C10'", 3, lambda n, a, b, c: n.wedge(a, n.wedge(b, c)), lambda n, a, b, c: n.wedge(n.wedge(a, b), c)),
        (
            "C11",
            3,
            lambda n, a, b, c: n.oplus(a, n.wedge(b, c)),
            lambda n, a, b, c: n.wedge(n.oplus(a, b), n.oplus(a, c)),
        ),
        (
            "C11'",
            3,
            lambda n, a, b, c: n.otimes(a, n.vee(b, c)),
            lambda n, a, b, c: n.vee(n.otimes(a, b), n.otimes(a, c)),
        ),
    ]
    M = [
        ("M1", 2, lambda n, a, b: n.oplus(a, b), lambda n, a, b: n.oplus(b, a)),
        ("M2", 3, lambda n, a, b, c: n.oplus(a, n.oplus(b, c)), lambda n, a, b, c: n.oplus(n.oplus(a, b), c)),
        ("M3", 1, lambda n, a: n.oplus(a, n.zero), lambda n, a: a),
        ("M4", 1, lambda n, a: n.oplus(a, n.one), lambda n, a: n.one),
        ("M5", 1, lambda n, a: n.neg(n.neg(a)), lambda n, a: a),
        ("M6", 0, lambda n: n.neg(n.zero), lambda n: n.one),
        (
            "M7",
            2,
            lambda n, a, b: n.oplus(n.neg(n.oplus(n.neg(a), b)), b),
            lambda n, a, b: n.oplus(n.neg(n.oplus(n.neg(b), a)), a),
        ),
        ("M8", 2, lambda n, a, b: n.otimes(a, b), lambda n, a, b: n.neg(n.oplus(n.neg(a), n.neg(b)))),
    ]
    return {"L": L, "C": C, "M": M}


IDENTITIES = _identities()


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    system: str
    failed: str = None
    witness: tuple = None
    lhs: object = None
    rhs: object = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"{self.system}: all identities hold"
        return f"{self.failed} fails at {self.witness}: {self.lhs!r} ≠ {self.rhs!r}"


def check_axioms(alg, system="M", elements=None):
    """First failing identity of ``system`` ("L", "C" or "M") with its witness.

    Checks every tuple over ``elements`` (the whole carrier by default).
    """
    if system not in IDENTITIES:
        raise ValueError("system is 'L', 'C' or 'M'")
    elements = alg.elements if elements is None else tuple(elements)
    for name, arity, lhs, rhs in IDENTITIES[system]:
        for args in itertools.product(elements, repeat=arity):
            x, y = lhs(alg, *args), rhs(alg, *args)
            if x != y:
                return AxiomReport(False, system, name, args, x, y)
    return AxiomReport(True, system)


def check_lattice(alg):
    """``None`` if (N, ∨, ∧, 0, 1) is a bounded distributive lattice, else a message."""
    E = alg.elements
    for a in E:
        if alg.vee(a, a) != a or alg.wedge(a, a) != a:
            return f"idempotence at {a!r}"
        if not (alg.leq(alg.zero, a) and alg.leq(a, alg.one)):
            return f"bounds at {a!r}"
        for b in E:
            if alg.vee(a, alg.wedge(a, b)) != a or alg.wedge(a, alg.vee(a, b)) != a:
                return f"absorption at {(a, b)!r}"
            for c in E:
                if alg.wedge(a, alg.vee(b, c)) != alg.vee(alg.wedge(a, b), alg.wedge(a, c)):
                    return f"distributivity at {(a, b, c)!r}"
    return None


def check_order_facts(alg):
    """``None`` if the basic order facts hold, else a message naming the first failure.

    a ⊗ b ≤ a ∧ b ≤ a ≤ a ∨ b ≤ a ⊕ b, (a → b) ∨ (b → a) = 1, De Morgan for ∨/∧.
    """
    for a in alg.elements:
        for b in alg.elements:
            chain = [alg.otimes(a, b), alg.wedge(a, b), a, alg.vee(a, b), alg.oplus(a, b)]
            if not all(alg.leq(x, y) for x, y in zip(chain, chain[1:])):
                return f"order chain at {(a, b)!r}"
            if alg.vee(alg.imp(a, b), alg.imp(b, a)) != alg.one:
                return f"prelinearity at {(a, b)!r}"
            if alg.neg(alg.vee(a, b)) != alg.wedge(alg.neg(a), alg.neg(b)):
                return f"De Morgan at {(a, b)!r}"
            if alg.neg(alg.wedge(a, b)) != alg.vee(alg.neg(a), alg.neg(b)):
                return f"De Morgan at {(a, b)!r}"
    return None


# -- constructions ----------------------------------------------------------


def chain(n):
    """I_n = {0, 1/(n-1), ..., 1} with Łukasiewicz ⊕ and ¬."""
    grid = unit_interval_grid(n)
    return FiniteMV(grid, lambda a, b: min(a + b, Fraction(1)), lambda a: 1 - a, Fraction(0), Fraction(1), name=f"I{n}")


def two():
    return chain(2)


def gamma_z(u):
    """Γ(ℤ, u): the integers 0..u with a ⊕ b = (a + b) ∧ u and ¬a = u - a."""
    if u < 1:
        raise MVLogicError("gamma_z needs u >= 1")
    return FiniteMV(range(u + 1), lambda a, b: min(a + b, u), lambda a: u - a, 0, u, name=f"Γ(Z,{u})")


def product(a, b):
    elements = [(x, y) for x in a.elements for y in b.elements]
    return FiniteMV(
        elements,
        lambda s, t: (a.oplus(s[0], t[0]), b.oplus(s[1], t[1])),
        lambda s: (a.neg(s[0]), b.neg(s[1])),
        (a.zero, b.zero),
        (a.one, b.one),
        name=f"{a.name}×{b.name}",
    )


def is_ideal(alg, J):
    J = set(J)
    if alg.zero not in J or not J <= set(alg.elements):
        return False
    if any(alg.oplus(x, y) not in J for x in J for y in J):
        return False
    return all(a in J for a in alg.elements for b in J if alg.leq(a, b))


def quotient(alg, J):
    """N/J, each class named by its first member in carrier order.

    Returns ``(algebra, projection)`` with ``projection[a]`` the class of a.
    """
    J = frozenset(J)
    if not is_ideal(alg, J):
        raise MVLogicError("quotient needs an ideal")
    proj = {}
    reps = []
    for a in alg.elements:
        for r in reps:
            if alg.distance(a, r) in J:
                proj[a] = r
                break
        else:
            reps.append(a)
            proj[a] = a
    oplus, neg = {}, {}
    for x in alg.elements:
        for y in alg.elements:
            key = (proj[x], proj[y])
            val = proj[alg.oplus(x, y)]
            if oplus.setdefault(key, val) != val:
                raise MVLogicError("⊕ is not well defined on the classes")
        val = proj[alg.neg(x)]
        if neg.setdefault(proj[x], val) != val:
            raise MVLogicError("¬ is not well defined on the classes")
    q = FiniteMV(reps, oplus, neg, proj[alg.zero], proj[alg.one], name=f"{alg.name}/J")
    return q, proj


def isomorphism(a, b):
    """An isomorphism a -> b as a dict, or ``None``."""
    if len(a) != len(b):
        return None
    if a.is_chain() != b.is_chain():
        return None
    # 0, 1 and ¬ are fixed by the structure; search the rest by backtracking
    order_a = sorted(a.elements, key=lambda x: sum(a.leq(y, x) for y in a.elements))
    rank_b = {x: sum(b.leq(y, x) for y in b.elements) for x in b.elements}
    rank_a = {x: sum(a.leq(y, x) for y in a.elements) for x in a.elements}
    mapping = {}
    used = set()

    def consistent(x):
        fx = mapping[x]
        if a.neg(x) in mapping and mapping[a.neg(x)] != b.neg(fx):
            return False
        for y, fy in mapping.items():
            s = a.oplus(x, y)
            if s in mapping and mapping[s] != b.oplus(fx, fy):
                return False
            s = a.oplus(y, x)
            if s in mapping and mapping[s] != b.oplus(fy, fx):
                return False
        return True

    def go(k):
        if k == len(order_a):
            return True
        x = order_a[k]
        for y in b.elements:
            if y in used or rank_b[y] != rank_a[x]:
                continue
            if x == a.zero and y != b.zero or x == a.one and y != b.one:
                continue
            mapping[x] = y
            used.add(y)
            if consistent(x) and go(k + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if go(0) else None


def is_isomorphic(a, b):
    return isomorphism(a, b) is not None


def from_tables(elements, oplus_rows, neg_row, zero=None, one=None, name=None, check=True):
    """Build from a row-major ⊕ table and a ¬ row over ``elements``.

    0 and 1 default to the first and last elements.
    """
    elements = tuple(elements)
    n = len(elements)
    if len(oplus_rows) != n or any(len(r) != n for r in oplus_rows) or len(neg_row) != n:
        raise MVLogicError("table size mismatch")
    oplus = {(a, b): oplus_rows[i][j] for i, a in enumerate(elements) for j, b in enumerate(elements)}
    neg = dict(zip(elements, neg_row))
    zero = elements[0] if zero is None else zero
    one = elements[-1] if one is None else one
    return FiniteMV(elements, oplus, neg, zero, one, name=name, check=check)
