"""Post algebras: term synthesis over (or, ~) and the monotonic representation.

Every function n^k -> n is a term in ``or`` (max) and ``~`` (cyclic
predecessor). The construction here is a max-of-indicators normal form:

* ``top(p)``     = p | ~p | ... | ~^(n-1) p, constantly n-1
* ``is_top(y)``  = ~^(n-1) (~y | ~~y | ... | ~^(n-1) y), n-1 iff y = n-1 else 0
* ``is_val(a,x)``= is_top(~^(a+1) x), n-1 iff x = a else 0
* Boolean (0 / n-1) values are negated by ``is_val(0, .)`` and conjoined by
  De Morgan over ``or``
* ``scale(v,b)`` = ~^(n-v-1) (b | ~^(v+1) b) maps a Boolean b to v or 0.

The returned term is always re-checked on all n^k inputs.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..core.formula import App, Atom, placeholder_atoms, substitute
from ..core.semantics import compile_formula
from ..errors import VerificationError


def _shift(f, k, n):
    # fold into any existing run of ~, since ~^n is the identity
    while isinstance(f, App) and f.conn == "neg":
        f, k = f.args[0], k + 1
    for _ in range(k % n):
        f = App("neg", (f,))
    return f


def _big_or(terms):
    terms = list(terms)
    out = terms[-1]
    for t in reversed(terms[:-1]):
        out = App("or", (t, out))
    return out


def top_term(p, n):
    return _big_or(_shift(p, j, n) for j in range(n))


def constant_term(value, p, n):
    """A term in ``p`` that is constantly ``value``."""
    return _shift(top_term(p, n), n - 1 - int(value), n)


def _is_top(y, n):
    return _shift(_big_or(_shift(y, j, n) for j in range(1, n)), n - 1, n)


def indicator(a, x, n):
    """n-1 where x = a, else 0."""
    return _is_top(_shift(x, int(a) + 1, n), n)


def _bool_not(b, n):
    return indicator(0, b, n)


def _bool_and(bs, n):
    bs = list(bs)
    if len(bs) == 1:
        return bs[0]
    return _bool_not(_big_or(_bool_not(b, n) for b in bs), n)


def _scale(v, b, n):
    v = int(v)
    if v == n - 1:
        return b
    return _shift(App("or", (b, _shift(b, v + 1, n))), n - v - 1, n)


def _as_table(n, k, target):
    values = [Fraction(i) for i in range(n)]
    table = {}
    for row in itertools.product(values, repeat=k):
        out = target(*row) if callable(target) else target[tuple(int(x) for x in row)] if _int_keys(target) else target[row]
        out = Fraction(out)
        if not (0 <= out < n and out.denominator == 1):
            raise ValueError(f"target value {out} outside 0..{n - 1}")
        table[row] = out
    return table


def _int_keys(target):
    key = next(iter(target))
    return all(isinstance(x, int) for x in key)


def post_synthesize(n, k, target, atoms=None):
    """A term over ``or`` and ``neg`` computing ``target`` on all of n^k.

    ``target`` is a callable on ``k`` values or a dict keyed by k-tuples.
    For ``k = 0`` the result is a constant term in a dummy atom ``p``.
    """
    from .builtins import post_unmarked

    if n < 2 or k < 0:
        raise ValueError("need n >= 2 and k >= 0")
    atoms = list(atoms) if atoms is not None else placeholder_atoms(k)
    if len(atoms) != k:
        raise ValueError("need one atom name per argument")
    table = _as_table(n, k, target)
    matrix = post_unmarked(n)

    term = _small_candidate(n, atoms, table, matrix) or _canonical(n, atoms, table)
    check_atoms = atoms or ["p"]
    fn = compile_formula(term, check_atoms, matrix)
    for row, out in table.items():
        vals = row if atoms else (Fraction(0),)
        if fn(vals) != out:
            raise VerificationError(f"synthesized term disagrees with target at {row}")
    if not atoms:
        for v in matrix.values:
            if fn((v,)) != table[()]:
                raise VerificationError("constant term depends on its dummy atom")
    return term


def _small_candidate(n, atoms, table, matrix):
    for name in atoms:
        for j in range(n):
            cand = _shift(Atom(name), j, n)
            fn = compile_formula(cand, atoms, matrix)
            if all(fn(row) == out for row, out in table.items()):
                return cand
    return None


def _canonical(n, atoms, table):
    xs = [Atom(a) for a in atoms]
    if not xs:
        return constant_term(table[()], Atom("p"), n)
    parts = []
    for v in range(1, n):
        rows = [row for row, out in table.items() if out == v]
        if not rows:
            continue
        hits = [_bool_and((indicator(r, x, n) for r, x in zip(row, xs)), n) for row in rows]
        parts.append(_scale(v, _big_or(hits), n))
    if not parts:
        return constant_term(0, xs[0], n)
    return _big_or(parts)


def constant_zero_term(n, p="p"):
    """p & ~p & ... & ~^(n-1) p, with & expanded into (or, ~).

    The minimum over a full cycle of predecessors is 0 at every input.
    """
    meet = post_synthesize(n, 2, lambda a, b: min(a, b), atoms=["_a", "_b"])
    x = Atom(p)
    out = _shift(x, n - 1, n)
    for j in range(n - 2, -1, -1):
        out = substitute(meet, {"_a": _shift(x, j, n), "_b": out})
    return out


def post_marker(n, m):
    """N(p) for P_n^m: designated exactly on the undesignated inputs."""
    return post_synthesize(n, 1, lambda i: n - 1 if i < m else 0, atoms=["p"])


@dataclass(frozen=True)
class MonotonicRepresentation:
    """Truth values of P_n as decreasing 0/1 tuples of length n - 1.

    ``rep[i]`` has a 1 in position k (1-based) iff i >= k; ``or``/``and``
    are componentwise max/min and ``shift`` is conjugate to ``~``.
    """

    n: int

    def rep(self, i):
        i = int(i)
        return tuple(1 if i >= k else 0 for k in range(1, self.n))

    def value(self, bits):
        bits = tuple(bits)
        if len(bits) != self.n - 1 or any(b not in (0, 1) for b in bits):
            raise ValueError("expected n - 1 bits")
        if any(bits[k] < bits[k + 1] for k in range(len(bits) - 1)):
            raise ValueError(f"{bits} is not monotone decreasing")
        return sum(bits)

    def shift(self, bits):
        # b_k = a_{k+1} or not a_1, with a_n = 0
        a = tuple(bits) + (0,)
        not_first = 1 - a[0]
        return tuple(a[k + 1] | not_first for k in range(self.n - 1))

    @staticmethod
    def join(x, y):
        return tuple(max(a, b) for a, b in zip(x, y))

    @staticmethod
    def meet(x, y):
        return tuple(min(a, b) for a, b in zip(x, y))

    def bijection(self):
        return {Fraction(i): self.rep(i) for i in range(self.n)}


def post_monotonic(n):
    if n < 2:
        raise ValueError("need n >= 2")
    return MonotonicRepresentation(n)
