"""Chang's algebra Γ(ℤ ⊕lex ℤ, (1,0)) on exact integer pairs, and element orders."""

import math
from dataclasses import dataclass

from ..errors import MVLogicError
from .algebra import FiniteMV

INFINITE = math.inf


@dataclass(frozen=True)
class LexPair:
    """An element (a, b) of [0, u] with u = (1, 0) in the lexicographic order."""

    a: int
    b: int

    def __post_init__(self):
        if not (ZERO_T <= (self.a, self.b) <= UNIT_T):
            raise MVLogicError(f"({self.a},{self.b}) lies outside [(0,0), (1,0)]")

    @property
    def t(self):
        return (self.a, self.b)

    def __str__(self):
        return f"({self.a},{self.b})"


ZERO_T, UNIT_T = (0, 0), (1, 0)
ZERO = LexPair(0, 0)
ONE = LexPair(1, 0)


def _pair(t):
    return LexPair(*t)


def _add(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _sub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def chang_op(x, y=None, op="oplus"):
    """⊕, ⊗, ¬, ∨, ∧ or ≤ on Chang's algebra.

    Tuples compare lexicographically, so ``min``/``max`` are the lattice
    operations of ℤ ⊕lex ℤ.
    """
    if not isinstance(x, LexPair) or (op != "neg" and not isinstance(y, LexPair)):
        raise MVLogicError("operands must be LexPair elements")
    if op == "oplus":
        return _pair(min(_add(x.t, y.t), UNIT_T))
    if op == "otimes":
        return _pair(max(_sub(_add(x.t, y.t), UNIT_T), ZERO_T))
    if op == "neg":
        return _pair(_sub(UNIT_T, x.t))
    if op == "vee":
        return _pair(max(x.t, y.t))
    if op == "wedge":
        return _pair(min(x.t, y.t))
    if op == "leq":
        return x.t <= y.t
    raise ValueError(f"unknown operation {op!r}")


class ChangView:
    """The finite-window interface used by :func:`check_axioms` on Chang's algebra.

    Operations are exact on all of C; ``elements`` is the window of pairs
    with second coordinate at most ``bound`` in absolute value.
    """

    zero, one = ZERO, ONE

    def __init__(self, bound=20):
        self.bound = bound
        self.elements = tuple(LexPair(0, k) for k in range(bound + 1)) + tuple(
            LexPair(1, -k) for k in range(bound, -1, -1)
        )
        self.name = f"C[|b|<={bound}]"

    def oplus(self, x, y):
        return chang_op(x, y, "oplus")

    def otimes(self, x, y):
        return chang_op(x, y, "otimes")

    def neg(self, x):
        return chang_op(x, None, "neg")

    def vee(self, x, y):
        # computed from ⊕ and ¬ as in any MV-algebra, compared with max in the tests
        return self.oplus(self.neg(self.oplus(self.neg(x), y)), y)

    def wedge(self, x, y):
        return self.otimes(self.neg(self.otimes(self.neg(x), y)), y)

    def imp(self, x, y):
        return self.oplus(self.neg(x), y)

    def leq(self, x, y):
        return self.vee(x, y) == y

    def multiple(self, k, x):
        out = ZERO
        for _ in range(k):
            out = self.oplus(x, out)
        return out


@dataclass(frozen=True)
class OrderCertificate:
    """Why an element of C has the order it has."""

    element: LexPair
    order: object
    reason: str


def chang_order(x, check_up_to=100):
    """Order of ``x`` in C with an analytic certificate.

    (0, b): k·(0, b) = (0, kb) < (1, 0) for every k, so the order is
    infinite. (1, b) with b <= 0: (1, b) ⊕ (1, b) = (2, 2b) ∧ (1, 0) = (1, 0),
    so the order is 1 when b = 0 and 2 otherwise. The claim is re-checked
    for k <= ``check_up_to``.
    """
    view = ChangView(0)
    if x.a == 0:
        cert = OrderCertificate(x, INFINITE, f"k·{x} = (0,{x.b}k) < (1,0) for every k >= 1")
        for k in range(1, check_up_to + 1):
            if view.multiple(k, x) != LexPair(0, k * x.b):
                raise MVLogicError("certificate check failed")
        return cert
    k = 1 if x == ONE else 2
    cert = OrderCertificate(x, k, f"first coordinate 1, so {k}·{x} reaches (1,0)")
    if view.multiple(k, x) != ONE or (k > 1 and view.multiple(k - 1, x) == ONE):
        raise MVLogicError("certificate check failed")
    return cert


def element_order(alg, a):
    """Least k >= 1 with ka = 1, or ``INFINITE``.

    In a finite algebra the multiples of a increase, so k never exceeds the
    carrier size. For Chang's algebra the answer comes with a certificate
    (see :func:`chang_order`).
    """
    if isinstance(a, LexPair):
        return chang_order(a).order
    if not isinstance(alg, FiniteMV):
        raise MVLogicError("element_order needs a FiniteMV or a LexPair")
    if a not in alg:
        raise MVLogicError(f"{a!r} is not an element")
    x = alg.zero
    for k in range(1, len(alg) + 1):
        x = alg.oplus(a, x)
        if x == alg.one:
            return k
    return INFINITE
