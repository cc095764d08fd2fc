"""Built-in matrices for the classical systems of many-valued logic."""

import functools
from dataclasses import dataclass
from fractions import Fraction

from ..core.formula import App, Atom
from ..core.matrix import Alias, Connective, Matrix, chain_order
from ..core.values import unit_interval_grid
from ..errors import MatrixError

FAMILIES = (
    "lukasiewicz",
    "godel",
    "post",
    "kleene-strong",
    "kleene-weak",
    "bochvar",
    "belnap",
    "classical",
)

ONE = Fraction(1)
ZERO = Fraction(0)
TWO = Fraction(2)

# Belnap's four values: told nothing, told false, told true, told both.
B_NONE = "∅"
B_BOTH = "01"
BELNAP_VALUES = (B_NONE, ZERO, ONE, B_BOTH)

_SYMBOLS = {
    "imp": ("infix", "->", "→"),
    "neg": ("prefix", "~", "¬"),
    "or": ("infix", "|", "∨"),
    "and": ("infix", "&", "∧"),
    "oplus": ("infix", "+", "⊕"),
    "otimes": ("infix", "*", "⊗"),
    "iff": ("infix", "<->", "↔"),
    "one": ("nullary", "1"),
    "zero": ("nullary", "0"),
}


@dataclass(frozen=True)
class BuiltinSpec:
    family: str
    n: int = None
    m: int = None

    @classmethod
    def parse(cls, text):
        """Read ``lukasiewicz:3``, ``post:4:3``, ``godel:5``, ``belnap`` ..."""
        parts = text.strip().split(":")
        family = parts[0].replace("_", "-")
        if family not in FAMILIES:
            raise MatrixError(f"unknown built-in logic {parts[0]!r}")
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise MatrixError(f"bad parameters in {text!r}") from None
        if len(nums) > 2:
            raise MatrixError(f"too many parameters in {text!r}")
        return cls(family, *nums)

    def label(self):
        if self.family in ("lukasiewicz", "godel"):
            return f"{self.family}:{self.n}"
        if self.family == "post":
            return f"post:{self.n}:{self.m}"
        return self.family


def _aliases(names, symbols=_SYMBOLS):
    out = []
    for name in names:
        kind, *syms = symbols[name]
        out.extend(Alias(s, name, kind) for s in syms)
    return tuple(out)


def _conns(values, fns):
    out = []
    for name, (arity, fn) in fns.items():
        out.append(Connective.from_function(name, arity, values, fn))
    return tuple(out)


# matrices are immutable, so built ones are shared
@functools.lru_cache(maxsize=None)
def lukasiewicz(n):
    """Ł_n over I_n with D = {1}; the primitives are (->, ~, 1) and the
    derived connectives are tabulated from their closed forms."""
    if n < 2:
        raise MatrixError("lukasiewicz needs n >= 2")
    values = unit_interval_grid(n)
    fns = {
        "imp": (2, lambda i, j: min(1 - i + j, ONE)),
        "neg": (1, lambda i: 1 - i),
        "one": (0, lambda: ONE),
        "zero": (0, lambda: ZERO),
        "oplus": (2, lambda i, j: min(i + j, ONE)),
        "otimes": (2, lambda i, j: max(i + j - 1, ZERO)),
        "or": (2, max),
        "and": (2, min),
        "iff": (2, lambda i, j: 1 - abs(i - j)),
    }
    return Matrix(
        name=f"lukasiewicz:{n}",
        values=values,
        designated={ONE},
        connectives=_conns(values, fns),
        order=chain_order(values),
        aliases=_aliases(fns),
        marker=lukasiewicz_marker(n),
    )


def lukasiewicz_marker(n):
    """p -> (p -> ... (p -> ~p)) with n - 1 implication signs."""
    p = Atom("p")
    f = App("neg", (p,))
    for _ in range(n - 1):
        f = App("imp", (p, f))
    return f


@functools.lru_cache(maxsize=None)
def godel(n):
    if n < 2:
        raise MatrixError("godel needs n >= 2")
    values = unit_interval_grid(n)
    fns = {
        "or": (2, max),
        "and": (2, min),
        "imp": (2, lambda i, j: ONE if i <= j else j),
        "neg": (1, lambda i: ONE if i == 0 else ZERO),
        "zero": (0, lambda: ZERO),
        "one": (0, lambda: ONE),
    }
    return Matrix(
        name=f"godel:{n}",
        values=values,
        designated={ONE},
        connectives=_conns(values, fns),
        order=chain_order(values),
        aliases=_aliases(fns),
    )


@functools.lru_cache(maxsize=None)
def post(n, m=None):
    """P_n^m over {0, ..., n-1} with D = {m, ..., n-1}; m defaults to n - 1."""
    matrix = post_unmarked(n, m)
    m = n - 1 if m is None else m
    if m == 0:
        return matrix
    from .post_algebra import post_marker

    return matrix.with_marker(post_marker(n, m))


def post_unmarked(n, m=None):
    if n < 2:
        raise MatrixError("post needs n >= 2")
    if m is None:
        m = n - 1
    if not 0 <= m <= n - 1:
        raise MatrixError("post needs 0 <= m <= n - 1")
    values = tuple(Fraction(i) for i in range(n))
    fns = {
        "or": (2, max),
        "neg": (1, lambda i: (i - 1) % n),
    }
    symbols = {"or": ("infix", "|", "∨"), "neg": ("prefix", "~", "∼")}
    return Matrix(
        name=f"post:{n}:{m}",
        values=values,
        designated=set(values[m:]),
        connectives=_conns(values, fns),
        order=chain_order(values),
        aliases=_aliases(fns, symbols),
    )


def _three_valued(name, tables):
    # value 2 is the third value; truth order 0 < 2 < 1
    values = (ZERO, ONE, TWO)
    fns = dict(tables)
    return Matrix(
        name=name,
        values=values,
        designated={ONE},
        connectives=_conns(values, fns),
        order=chain_order((ZERO, TWO, ONE)),
        aliases=_aliases(fns),
    )


def _kleene_neg(i):
    return {ZERO: ONE, ONE: ZERO, TWO: TWO}[i]


def _kleene_or(i, j):
    if i == ONE or j == ONE:
        return ONE
    if i == ZERO and j == ZERO:
        return ZERO
    return TWO


def _kleene_and(i, j):
    return _kleene_neg(_kleene_or(_kleene_neg(i), _kleene_neg(j)))


def kleene_strong():
    return _three_valued(
        "kleene-strong",
        {
            "neg": (1, _kleene_neg),
            "or": (2, _kleene_or),
            "and": (2, _kleene_and),
            "imp": (2, lambda i, j: _kleene_or(_kleene_neg(i), j)),
        },
    )


def _weak(op):
    def table(*args):
        if TWO in args:
            return TWO
        return op(*args)

    return table


def _weak_tables():
    return {
        "neg": (1, _weak(lambda i: 1 - i)),
        "or": (2, _weak(max)),
        "and": (2, _weak(min)),
        "imp": (2, _weak(lambda i, j: max(1 - i, j))),
    }


def kleene_weak():
    return _three_valued("kleene-weak", _weak_tables())


def bochvar():
    return _three_valued("bochvar", _weak_tables())


def belnap():
    """Belnap's four-valued logic; no designated values, logical-lattice order."""
    values = BELNAP_VALUES
    order = chain_order((ZERO, B_NONE, ONE)) | chain_order((ZERO, B_BOTH, ONE))
    probe = Matrix("belnap-order", values, set(), (), order=order)
    fns = {
        "neg": (1, lambda i: {B_NONE: B_NONE, ZERO: ONE, ONE: ZERO, B_BOTH: B_BOTH}[i]),
        "or": (2, lambda i, j: probe.sup((i, j))),
        "and": (2, lambda i, j: probe.inf((i, j))),
    }
    return Matrix(
        name="belnap",
        values=values,
        designated=set(),
        connectives=_conns(values, fns),
        order=order,
        aliases=_aliases(fns),
    )


def classical():
    """The two-element Boolean matrix; (|, ~) are primitive, & and -> tabulated."""
    values = (ZERO, ONE)
    fns = {
        "or": (2, max),
        "neg": (1, lambda i: 1 - i),
        "and": (2, min),
        "imp": (2, lambda i, j: max(1 - i, j)),
    }
    return Matrix(
        name="classical",
        values=values,
        designated={ONE},
        connectives=_conns(values, fns),
        order=chain_order(values),
        aliases=_aliases(fns),
        marker=App("neg", (Atom("p"),)),
    )


def builtin(spec):
    """Build a matrix from a :class:`BuiltinSpec` or a name like ``"post:4:3"``."""
    if isinstance(spec, str):
        spec = BuiltinSpec.parse(spec)
    fam = spec.family
    if fam in ("lukasiewicz", "godel"):
        if spec.n is None:
            raise MatrixError(f"{fam} needs n, e.g. {fam}:3")
        if spec.m is not None:
            raise MatrixError(f"{fam} takes a single parameter")
        return lukasiewicz(spec.n) if fam == "lukasiewicz" else godel(spec.n)
    if fam == "post":
        if spec.n is None:
            raise MatrixError("post needs n, e.g. post:4 or post:4:3")
        return post(spec.n, spec.m)
    makers = {
        "kleene-strong": kleene_strong,
        "kleene-weak": kleene_weak,
        "bochvar": bochvar,
        "belnap": belnap,
        "classical": classical,
    }
    return makers[fam]()


# The connectives of each system's defining language; derived extras are left out.
PRIMITIVES = {
    "lukasiewicz": ("imp", "neg", "one"),
    "godel": ("or", "and", "imp", "neg", "zero", "one"),
    "post": ("or", "neg"),
    "kleene-strong": ("neg", "or", "and", "imp"),
    "kleene-weak": ("neg", "or", "and", "imp"),
    "bochvar": ("neg", "or", "and", "imp"),
    "belnap": ("neg", "or", "and"),
    "classical": ("or", "neg"),
}


def family_of(matrix):
    return matrix.name.split(":")[0]
