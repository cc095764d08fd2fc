"""Truth values: exact rationals or opaque tokens."""

import re
from fractions import Fraction

# Only the canonical spelling of a rational is read as a number, so "01"
# (a Belnap value) stays a token.
_RATIONAL = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")
_TOKEN = re.compile(r"[^\s,{}()=:#]+")


def parse_value(text):
    """Read a truth-value label: a ``Fraction`` when it is a canonical rational."""
    text = text.strip()
    if _RATIONAL.fullmatch(text):
        return Fraction(text)
    if not _TOKEN.fullmatch(text):
        raise ValueError(f"not a valid truth-value label: {text!r}")
    return text


def format_value(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return str(value)


def as_value(value):
    """Coerce ints and rational strings to ``Fraction``; leave tokens alone."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not truth values")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_value(value)
    raise TypeError(f"unsupported truth value {value!r}")


def unit_interval_grid(n):
    """The n-element chain I_n = {0, 1/(n-1), ..., 1}."""
    if n < 2:
        raise ValueError("I_n needs n >= 2")
    return tuple(Fraction(i, n - 1) for i in range(n))


def format_sign(sign, matrix=None):
    """Render a set of values as ``{0,1/2}`` in matrix order when possible."""
    if matrix is not None:
        items = [v for v in matrix.values if v in sign]
    else:
        items = sorted(sign, key=lambda v: (isinstance(v, str), str(v) if isinstance(v, str) else v))
    return "{" + ",".join(format_value(v) for v in items) + "}"
