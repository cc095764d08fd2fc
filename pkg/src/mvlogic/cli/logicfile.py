"""Plain-text logic and MV-algebra definition files.

A logic file::

    logic lukasiewicz:3
    values 0 1/2 1
    designated 1
    order 0 <= 1/2, 1/2 <= 1
    connective neg 1
      1 1/2 0
    connective imp 2
      1 1 1
      1/2 1 1
      0 1/2 1
    alias ~ neg prefix
    alias -> imp infix
    marker imp(p, neg(p))

Tables are row-major: one row per tuple of leading arguments (in value
order), one entry per value of the last argument. A nullary connective
has a single row with one entry. ``#`` starts a comment. ``order`` and
``marker`` are optional; ``designated`` may be empty.

An MV-algebra file uses ``algebra NAME``, ``values``, optional ``zero`` and
``one`` (first and last value by default), an ``oplus`` table and a ``neg``
row.
"""

import itertools
from importlib import resources
from pathlib import Path

from ..core.matrix import Alias, Connective, Matrix
from ..core.syntax import format_formula, parse_formula
from ..core.values import format_value, parse_value
from ..errors import MatrixError, MVLogicError
from ..logics.builtins import builtin
from ..mv.algebra import FiniteMV

_KEYWORDS = {"logic", "values", "designated", "order", "connective", "alias", "marker", "algebra", "zero", "one", "oplus", "neg"}

# shipped golden files, one per built-in
GOLDEN = {
    "lukasiewicz:3": "l3.logic",
    "post:4:3": "p4_3.logic",
    "godel:5": "g5.logic",
    "kleene-strong": "kleene-strong.logic",
    "kleene-weak": "kleene-weak.logic",
    "bochvar": "bochvar.logic",
    "belnap": "belnap.logic",
    "classical": "classical.logic",
}


class LogicFileError(MVLogicError):
    def __init__(self, message, line=None, detail=None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message if detail is None else f"{message}: {detail}")


def _lines(text):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def _value(tok, known, n):
    try:
        v = parse_value(tok)
    except ValueError:
        raise LogicFileError(f"bad value {tok!r}", n) from None
    if known is not None and v not in known:
        raise LogicFileError(f"unknown value {tok}", n)
    return v


def _values(rest, n):
    vals = []
    for tok in rest.split():
        v = _value(tok, None, n)
        if v in vals:
            raise LogicFileError(f"duplicate value {tok}", n)
        vals.append(v)
    if len(vals) < 2:
        raise LogicFileError("at least two values are needed", n)
    return vals


class _Reader:
    """Walks (line number, text) pairs, collecting table rows after a header."""

    def __init__(self, text):
        self.items = list(_lines(text))
        self.pos = 0

    def __iter__(self):
        while self.pos < len(self.items):
            n, line = self.items[self.pos]
            self.pos += 1
            word, _, rest = line.partition(" ")
            yield n, word, rest.strip()

    def table(self, header_line, rows, width, values):
        out = []
        for _ in range(rows):
            if self.pos >= len(self.items) or self.items[self.pos][1].split()[0] in _KEYWORDS:
                got = len(out)
                raise LogicFileError("table size mismatch", header_line, f"expected {rows} rows, got {got}")
            n, line = self.items[self.pos]
            self.pos += 1
            toks = line.split()
            if len(toks) != width:
                raise LogicFileError("table size mismatch", n, f"expected {width} entries, got {len(toks)}")
            out.append([_value(t, values, n) for t in toks])
        return out


def parse_logic_text(text):
    """Parse the text of a logic file into a validated :class:`Matrix`."""
    reader = _Reader(text)
    name = values = designated = order = marker = None
    conns, aliases = [], []
    for n, word, rest in reader:
        if word == "logic":
            name = rest
        elif word == "values":
            if values is not None:
                raise LogicFileError("values declared twice", n)
            values = _values(rest, n)
        elif word in ("designated", "order", "connective"):
            if values is None:
                raise LogicFileError("missing section 'values' before", n)
            if word == "designated":
                designated = frozenset(_value(t, values, n) for t in rest.split())
            elif word == "order":
                order = set()
                for pair in filter(None, (p.strip() for p in rest.split(","))):
                    a, sep, b = pair.partition("<=")
                    if not sep:
                        raise LogicFileError(f"order pairs look like 'a <= b', got {pair!r}", n)
                    order.add((_value(a.strip(), values, n), _value(b.strip(), values, n)))
            else:
                parts = rest.split()
                if len(parts) != 2 or not parts[1].isdigit():
                    raise LogicFileError("connective header is 'connective NAME ARITY'", n)
                cname, arity = parts[0], int(parts[1])
                rows = len(values) ** (arity - 1) if arity else 1
                width = len(values) if arity else 1
                grid = reader.table(n, rows, width, values)
                table = {}
                if arity == 0:
                    table[()] = grid[0][0]
                else:
                    for lead, row in zip(itertools.product(values, repeat=arity - 1), grid):
                        for last, out in zip(values, row):
                            table[lead + (last,)] = out
                conns.append((n, Connective(cname, arity, table)))
        elif word == "alias":
            parts = rest.split()
            if len(parts) != 3:
                raise LogicFileError("alias line is 'alias SYMBOL CONNECTIVE KIND'", n)
            aliases.append(Alias(*parts))
        elif word == "marker":
            marker = (n, rest)
        else:
            raise LogicFileError(f"unknown keyword {word!r}", n)
    for field, val in (("logic", name), ("values", values), ("designated", designated)):
        if val is None:
            raise LogicFileError(f"missing section '{field}'")
    if not conns:
        raise LogicFileError("missing section 'connective'")
    try:
        m = Matrix(name, tuple(values), designated, tuple(c for _, c in conns), order, tuple(aliases))
    except MatrixError as e:
        raise LogicFileError(str(e)) from e
    if marker is not None:
        try:
            m = m.with_marker(parse_formula(marker[1], m))
        except MVLogicError as e:
            raise LogicFileError("bad marker", marker[0], str(e)) from e
    return m


def parse_logic_file(path):
    return parse_logic_text(Path(path).read_text(encoding="utf-8"))


def _covers(matrix):
    """The covering pairs of the declared order."""
    strict = {(a, b) for a, b in matrix.order if a != b}
    out = []
    for a, b in strict:
        if not any((a, c) in strict and (c, b) in strict for c in matrix.values):
            out.append((a, b))
    return sorted(out, key=lambda p: (matrix.index(p[0]), matrix.index(p[1])))


def serialize_logic(matrix):
    """Text that :func:`parse_logic_text` reads back to an equal matrix."""
    fv = format_value
    out = [f"logic {matrix.name}", "values " + " ".join(fv(v) for v in matrix.values)]
    out.append(("designated " + " ".join(fv(v) for v in matrix.values if v in matrix.designated)).rstrip())
    if matrix.order is not None:
        out.append("order " + ", ".join(f"{fv(a)} <= {fv(b)}" for a, b in _covers(matrix)))
    for c in matrix.connectives:
        out.append(f"connective {c.name} {c.arity}")
        if c.arity == 0:
            out.append("  " + fv(c.table[()]))
            continue
        for lead in itertools.product(matrix.values, repeat=c.arity - 1):
            out.append("  " + " ".join(fv(c.table[lead + (v,)]) for v in matrix.values))
    for a in matrix.aliases:
        out.append(f"alias {a.symbol} {a.conn} {a.kind}")
    if matrix.marker is not None:
        out.append("marker " + format_formula(matrix.marker))
    return "\n".join(out) + "\n"


def golden_text(name):
    return resources.files("mvlogic.cli").joinpath("logics", GOLDEN[name]).read_text(encoding="utf-8")


def load_logic(spec):
    """A built-in name (``lukasiewicz:3``) or a path to a logic file."""
    p = Path(spec)
    if spec.endswith(".logic") or p.is_file():
        if not p.is_file():
            raise LogicFileError(f"no such logic file: {spec}")
        return parse_logic_file(p)
    return builtin(spec)


def parse_mv_text(text):
    """Parse an MV-algebra file; the axioms M1-M8 are checked on load."""
    reader = _Reader(text)
    name = values = zero = one = oplus = neg = None
    for n, word, rest in reader:
        if word == "algebra":
            name = rest
        elif word == "values":
            values = _values(rest, n)
        elif word in ("zero", "one", "oplus", "neg"):
            if values is None:
                raise LogicFileError("missing section 'values' before", n)
            if word == "zero":
                zero = _value(rest, values, n)
            elif word == "one":
                one = _value(rest, values, n)
            elif word == "oplus":
                oplus = reader.table(n, len(values), len(values), values)
            else:
                neg = reader.table(n, 1, len(values), values)[0]
        else:
            raise LogicFileError(f"unknown keyword {word!r}", n)
    for field, val in (("values", values), ("oplus", oplus), ("neg", neg)):
        if val is None:
            raise LogicFileError(f"missing section '{field}'")
    zero = values[0] if zero is None else zero
    one = values[-1] if one is None else one
    table = {(a, b): oplus[i][j] for i, a in enumerate(values) for j, b in enumerate(values)}
    try:
        return FiniteMV(values, table, dict(zip(values, neg)), zero, one, name=name)
    except MVLogicError as e:
        raise LogicFileError(str(e)) from e


def parse_mv_file(path):
    return parse_mv_text(Path(path).read_text(encoding="utf-8"))


def serialize_mv(alg):
    fv = format_value
    elements, rows, neg = alg.tables()
    out = [f"algebra {alg.name}", "values " + " ".join(fv(v) for v in elements)]
    out.append(f"zero {fv(alg.zero)}")
    out.append(f"one {fv(alg.one)}")
    out.append("oplus")
    out.extend("  " + " ".join(fv(v) for v in row) for row in rows)
    out.append("neg")
    out.append("  " + " ".join(fv(v) for v in neg))
    return "\n".join(out) + "\n"


__all__ = [
    "GOLDEN",
    "LogicFileError",
    "golden_text",
    "load_logic",
    "parse_logic_file",
    "parse_logic_text",
    "parse_mv_file",
    "parse_mv_text",
    "serialize_logic",
    "serialize_mv",
]
