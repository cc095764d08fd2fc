"""Formula parsing and pretty-printing.

Grammar (one precedence level for infix aliases, right-associative; prefix
aliases bind tightest)::

    expr    := unary (INFIX expr)?
    unary   := PREFIX unary | primary
    primary := '(' expr ')' | NAME '(' [expr (',' expr)*] ')' | NULLARY | NAME

A bare NAME is an atom; ``NAME(...)`` applies the connective called NAME.
"""

import re

from ..errors import FormulaSyntaxError
from .formula import App, Atom

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _tokenize(text, matrix):
    symbols = sorted((a.symbol for a in matrix.aliases), key=len, reverse=True)
    words = {s for s in symbols if _NAME.fullmatch(s)}
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "(),":
            tokens.append((ch, ch, i))
            i += 1
            continue
        m = _NAME.match(text, i)
        if m:
            kind = "sym" if m.group() in words else "name"
            tokens.append((kind, m.group(), i))
            i = m.end()
            continue
        for sym in symbols:
            if sym not in words and text.startswith(sym, i):
                tokens.append(("sym", sym, i))
                i += len(sym)
                break
        else:
            raise FormulaSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, matrix):
        self.text = text
        self.matrix = matrix
        self.tokens = _tokenize(text, matrix)
        self.pos = 0
        self.by_symbol = {a.symbol: a for a in matrix.aliases}

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            shown = tok[1] or "end of input"
            raise FormulaSyntaxError(f"expected {kind!r}, found {shown!r}", tok[2])
        return tok

    def parse(self):
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise FormulaSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return f

    def expr(self):
        left = self.unary()
        tok = self.peek()
        if tok[0] == "sym" and self.by_symbol[tok[1]].kind == "infix":
            self.take()
            right = self.expr()
            return App(self.by_symbol[tok[1]].conn, (left, right))
        return left

    def unary(self):
        tok = self.peek()
        if tok[0] == "sym":
            alias = self.by_symbol[tok[1]]
            if alias.kind == "prefix":
                self.take()
                return App(alias.conn, (self.unary(),))
        return self.primary()

    def primary(self):
        tok = self.take()
        kind, text, at = tok
        if kind == "(":
            f = self.expr()
            self.expect(")")
            return f
        if kind == "sym":
            alias = self.by_symbol[text]
            if alias.kind == "nullary":
                return App(alias.conn, ())
            raise FormulaSyntaxError(f"{alias.kind} operator {text!r} is missing an operand", at)
        if kind == "name":
            if self.peek()[0] == "(":
                self.take()
                args = []
                if self.peek()[0] != ")":
                    args.append(self.expr())
                    while self.peek()[0] == ",":
                        self.take()
                        args.append(self.expr())
                self.expect(")")
                if not self.matrix.has_connective(text):
                    raise FormulaSyntaxError(f"unknown connective {text!r}", at)
                arity = self.matrix.connective(text).arity
                if arity != len(args):
                    raise FormulaSyntaxError(
                        f"arity mismatch: {text} takes {arity} argument(s), got {len(args)}", at
                    )
                return App(text, tuple(args))
            return Atom(text)
        if kind == "end":
            raise FormulaSyntaxError("unexpected end of input", at)
        raise FormulaSyntaxError(f"unexpected {text!r}", at)


def parse_formula(text, matrix):
    """Parse ``text`` into a :class:`Formula` using the aliases declared in ``matrix``."""
    return _Parser(text, matrix).parse()


def _first_alias(matrix, conn):
    if matrix is None:
        return None
    for a in matrix.aliases:
        if a.conn == conn:
            return a
    return None


def format_formula(formula, matrix=None):
    """Pretty-print so that :func:`parse_formula` reads the same tree back."""

    def fmt(f):
        if isinstance(f, Atom):
            return f.name
        alias = _first_alias(matrix, f.conn)
        if alias is None:
            return f"{f.conn}(" + ", ".join(fmt(a) for a in f.args) + ")"
        if alias.kind == "nullary":
            return alias.symbol
        if alias.kind == "prefix":
            inner = fmt(f.args[0])
            if _is_infix(f.args[0], matrix):
                inner = f"({inner})"
            return f"{alias.symbol}{inner}"
        left = fmt(f.args[0])
        if _is_infix(f.args[0], matrix):
            left = f"({left})"
        return f"{left} {alias.symbol} {fmt(f.args[1])}"

    return fmt(formula)


def _is_infix(f, matrix):
    if not isinstance(f, App):
        return False
    alias = _first_alias(matrix, f.conn)
    return alias is not None and alias.kind == "infix"
