"""Tiny expression language for polynomial literals on the command line.

Grammar (whitespace insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('+' | '-')* power
    power  := atom ('^' INTEGER)*
    atom   := 'z' | 'zbar' | 'i' | NUMBER | '(' expr ')'

NUMBER is a nonnegative decimal literal (42, 0.5, 1e-3); 'i' is the imaginary
unit.  Multiplication must be written explicitly ("2*z", not "2z").  The
ASCII hyphen and the unicode minus sign are both accepted.  Parsing produces
a :class:`~.poly.PolyZZbar`; errors raise :class:`ExprError` with the
offending position.
"""

from __future__ import annotations

import re

from .poly import PolyZZbar

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>zbar|z|i)"
    r"|(?P<op>[+\-*^()])"
    r")"
)


class ExprError(ValueError):
    """Raised on any lexical or syntactic problem in a polynomial literal."""


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.replace("−", "-")  # unicode minus
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ExprError(f"unexpected character {rest[0]!r} at position {pos}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], text: str):
        self.tokens = tokens
        self.text = text
        self.pos = 0

    def _peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None:
            raise ExprError(f"unexpected end of expression in {self.text!r}")
        self.pos += 1
        return tok

    def _accept_op(self, *ops: str) -> str | None:
        tok = self._peek()
        if tok is not None and tok[0] == "op" and tok[1] in ops:
            self.pos += 1
            return tok[1]
        return None

    def parse(self) -> PolyZZbar:
        result = self.expr()
        tok = self._peek()
        if tok is not None:
            raise ExprError(f"unexpected {tok[1]!r} at position {tok[2]}")
        return result

    def expr(self) -> PolyZZbar:
        result = self.term()
        while True:
            op = self._accept_op("+", "-")
            if op is None:
                return result
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs

    def term(self) -> PolyZZbar:
        result = self.factor()
        while self._accept_op("*"):
            result = result * self.factor()
        return result

    def factor(self) -> PolyZZbar:
        sign = 1.0
        while True:
            op = self._accept_op("+", "-")
            if op is None:
                break
            if op == "-":
                sign = -sign
        return self.power() * sign if sign < 0 else self.power()

    def power(self) -> PolyZZbar:
        result = self.atom()
        while self._accept_op("^"):
            kind, text, start = self._next()
            if kind != "num" or not text.isdigit():
                raise ExprError(
                    f"exponent must be a nonnegative integer, got {text!r} at position {start}"
                )
            result = result ** int(text)
        return result

    def atom(self) -> PolyZZbar:
        kind, text, start = self._next()
        if kind == "num":
            return PolyZZbar.constant(float(text))
        if kind == "name":
            if text == "z":
                return PolyZZbar.z()
            if text == "zbar":
                return PolyZZbar.zbar()
            return PolyZZbar.constant(1j)
        if kind == "op" and text == "(":
            inner = self.expr()
            if not self._accept_op(")"):
                raise ExprError(f"missing ')' for '(' at position {start}")
            return inner
        raise ExprError(f"unexpected {text!r} at position {start}")


def parse_poly(text: str) -> PolyZZbar:
    """Parse a polynomial literal such as "z*zbar - 2" or "(1+i)*z^2"."""
    tokens = _tokenize(text)
    if not tokens:
        raise ExprError("empty expression")
    return _Parser(tokens, text).parse()
