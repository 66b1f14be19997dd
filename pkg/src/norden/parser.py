"""Recursive-descent parser for scalar text.

Grammar (whitespace is ignored between tokens)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := unary ('*' unary)*
    unary    := ('+'|'-') unary | factor
    factor   := base ('^' posint)?
    base     := rational | ident | '(' expr ')'
    rational := int ('/' posint)?
    ident    := 'l1' .. 'l12'

Unary signs are accepted so that printed polynomials such as ``-3/2*l1^2``
parse back unchanged.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomial import PARAMETERS, Polynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownIdentifierError(ParseError):
    pass


class ZeroDenominatorError(ParseError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def at_end_pos(self) -> int:
        return len(self.text)

    def take(self, value: str | None = None, kind: str | None = None):
        tok = self.peek()
        if tok is None:
            want = value or kind
            raise ParseError(f"unexpected end of input, expected {want}", self.at_end_pos(), self.text)
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value else kind
            raise ParseError(f"expected {want}, found {tok[1]!r}", tok[2], self.text)
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == value:
            self.i += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty expression", 0, self.text)
        result = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2], self.text)
        return result

    def expr(self) -> Polynomial:
        acc = self.term()
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.accept("*"):
            acc = acc * self.unary()
        return acc

    def unary(self) -> Polynomial:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.factor()

    def factor(self) -> Polynomial:
        base = self.base()
        if self.accept("^"):
            kind, value, pos = self.take(kind="num")
            exp = int(value)
            if exp < 1:
                raise ParseError("exponent must be a positive integer", pos, self.text)
            return base ** exp
        return base

    def base(self) -> Polynomial:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.at_end_pos(), self.text)
        kind, value, pos = tok
        if kind == "num":
            self.i += 1
            num = int(value)
            if self.accept("/"):
                _, dvalue, dpos = self.take(kind="num")
                den = int(dvalue)
                if den == 0:
                    raise ZeroDenominatorError("zero denominator", dpos, self.text)
                return Polynomial.constant(Fraction(num, den))
            return Polynomial.constant(num)
        if kind == "ident":
            if value not in PARAMETERS:
                raise UnknownIdentifierError(f"unknown identifier {value!r}", pos, self.text)
            self.i += 1
            return Polynomial.var(value)
        if value == "(":
            self.i += 1
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {value!r}", pos, self.text)


def parse_scalar(text: str) -> Polynomial:
    """Parse scalar text into a canonical :class:`Polynomial`."""
    return _Parser(text).parse()
