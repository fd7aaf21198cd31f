"""Recursive-descent parser for polynomial expressions.

Grammar (LL(1), whitespace-insensitive):

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := atom ['^' signed_int]
    atom    := rational | variable | '(' expr ')' | '-' atom
    rational:= int ['/' int]

Variables are a fixed named set (default v, z).  Exponents are integers,
possibly negative.  The canonical rendering produced by LaurentPoly.render
round-trips through this grammar.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .rational import RAT

__all__ = ["ParseError", "parse_poly"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    def __init__(self, text: str, variables: tuple):
        self.text = text
        self.variables = variables
        self.pos = 0

    # ---- lexing helpers ----

    def _skip_ws(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        t = self.text
        if self.pos < len(t) and t[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(t) and t[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected integer", start)
        return int(t[start : self.pos])

    def _name(self) -> str:
        self._skip_ws()
        start = self.pos
        t = self.text
        while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] == "_"):
            self.pos += 1
        return t[start : self.pos]

    # ---- grammar ----

    def parse(self) -> LaurentPoly:
        result = self.expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.pos)
        return result

    def expr(self) -> LaurentPoly:
        negate = False
        if self.peek() == "-":
            self.pos += 1
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                acc = acc + self.term()
            elif ch == "-":
                self.pos += 1
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> LaurentPoly:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> LaurentPoly:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            at = self.pos
            n = self._int()
            if self.peek() == "^":
                raise ParseError("repeated exponent operator", self.pos)
            if n < 0 and not base.is_monomial:
                raise ParseError("negative power of a non-monomial", at)
            base = base**n
        return base

    def atom(self) -> LaurentPoly:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.atom()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if ch.isdigit():
            at = self.pos
            num = self._int()
            if self.peek() == "/":
                self.pos += 1
                den = self._int()
                if den == 0:
                    raise ParseError("zero denominator in rational literal", at)
                return LaurentPoly.constant(self.variables, RAT(num) / den)
            return LaurentPoly.constant(self.variables, num)
        if ch.isalpha():
            at = self.pos
            name = self._name()
            if name not in self.variables:
                raise ParseError(f"unknown variable {name!r}", at)
            return LaurentPoly.var(name, self.variables)
        raise ParseError("expected term", self.pos)


def parse_poly(text: str, variables=("v", "z")) -> LaurentPoly:
    """Parse a polynomial expression over the given variables."""
    if isinstance(variables, str):
        variables = (variables,)
    return _Parser(text, tuple(variables)).parse()
