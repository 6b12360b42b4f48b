"""Expression syntax for Poisson polynomials.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := [scalar ['*']] factor ('*' factor)*  |  scalar
    factor := generator
            | '(' expr ',' expr ')'      Poisson bracket
            | '{' expr ',' expr '}'      Poisson bracket
            | '[' expr (',' expr)+ ']'   left-normed bracket
            | '(' expr ')'
    scalar := integer | integer '/' integer

A bare scalar term is only allowed when it is zero: the free algebra has no
unit element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class ScalarLiteral:
    value: Fraction


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Difference:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Negation:
    arg: "Expr"


@dataclass(frozen=True)
class ScalarMul:
    scalar: Fraction
    arg: "Expr"


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Bracket:
    left: "Expr"
    right: "Expr"


Expr = Union[Generator, ScalarLiteral, Sum, Difference, Negation, ScalarMul, Product, Bracket]


# -- tokenizer ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*(){}\[\],]))"
)


@dataclass
class Token:
    kind: str  # 'num', 'name', 'op', 'end'
    text: str
    pos: int


def tokenize(text: str, line: int = 1, col0: int = 1) -> list[Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise ParseError(f"unexpected character {text[i]!r}", line, col0 + i)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(Token(kind, m.group(kind), start))
        i = m.end()
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, line: int, col0: int):
        self.text = text
        self.line = line
        self.col0 = col0
        self.tokens = tokenize(text, line, col0)
        self.i = 0

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, self.line, self.col0 + tok.pos)

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok.kind == "op" and tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            tok = self.peek()
            self.error(f"expected {op!r}, found {tok.text or 'end of input'!r}")

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return e

    def expr(self) -> Expr:
        if self.accept("-"):
            e: Expr = Negation(self.term())
        else:
            self.accept("+")
            e = self.term()
        while True:
            if self.accept("+"):
                e = Sum(e, self.term())
            elif self.accept("-"):
                e = Difference(e, self.term())
            else:
                return e

    def term(self) -> Expr:
        tok = self.peek()
        scalar = None
        if tok.kind == "num":
            self.next()
            scalar = Fraction(tok.text.replace(" ", ""))
            if not self._starts_factor() and not (self.peek().kind == "op" and self.peek().text == "*"):
                if scalar != 0:
                    self.error("nonzero scalar without a factor (the algebra has no unit)", tok)
                return ScalarLiteral(scalar)
            self.accept("*")
        e = self.factor()
        while self.accept("*"):
            e = Product(e, self.factor())
        return e if scalar is None else ScalarMul(scalar, e)

    def _starts_factor(self) -> bool:
        tok = self.peek()
        return tok.kind == "name" or (tok.kind == "op" and tok.text in "({[")

    def factor(self) -> Expr:
        tok = self.next()
        if tok.kind == "name":
            return Generator(tok.text, tok.pos)
        if tok.kind == "op" and tok.text == "(":
            e = self.expr()
            if self.accept(","):
                e2 = self.expr()
                self.expect(")")
                return Bracket(e, e2)
            self.expect(")")
            return e
        if tok.kind == "op" and tok.text == "{":
            e = self.expr()
            self.expect(",")
            e2 = self.expr()
            self.expect("}")
            return Bracket(e, e2)
        if tok.kind == "op" and tok.text == "[":
            e = self.expr()
            self.expect(",")
            e = Bracket(e, self.expr())
            while self.accept(","):
                e = Bracket(e, self.expr())
            self.expect("]")
            return e
        self.i -= 1
        self.error(f"expected a generator or bracket, found {tok.text or 'end of input'!r}", tok)


def parse_expr(text: str, line: int = 1, column: int = 1) -> Expr:
    """Parse ``text``; ``line``/``column`` offset error positions."""
    return _Parser(text, line, column).parse()


def evaluate(e: Expr, algebra, line: int = 1, column: int = 1):
    """Canonical polynomial of ``e`` in ``algebra`` (bottom-up normalisation)."""
    F = algebra.field
    if isinstance(e, Generator):
        try:
            return algebra.gen(e.name)
        except KeyError:
            raise ParseError(f"unknown generator {e.name!r}", line, column + e.pos) from None
    if isinstance(e, ScalarLiteral):
        return algebra.zero()
    if isinstance(e, Sum):
        return evaluate(e.left, algebra, line, column) + evaluate(e.right, algebra, line, column)
    if isinstance(e, Difference):
        return evaluate(e.left, algebra, line, column) - evaluate(e.right, algebra, line, column)
    if isinstance(e, Negation):
        return -evaluate(e.arg, algebra, line, column)
    if isinstance(e, ScalarMul):
        try:
            c = F(e.scalar)
        except ValueError as exc:
            raise ParseError(str(exc), line, column) from None
        return evaluate(e.arg, algebra, line, column).scale(c)
    if isinstance(e, Product):
        return algebra.mul(evaluate(e.left, algebra, line, column), evaluate(e.right, algebra, line, column))
    if isinstance(e, Bracket):
        return algebra.bracket(evaluate(e.left, algebra, line, column), evaluate(e.right, algebra, line, column))
    raise TypeError(f"not an expression node: {e!r}")
