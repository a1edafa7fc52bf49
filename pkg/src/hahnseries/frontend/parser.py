"""Recursive-descent parser for series expressions.

Grammar (whitespace insensitive)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := '-' factor | power
    power    := atom ('^' ['-'] INT)?
    atom     := RATIONAL | 't' ['^' '{' exponent '}'] | '(' expr ')' | IDENT '(' expr ')'
    exponent := '0' | ['-'] basis (('+' | '-') basis)*
    basis    := [RATIONAL '*'] ('e' | 'tau') '(' ['-'] RATIONAL ')'

``RATIONAL`` is ``123`` or ``p/q`` written without spaces; ``3 / 2`` is a
division.  Bare ``t`` abbreviates ``t^{1*e(0)}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import HahnError
from ..exponents import format_rational

__all__ = [
    "ParseError",
    "Rat",
    "Mono",
    "Neg",
    "BinOp",
    "Pow",
    "Apply",
    "FUNCTIONS",
    "parse",
    "unparse",
]

FUNCTIONS = ("exp", "log", "inv", "D")


class ParseError(HahnError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        self.position = (line, column)
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)


# -- AST ----------------------------------------------------------------------

_pos = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Rat:
    value: Fraction
    pos: tuple | None = _pos


@dataclass(frozen=True)
class Mono:
    """``t^{...}``; ``terms`` holds ``(kind, coeff, index)`` in source order."""

    terms: tuple
    pos: tuple | None = _pos


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: tuple | None = _pos


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: tuple | None = _pos


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: tuple | None = _pos


@dataclass(frozen=True)
class Apply:
    func: str
    arg: object
    pos: tuple | None = _pos


# -- lexer --------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^(){}])"
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    i, line, col = 0, 1, 1
    while i < len(source):
        m = _TOKEN.match(source, i)
        if m is None:
            raise ParseError(f"unexpected character {source[i]!r}", line, col)
        text = m.group()
        kind = m.lastgroup
        if kind != "ws":
            if kind == "num" and "/" in text and int(text.split("/")[1]) == 0:
                raise ParseError(f"zero denominator in {text}", line, col)
            tokens.append(Token(kind if kind != "op" else text, text, line, col))
        for ch in text:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        i = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected, message=None):
        tok = self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(message or f"unexpected {found}", tok.line, tok.column, expected)

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail([kind])
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.tok.kind != "eof":
            self.fail(["+", "-", "*", "/", "^", "end of input"])
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance()
            node = BinOp(op.kind, node, self.term(), pos=(op.line, op.column))
        return node

    def term(self):
        node = self.factor()
        while self.tok.kind in ("*", "/"):
            op = self.advance()
            node = BinOp(op.kind, node, self.factor(), pos=(op.line, op.column))
        return node

    def factor(self):
        if self.tok.kind == "-":
            op = self.advance()
            return Neg(self.factor(), pos=(op.line, op.column))
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "^":
            op = self.advance()
            sign = 1
            if self.tok.kind == "-":
                self.advance()
                sign = -1
            num = self.tok
            if num.kind != "num" or "/" in num.text:
                self.fail(["integer"], "power must be an integer")
            self.advance()
            return Pow(base, sign * int(num.text), pos=(op.line, op.column))
        return base

    def atom(self):
        tok = self.tok
        pos = (tok.line, tok.column)
        if tok.kind == "num":
            self.advance()
            return Rat(Fraction(tok.text), pos=pos)
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            if tok.text == "t":
                self.advance()
                if self.tok.kind == "^" and self.tokens[self.i + 1].kind == "{":
                    self.advance()
                    self.advance()
                    terms = self.exponent()
                    self.expect("}")
                    return Mono(terms, pos=pos)
                return Mono((("e", Fraction(1), Fraction(0)),), pos=pos)
            if tok.text not in FUNCTIONS:
                raise ParseError(f"unknown identifier {tok.text!r}", tok.line, tok.column, FUNCTIONS + ("t",))
            self.advance()
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Apply(tok.text, arg, pos=pos)
        self.fail(["number", "t", "(", "-"] + list(FUNCTIONS))

    def exponent(self):
        if self.tok.kind == "num" and self.tok.text == "0" and self.tokens[self.i + 1].kind == "}":
            self.advance()
            return ()
        terms = []
        sign = 1
        if self.tok.kind == "-":
            self.advance()
            sign = -1
        terms.append(self.basis(sign))
        while self.tok.kind in ("+", "-"):
            sign = 1 if self.advance().kind == "+" else -1
            terms.append(self.basis(sign))
        return tuple(terms)

    def basis(self, sign):
        coeff = Fraction(1)
        if self.tok.kind == "num":
            coeff = Fraction(self.advance().text)
            self.expect("*")
        tok = self.tok
        if tok.kind != "ident" or tok.text not in ("e", "tau"):
            self.fail(["e", "tau"])
        self.advance()
        self.expect("(")
        isign = 1
        if self.tok.kind == "-":
            self.advance()
            isign = -1
        index = Fraction(self.expect("num").text) * isign
        self.expect(")")
        return (tok.text, sign * coeff, index)


def parse(source: str):
    """Parse ``source`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(source).parse()


# -- printer ------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _exponent_text(terms) -> str:
    parts = []
    for kind, coeff, index in terms:
        body = f"{format_rational(abs(coeff))}*{kind}({format_rational(index)})"
        if not parts:
            parts.append(body if coeff >= 0 else "-" + body)
        else:
            parts.append((" + " if coeff >= 0 else " - ") + body)
    return "".join(parts) or "0"


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def unparse(node) -> str:
    """Text that parses back to a structurally identical tree."""
    if isinstance(node, Rat):
        return format_rational(node.value)
    if isinstance(node, Mono):
        return f"t^{{{_exponent_text(node.terms)}}}"
    if isinstance(node, Apply):
        return f"{node.func}({unparse(node.arg)})"
    if isinstance(node, Neg):
        inner = unparse(node.operand)
        return "-" + (inner if _prec(node.operand) >= 3 else f"({inner})")
    if isinstance(node, Pow):
        inner = unparse(node.base)
        if _prec(node.base) < 5:
            inner = f"({inner})"
        return f"{inner}^{node.exponent}"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        left = unparse(node.left)
        if _prec(node.left) < p:
            left = f"({left})"
        right = unparse(node.right)
        if _prec(node.right) <= p:
            right = f"({right})"
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")
