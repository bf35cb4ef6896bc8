"""Text grammar for polynomials, field elements, and coordinate lists.

    expression := term (('+' | '-') term)*
    term       := factor (('*' | '/') factor)*
    factor     := ('-' | '+')* power
    power      := atom ('^' integer)*
    atom       := x0..x5 | 'w' | integer | '(' expression ')'

'^' binds tighter than '*' and '/', which bind tighter than '+' and '-';
unary minus is allowed and whitespace is insignificant.  'w' is the cube
root of unity (w^2 parses and reduces to -1 - w).  '/' is division by a
nonzero constant, which is how rational scalars like 2/3 are written.

Coordinate lists use square brackets: [1, 1, w, w, w^2, w^2].
"""

from __future__ import annotations

from .eisenstein import Eisenstein, OMEGA
from .poly import NVARS, Polynomial

MAX_EXPONENT = 1000


class ParseError(ValueError):
    """Syntax or range error, carrying the 0-based position in the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_SYMBOLS = set("+-*/^()[],")


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name == "w":
                tokens.append(("w", name, i))
            elif name.startswith("x") and name[1:].isdigit():
                index = int(name[1:])
                if index >= NVARS:
                    raise ParseError(f"unknown variable '{name}'", i)
                tokens.append(("var", index, i))
            else:
                raise ParseError(f"unknown name '{name}'", i)
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected '{kind}', found '{tok[0]}'", tok[2])
        return tok

    # grammar rules, lowest precedence first

    def expression(self) -> Polynomial:
        result = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[0] in ("*", "/"):
            kind, _, pos = self.advance()
            rhs = self.factor()
            if kind == "*":
                result = result * rhs
            else:
                if not rhs.is_constant():
                    raise ParseError(
                        "division is only defined by constants", pos
                    )
                value = rhs.constant_value()
                if not value:
                    raise ParseError("division by zero", pos)
                result = result * Polynomial.constant(value.inverse())
        return result

    def factor(self) -> Polynomial:
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.advance()[0] == "-":
                sign = -sign
        p = self.power()
        return p if sign > 0 else -p

    def power(self) -> Polynomial:
        result = self.atom()
        while self.peek()[0] == "^":
            self.advance()
            kind, value, pos = self.advance()
            if kind != "int":
                raise ParseError("exponent must be an integer literal", pos)
            if value > MAX_EXPONENT:
                raise ParseError(
                    f"exponent overflow ({value} > {MAX_EXPONENT})", pos
                )
            result = result ** value
        return result

    def atom(self) -> Polynomial:
        kind, value, pos = self.advance()
        if kind == "int":
            return Polynomial.constant(value)
        if kind == "w":
            return Polynomial.constant(OMEGA)
        if kind == "var":
            return Polynomial.variable(value)
        if kind == "(":
            inner = self.expression()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token '{kind}'", pos)


def parse_polynomial(text: str) -> Polynomial:
    parser = _Parser(text)
    result = parser.expression()
    end = parser.peek()
    if end[0] != "end":
        raise ParseError(f"trailing input '{end[0]}'", end[2])
    return result


def parse_field_element(text: str) -> Eisenstein:
    p = parse_polynomial(text)
    if not p.is_constant():
        raise ParseError("expected a constant field element", 0)
    return p.constant_value()


def _parse_bracketed(parser: _Parser):
    parser.expect("[")
    entries = []
    if parser.peek()[0] != "]":
        while True:
            q = parser.expression()
            kind, _, pos = parser.peek()
            if not q.is_constant():
                raise ParseError("list entries must be constants", pos)
            entries.append(q.constant_value())
            if parser.peek()[0] == ",":
                parser.advance()
                continue
            break
    parser.expect("]")
    end = parser.peek()
    if end[0] != "end":
        raise ParseError(f"trailing input '{end[0]}'", end[2])
    return tuple(entries)


def parse_scalar_list(text: str) -> tuple:
    """A bracketed comma-separated list of field elements, any length >= 1."""
    entries = _parse_bracketed(_Parser(text))
    if not entries:
        raise ParseError("empty list", 0)
    return entries


def parse_point_coordinates(text: str) -> tuple:
    """Exactly six field elements: the coordinate syntax [a, b, c, d, e, f]."""
    entries = _parse_bracketed(_Parser(text))
    if len(entries) != NVARS:
        raise ParseError(
            f"a point needs exactly {NVARS} coordinates, got {len(entries)}", 0
        )
    return entries
