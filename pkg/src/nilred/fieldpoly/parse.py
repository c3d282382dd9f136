"""Text formats: single polynomials and ideal files.

Polynomial grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | IDENT | "(" expr ")"

``/`` is only accepted with a constant right operand, so that rational
coefficients printed by :func:`format_poly` read back unchanged.

Ideal files hold a header line ``ring: <vars> over Q|Fp:<p>`` followed by one
generator per line; ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .field import FieldSpec
from .ring import GREVLEX, PolyRing, Polynomial, format_poly

_TOKEN = re.compile(r"(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), pos + 1))
        pos = m.end()
    toks.append(_Tok("end", "", n + 1))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing, line: int):
        self.toks = _tokenize(text, line)
        self.i = 0
        self.ring = ring
        self.line = line

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, self.line, tok.col)

    def take(self, text: str):
        tok = self.peek()
        if tok.text != text:
            self.error(f"expected {text!r}, found {tok.text or 'end of input'!r}")
        self.i += 1

    def parse(self) -> Polynomial:
        if self.peek().kind == "end":
            self.error("empty expression")
        f = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return f

    def expr(self) -> Polynomial:
        f = self.term()
        while self.peek().text in ("+", "-"):
            op = self.peek().text
            self.i += 1
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.unary()
        while self.peek().text in ("*", "/"):
            op = self.peek().text
            tok = self.toks[self.i + 1]
            self.i += 1
            g = self.unary()
            if op == "*":
                f = f * g
            else:
                if not g.is_constant():
                    self.error("division only by a constant", tok)
                if g.is_zero():
                    raise ZeroDivisionError("division by zero")
                f = f.scale(self.ring.field.inv(g.constant_coefficient()))
        return f

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok.text == "-":
            self.i += 1
            return -self.unary()
        if tok.text == "+":
            self.i += 1
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        f = self.atom()
        if self.peek().text == "^":
            self.i += 1
            tok = self.peek()
            if tok.kind != "int":
                self.error("exponent must be a non-negative integer literal")
            self.i += 1
            f = f ** int(tok.text)
        return f

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            self.i += 1
            return self.ring.const(int(tok.text))
        if tok.kind == "ident":
            self.i += 1
            if tok.text not in self.ring.index:
                self.error(f"unknown identifier {tok.text!r}", tok)
            return self.ring.var(tok.text)
        if tok.text == "(":
            self.i += 1
            f = self.expr()
            self.take(")")
            return f
        self.error(f"unexpected {tok.text or 'end of input'!r}")


def parse_poly(text: str, ring: PolyRing, line: int = 1) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ring``.

    Raises :class:`PolySyntaxError` (with line and column) on malformed input
    or unknown identifiers, and ``ZeroDivisionError`` when a rational
    coefficient has no meaning modulo p.
    """
    try:
        return _Parser(text, ring, line).parse()
    except ZeroDivisionError as exc:
        raise ZeroDivisionError(f"line {line}: coefficient not reducible mod {ring.field.p}") from exc


_HEADER = re.compile(r"^\s*ring\s*:\s*(?P<vars>.*?)\s+over\s+(?P<field>\S+)\s*$")


def parse_ideal_text(text: str, order=GREVLEX) -> tuple[PolyRing, list[Polynomial]]:
    """Parse an ideal file; returns the ring and the generator list (zeros kept out)."""
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ring is None:
            m = _HEADER.match(line)
            if not m:
                raise PolySyntaxError("expected header 'ring: <vars> over Q|Fp:<p>'", lineno, 1)
            names = [v for v in re.split(r"[\s,]+", m.group("vars")) if v]
            ring = PolyRing(names, FieldSpec.parse(m.group("field")), order)
            continue
        f = parse_poly(line, ring, lineno)
        if f:
            gens.append(f)
    if ring is None:
        raise PolySyntaxError("missing ring header", 1, 1)
    return ring, gens


def format_ideal_text(ring: PolyRing, gens, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"ring: {' '.join(ring.variables)} over {ring.field}")
    lines.extend(format_poly(g) for g in gens)
    return "\n".join(lines) + "\n"
