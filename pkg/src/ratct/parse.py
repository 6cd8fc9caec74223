"""Textual rational-function expressions in x, y.

Grammar (EBNF, also published in docs/grammar.ebnf):

    expr    = term { ("+" | "-") term } ;
    term    = factor { ("*" | "/") factor } ;
    factor  = "-" factor | power ;
    power   = atom [ "^" integer ] ;
    atom    = integer | "x" | "y" | "(" expr ")" ;
    integer = digit { digit } ;

"+", "-", "*", "/" are left-associative, "^" binds tighter than unary minus
and requires a literal non-negative integer exponent.  Implicit multiplication
is rejected.  Rational literals are written as quotients, e.g. ``2/3``.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import BPoly, RatFunc, UPoly
from .errors import DivisionByZero, ParseError


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        """Return (kind, value, position) of the next token without consuming."""
        i = self.pos
        text = self.text
        while i < len(text) and text[i].isspace():
            i += 1
        if i >= len(text):
            return ("end", "", i)
        c = text[i]
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            return ("int", text[i:j], i)
        if c in "xy":
            return ("var", c, i)
        if c in "+-*/^()":
            return (c, c, i)
        return ("junk", c, i)

    def next(self) -> tuple[str, str, int]:
        kind, value, pos = self.peek()
        self.pos = pos + max(1, len(value))
        return kind, value, pos


class _Parser:
    def __init__(self, text: str):
        self.toks = _Tokenizer(text)

    def parse(self) -> RatFunc:
        value = self.expr()
        kind, value_s, pos = self.toks.peek()
        if kind != "end":
            raise ParseError(pos, {"+", "-", "*", "/", "end of input"}, value_s)
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while True:
            kind, _, _ = self.toks.peek()
            if kind == "+":
                self.toks.next()
                value = value + self.term()
            elif kind == "-":
                self.toks.next()
                value = value - self.term()
            else:
                return value

    def term(self) -> RatFunc:
        value = self.factor()
        while True:
            kind, _, pos = self.toks.peek()
            if kind == "*":
                self.toks.next()
                value = value * self.factor()
            elif kind == "/":
                self.toks.next()
                divisor = self.factor()
                if divisor.is_zero():
                    raise DivisionByZero(f"denominator at position {pos} is identically zero")
                value = value / divisor
            else:
                return value

    def factor(self) -> RatFunc:
        kind, _, _ = self.toks.peek()
        if kind == "-":
            self.toks.next()
            return -self.factor()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        kind, _, _ = self.toks.peek()
        if kind == "^":
            self.toks.next()
            kind, value, pos = self.toks.next()
            if kind != "int":
                raise ParseError(pos, {"non-negative integer exponent"}, value or "end of input")
            return base ** int(value)
        return base

    def atom(self) -> RatFunc:
        kind, value, pos = self.toks.next()
        if kind == "int":
            return RatFunc.const(int(value))
        if kind == "var":
            return RatFunc.from_bpoly(BPoly.x() if value == "x" else BPoly.y())
        if kind == "(":
            inner = self.expr()
            kind, value, pos = self.toks.next()
            if kind != ")":
                raise ParseError(pos, {")"}, value or "end of input")
            return inner
        expected = {"integer", "x", "y", "(", "-"}
        return self._fail(pos, expected, value)

    def _fail(self, pos: int, expected: set[str], found: str) -> RatFunc:
        raise ParseError(pos, expected, found or "end of input")


def parse(text: str) -> RatFunc:
    """Parse an expression in x, y into a normalized rational function."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# rendering (canonical, round-trips through parse)
# ---------------------------------------------------------------------------


def _render_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render_term(c: Fraction, i: int, j: int) -> str:
    """One monomial c * x^i * y^j with positive c rendered (sign handled outside)."""
    parts = []
    if c != 1 or (i == 0 and j == 0):
        parts.append(_render_coeff(c))
    if j > 0:
        parts.append("y" if j == 1 else f"y^{j}")
    if i > 0:
        parts.append("x" if i == 1 else f"x^{i}")
    return "*".join(parts)


def render_bpoly(p: BPoly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for j in range(len(p.coeffs) - 1, -1, -1):
        u = p.coeffs[j]
        for i in range(len(u.coeffs) - 1, -1, -1):
            c = u.coeffs[i]
            if c:
                terms.append((c, i, j))
    out = []
    for idx, (c, i, j) in enumerate(terms):
        if idx == 0:
            sign = "-" if c < 0 else ""
        else:
            sign = " - " if c < 0 else " + "
        out.append(sign + _render_term(abs(c), i, j))
    return "".join(out)


def render_upoly(p: UPoly) -> str:
    if p.is_zero():
        return "0"
    if p.var == "y":
        return render_bpoly(BPoly.from_upoly_y(p))
    b = BPoly.from_upoly_x(p)
    s = render_bpoly(b)
    return s.replace("x", p.var) if p.var != "x" else s


def _needs_parens(s: str) -> bool:
    return (" + " in s) or (" - " in s) or s.startswith("-")


def render(f: RatFunc) -> str:
    """Canonical rendering; parse(render(f)) == f."""
    num = render_bpoly(f.num)
    if f.den.is_one():
        return num
    den = render_bpoly(f.den)
    num_s = f"({num})" if _needs_parens(num) or "*" in num or "/" in num else num
    den_s = f"({den})" if _needs_parens(den) or "*" in den or "^" in den or "/" in den else den
    return f"{num_s}/{den_s}"
