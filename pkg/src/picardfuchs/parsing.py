"""Parser for polynomial expressions in x and y with rational coefficients.

Accepts + - * ^, parentheses, implicit multiplication ("x^2y^2", "3x",
"2(x+y)"), integer and rational literals ("3/2"); whitespace is ignored.
The '/' character is only legal inside a rational literal.  Raises ParseError
with the offending position.  str(BiPoly) output round-trips through this
parser.
"""

from fractions import Fraction

from .bipoly import BiPoly
from .errors import ParseError


class _Tokenizer:
    def __init__(self, src):
        self.src = src
        self.pos = 0
        self.tokens = []
        self._scan()
        self.index = 0

    def _scan(self):
        src = self.src
        i = 0
        while i < len(src):
            ch = src[i]
            if ch.isspace():
                i += 1
                continue
            if ch in "+-*^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            if ch in "xy":
                self.tokens.append(("var", ch, i))
                i += 1
                continue
            if ch.isdigit():
                start = i
                while i < len(src) and src[i].isdigit():
                    i += 1
                numerator = src[start:i]
                if i < len(src) and src[i] == "/":
                    j = i + 1
                    if j >= len(src) or not src[j].isdigit():
                        raise ParseError("expected digits after '/'", i)
                    i = j
                    while i < len(src) and src[i].isdigit():
                        i += 1
                    value = Fraction(int(numerator), int(src[j:i]))
                else:
                    value = Fraction(int(numerator))
                self.tokens.append(("number", value, start))
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        self.tokens.append(("end", None, len(src)))

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        if tok[0] != "end":
            self.index += 1
        return tok


def parse_polynomial(src):
    """Parse source text into an exact BiPoly."""
    tokens = _Tokenizer(src)
    poly = _parse_sum(tokens)
    kind, _, pos = tokens.peek()
    if kind != "end":
        raise ParseError("unexpected trailing input", pos)
    return poly


def _parse_sum(tokens):
    kind, _, _ = tokens.peek()
    negate = False
    if kind in ("+", "-"):
        negate = kind == "-"
        tokens.advance()
    total = _parse_product(tokens)
    if negate:
        total = -total
    while True:
        kind, _, _ = tokens.peek()
        if kind == "+":
            tokens.advance()
            total = total + _parse_product(tokens)
        elif kind == "-":
            tokens.advance()
            total = total - _parse_product(tokens)
        else:
            return total


def _parse_product(tokens):
    total = _parse_power(tokens)
    while True:
        kind, _, _ = tokens.peek()
        if kind == "*":
            tokens.advance()
            total = total * _parse_power(tokens)
        elif kind in ("number", "var", "("):
            total = total * _parse_power(tokens)  # implicit multiplication
        else:
            return total


def _parse_power(tokens):
    base = _parse_atom(tokens)
    kind, _, pos = tokens.peek()
    if kind != "^":
        return base
    tokens.advance()
    kind, value, pos = tokens.advance()
    if kind != "number" or value.denominator != 1 or value < 0:
        raise ParseError("exponent must be a nonnegative integer", pos)
    return base ** int(value)


def _parse_atom(tokens):
    kind, value, pos = tokens.advance()
    if kind == "number":
        return BiPoly.constant(value)
    if kind == "var":
        return BiPoly.monomial(1, 0) if value == "x" else BiPoly.monomial(0, 1)
    if kind == "(":
        inner = _parse_sum(tokens)
        kind, _, pos = tokens.advance()
        if kind != ")":
            raise ParseError("expected ')'", pos)
        return inner
    if kind == "-":
        return -_parse_atom(tokens)
    raise ParseError("expected a number, variable or '('", pos)
