"""Text parsing for rational functions, differential polynomials, and
matrix literals.

The grammar accepted here is exactly what the pretty-printers in
:mod:`diffalg.basefield` and :mod:`diffalg.diffpoly` emit, so parse/print
round trips are lossless:

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom ("^" INT)*
    atom   := INT | "t" | indet | "(" expr ")"
    indet  := ("x" | "x1" .. "x9") ("'"{0,2} | "^(" INT ")")

`^` with a bare integer is exponentiation and binds tightest.  `^(k)`
immediately after an indeterminate name is a derivative order marker, so
`x^(3)` is the third derivative while `x^3` is a cube.  At most two primes
are accepted; higher derivatives must use the `^(k)` form.  Division is
only defined by constants of the differential ring, i.e. expressions with
no indeterminate in them.
"""

from fractions import Fraction

from .basefield import BaseField, Poly, RatFunc
from .diffpoly import DiffPoly, var
from .errors import MixedArity, ParseError
from .matgroup import ConstMatrix

_T_RF = RatFunc(Poly.t(), 1, BaseField.RATIONAL)

# token kinds
_INT = "int"
_T = "t"
_INDET = "indet"
_PRIME = "prime"
_CARET = "^"
_LPAREN = "("
_RPAREN = ")"
_PLUS = "+"
_MINUS = "-"
_STAR = "*"
_SLASH = "/"
_END = "end"

_SINGLE = {
    "'": _PRIME,
    "^": _CARET,
    "(": _LPAREN,
    ")": _RPAREN,
    "+": _PLUS,
    "-": _MINUS,
    "*": _STAR,
    "/": _SLASH,
}


def _tokenize(text: str) -> list:
    """Return (kind, value, 1-based column) triples, ending with an
    end-of-input marker."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        col = i + 1
        if c in " \t":
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_INT, int(text[i:j]), col))
            i = j
        elif c == "t":
            tokens.append((_T, None, col))
            i += 1
        elif c == "x":
            if i + 1 < n and text[i + 1] in "123456789":
                tokens.append((_INDET, int(text[i + 1]) - 1, col))
                i += 2
            else:
                tokens.append((_INDET, None, col))
                i += 1
        elif c in _SINGLE:
            tokens.append((_SINGLE[c], None, col))
            i += 1
        else:
            raise ParseError("unexpected character %r" % c, col)
    tokens.append((_END, None, n + 1))
    return tokens


class _Parser:
    def __init__(self, tokens, allow_indeterminates: bool):
        self.tokens = tokens
        self.pos = 0
        self.allow_indeterminates = allow_indeterminates
        self.bare_seen = False
        self.indexed_seen = False

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError("expected %s" % what, tok[2])
        return tok

    def expr(self) -> DiffPoly:
        negate = False
        if self.peek()[0] == _MINUS:
            self.advance()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek()[0] in (_PLUS, _MINUS):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op[0] == _PLUS else value - rhs
        return value

    def term(self) -> DiffPoly:
        value = self.factor()
        while self.peek()[0] in (_STAR, _SLASH):
            op = self.advance()
            rhs = self.factor()
            if op[0] == _STAR:
                value = value * rhs
            else:
                if rhs.variables():
                    raise ParseError(
                        "division by an expression containing an indeterminate",
                        op[2])
                c = rhs.constant_coefficient()
                if c.is_zero():
                    raise ZeroDivisionError("division by zero")
                value = value * DiffPoly.const(1 / c)
        return value

    def factor(self) -> DiffPoly:
        value = self.atom()
        while self.peek()[0] == _CARET:
            self.advance()
            tok = self.peek()
            if tok[0] != _INT:
                raise ParseError("expected integer exponent", tok[2])
            self.advance()
            value = value ** tok[1]
        return value

    def atom(self) -> DiffPoly:
        tok = self.advance()
        kind, value, col = tok
        if kind == _INT:
            return DiffPoly.const(Fraction(value))
        if kind == _T:
            return DiffPoly.const(_T_RF)
        if kind == _INDET:
            if not self.allow_indeterminates:
                raise ParseError("indeterminates are not allowed here", col)
            if value is None:
                if self.indexed_seen:
                    raise MixedArity(
                        "cannot mix bare x with indexed indeterminates", col)
                self.bare_seen = True
                index = 0
            else:
                if self.bare_seen:
                    raise MixedArity(
                        "cannot mix bare x with indexed indeterminates", col)
                self.indexed_seen = True
                index = value
            return self.indet_tail(index)
        if kind == _LPAREN:
            inner = self.expr()
            self.expect(_RPAREN, "')'")
            return inner
        raise ParseError("unexpected %s" % _describe(tok), col)

    def indet_tail(self, index: int) -> DiffPoly:
        order = 0
        while self.peek()[0] == _PRIME:
            tok = self.advance()
            order += 1
            if order > 2:
                raise ParseError(
                    "at most two primes; use ^(k) for higher derivatives",
                    tok[2])
        if order == 0 and self.peek()[0] == _CARET \
                and self.tokens[self.pos + 1][0] == _LPAREN:
            self.advance()
            self.advance()
            tok = self.expect(_INT, "derivative order")
            self.expect(_RPAREN, "')'")
            order = tok[1]
        return DiffPoly.from_var(var(index, order))


def _describe(tok) -> str:
    kind, value, _ = tok
    if kind == _END:
        return "end of input"
    if kind == _INT:
        return "'%d'" % value
    if kind == _T:
        return "'t'"
    if kind == _INDET:
        return "'x'" if value is None else "'x%d'" % (value + 1)
    return "'%s'" % kind if kind != _PRIME else "\"'\""


def _parse(text: str, allow_indeterminates: bool) -> DiffPoly:
    parser = _Parser(_tokenize(text), allow_indeterminates)
    value = parser.expr()
    tok = parser.peek()
    if tok[0] != _END:
        raise ParseError("unexpected %s" % _describe(tok), tok[2])
    return value


def parse_diffpoly(text: str) -> DiffPoly:
    """Parse a differential polynomial in x (or x1..x9) over Q(t)."""
    return _parse(text, allow_indeterminates=True)


def parse_ratfunc(text: str) -> RatFunc:
    """Parse a rational function of t with exact rational coefficients."""
    return _parse(text, allow_indeterminates=False).constant_coefficient()


def parse_fraction(text: str) -> Fraction:
    """Parse a plain rational number such as '3', '-1/2'."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ZeroDivisionError):
            raise
        raise ParseError("expected a rational number", 1) from None


def parse_matrix(text: str) -> ConstMatrix:
    """Parse a matrix literal: rows separated by ';', entries by ','.

    Example: "1,0;0,1" is the 2x2 identity.
    """
    rows = []
    for row_text in text.split(";"):
        entries = [parse_fraction(e) for e in row_text.split(",")]
        rows.append(entries)
    return ConstMatrix.from_rows(rows)
