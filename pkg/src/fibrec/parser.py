"""Parse and print the textual expression language.

Grammar (EBNF; whitespace is insignificant everywhere):

    expr       := ["+"|"-"] term (("+"|"-") term)*
    term       := [coef ["*"]] fibref | [coef ["*"]] altref | coef
    fibref     := "F(" "n" [("+"|"-") natural] ")"
    altref     := "(-1)^n"
    coef       := polyfactor ["/" natural]
    polyfactor := rational | monomial | "(" polysum ")"
    polysum    := polyterm (("+"|"-") polyterm)*
    polyterm   := rational ["*"] ["n" ["^" natural]] | ["-"] "n" ["^" natural]
    rational   := ["-"] natural ["/" natural]

A trailing "/ natural" after a parenthesised polynomial divides every
coefficient, so "(5n^2-43n+88)/50" reads the way it is written.  Implicit
multiplication is allowed ("2n", "n/5*F(n-1)"); "^" may follow only "n"
and the literal "(-1)", with exponents capped at MAX_EXPONENT (the
polynomial representation is dense).  A term without an F(...) or (-1)^n
factor must be constant (it lands in the expression's constant slot).
Every rejection raises ParseError carrying the byte offset of the
offending position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exact import Poly
from .seqform import FibExpr


class ParseError(ValueError):
    """Rejection of an input string, with the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.message = message
        self.offset = offset


_ALT = re.compile(r"\(\s*-\s*1\s*\)\s*\^\s*n")
_NAT = re.compile(r"[0-9]+")
_PUNCT = "+-*/^()"

MAX_EXPONENT = 1000


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'nat' 'n' 'F' 'alt' '+' '-' '*' '/' '^' '(' ')' 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _ALT.match(text, i)
        if m:
            toks.append(_Tok("alt", m.group(), i))
            i = m.end()
            continue
        if "0" <= ch <= "9":
            m = _NAT.match(text, i)
            toks.append(_Tok("nat", m.group(), i))
            i = m.end()
            continue
        if ch == "n" or ch == "F":
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        if ch in _PUNCT:
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, ahead: int = 0) -> _Tok:
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.pos)
        return self.take()

    def natural(self, what: str) -> int:
        return int(self.expect("nat", what).text)

    # --- grammar productions -------------------------------------------

    def run(self) -> FibExpr:
        terms: list[tuple[int, Poly]] = []
        const = Fraction(0)
        alt = Fraction(0)
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
        while True:
            tag, shift, coeff = self.term()
            coeff = coeff * sign
            if tag == "fib":
                terms.append((shift, coeff))
            elif tag == "alt":
                alt += coeff.coeffs[0] if coeff else Fraction(0)
            else:
                const += coeff.coeffs[0] if coeff else Fraction(0)
            nxt = self.take()
            if nxt.kind == "end":
                break
            if nxt.kind == "+":
                sign = 1
            elif nxt.kind == "-":
                sign = -1
            else:
                raise ParseError("expected '+' or '-' between terms", nxt.pos)
        return FibExpr.of(terms, const, alt)

    def term(self) -> tuple[str, int, Poly]:
        kind = self.peek().kind
        if kind == "F":
            return "fib", self.fibref(), Poly((1,))
        if kind == "alt":
            self.take()
            return "alt", 0, Poly((1,))
        start = self.peek().pos
        coeff = self.coef()
        kind = self.peek().kind
        if kind == "*":
            self.take()
            kind = self.peek().kind
            if kind == "F":
                return "fib", self.fibref(), coeff
            if kind == "alt":
                self.take()
                return "alt", 0, self._constant(coeff, start, "(-1)^n")
            raise ParseError("expected F(...) or (-1)^n after '*'", self.peek().pos)
        if kind == "F":
            return "fib", self.fibref(), coeff
        if kind == "alt":
            self.take()
            return "alt", 0, self._constant(coeff, start, "(-1)^n")
        return "const", 0, self._constant(coeff, start, None)

    @staticmethod
    def _constant(coeff: Poly, start: int, of: str | None) -> Poly:
        if coeff.degree not in (None, 0):
            if of is None:
                raise ParseError("a term without F(n...) must be constant", start)
            raise ParseError(f"the coefficient of {of} must be constant", start)
        return coeff

    def coef(self) -> Poly:
        if self.peek().kind == "(":
            self.take()
            coeff = self.polysum()
            self.expect(")", "')'")
            if self.peek().kind == "^":
                raise ParseError("'^' may follow only 'n' or the literal '(-1)'", self.peek().pos)
        else:
            coeff = self.polyterm()
        if self.peek().kind == "/":
            self.take()
            pos = self.peek().pos
            den = self.natural("a denominator")
            if den == 0:
                raise ParseError("zero denominator", pos)
            coeff = coeff * Fraction(1, den)
        return coeff

    def polysum(self) -> Poly:
        total = self.polyterm()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            nxt = self.polyterm()
            total = total + nxt if op.kind == "+" else total - nxt
        return total

    def polyterm(self) -> Poly:
        tok = self.peek()
        if tok.kind == "-":
            self.take()
            if self.peek().kind == "n":
                return self._monomial(Fraction(-1))
            if self.peek().kind == "nat":
                q = -self.rational()
            else:
                raise ParseError("expected a number or 'n' after '-'", self.peek().pos)
        elif tok.kind == "nat":
            q = self.rational()
        elif tok.kind == "n":
            return self._monomial(Fraction(1))
        else:
            raise ParseError("expected a coefficient", tok.pos)
        if self.peek().kind == "n":
            return self._monomial(q)
        if self.peek().kind == "*" and self.peek(1).kind == "n":
            self.take()
            return self._monomial(q)
        return Poly((q,))

    def _monomial(self, coeff: Fraction) -> Poly:
        self.expect("n", "'n'")
        power = 1
        if self.peek().kind == "^":
            self.take()
            pos = self.peek().pos
            power = self.natural("a non-negative integer exponent")
            if power > MAX_EXPONENT:
                # polynomials are dense; an absurd exponent would allocate
                # that many coefficients
                raise ParseError(f"exponent larger than {MAX_EXPONENT}", pos)
        return Poly((0,) * power + (coeff,))

    def rational(self) -> Fraction:
        num = self.natural("a number")
        if self.peek().kind == "/" and self.peek(1).kind == "nat":
            self.take()
            pos = self.peek().pos
            den = self.natural("a denominator")
            if den == 0:
                raise ParseError("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def fibref(self) -> int:
        self.expect("F", "'F'")
        self.expect("(", "'(' after F")
        self.expect("n", "'n' as the F argument (shift must be n, n+k or n-k)")
        shift = 0
        if self.peek().kind in ("+", "-"):
            op = self.take()
            off = self.natural("an integer offset inside F(n...)")
            shift = -off if op.kind == "+" else off
        self.expect(")", "')' closing F(")
        return shift


def parse(text: str) -> FibExpr:
    """Parse the expression language into a FibExpr; ParseError on rejection."""
    return _Parser(text).run()


def _frac_text(q) -> str:
    return str(Fraction(q))


def format_poly(p: Poly, var: str = "n") -> str:
    """Monomials in descending degree, joined with ' + ' / ' - '."""
    if not p:
        return "0"
    parts: list[str] = []
    for deg in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[deg]
        if not c:
            continue
        c = Fraction(c)
        if deg == 0:
            parts.append(_frac_text(c))
            continue
        base = var if deg == 1 else f"{var}^{deg}"
        if c == 1:
            parts.append(base)
        elif c == -1:
            parts.append(f"-{base}")
        else:
            parts.append(f"{_frac_text(c)}*{base}")
    out = parts[0]
    for part in parts[1:]:
        out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return out


def format_expr(expr: FibExpr) -> str:
    """Deterministic text form, re-parseable by parse().

    Terms come in ascending shift order, polynomial factors are
    parenthesised unless constant, then the constant, then the alternating
    part.  Components whose rendering starts with '-' are joined with ' - '.
    """
    comps: list[str] = []
    for t in expr.terms:
        if t.shift == 0:
            ref = "F(n)"
        elif t.shift > 0:
            ref = f"F(n-{t.shift})"
        else:
            ref = f"F(n+{-t.shift})"
        if t.poly.degree == 0:
            comps.append(f"{_frac_text(t.poly.coeffs[0])}*{ref}")
        else:
            comps.append(f"({format_poly(t.poly)})*{ref}")
    if expr.const_e:
        comps.append(_frac_text(expr.const_e))
    if expr.alt_f:
        comps.append(f"{_frac_text(expr.alt_f)}*(-1)^n")
    if not comps:
        return "0"
    out = comps[0]
    for comp in comps[1:]:
        out += f" - {comp[1:]}" if comp.startswith("-") else f" + {comp}"
    return out
