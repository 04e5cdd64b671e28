"""Sequences written as rational-polynomial combinations of Fibonacci numbers.

A ``FibExpr`` is a finite formal sum

    sum_i  p_i(n) * F(n - j_i)  +  e  +  f * (-1)**n

with Fraction-coefficient polynomials p_i, integer shifts j_i (negative
shifts, i.e. F(n+k), are first class) and rational constants e, f.  Every
shift can be eliminated with the identity

    F(n-j) = ((-1)^j F_{j-1}) * F(n) + ((-1)^(j+1) F_j) * F(n-1),

which reduces any expression to the canonical form
P0(n)*F(n) + P1(n)*F(n-1) + e + f*(-1)^n.  Two expressions describe the
same sequence exactly when their canonical forms are componentwise equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact import BETA, INV_SQRT5, Poly, QuadRat
from .fib import alpha_pow, fib, shift_coeffs


@dataclass(frozen=True)
class ShiftTerm:
    """One summand p(n) * F(n - shift); the polynomial is never zero."""

    shift: int
    poly: Poly


@dataclass(frozen=True)
class FibExpr:
    """Normalized expression: terms sorted by strictly increasing shift."""

    terms: tuple[ShiftTerm, ...] = ()
    const_e: Fraction = Fraction(0)
    alt_f: Fraction = Fraction(0)

    @staticmethod
    def of(terms: Iterable = (), const=0, alt=0) -> "FibExpr":
        """Build a normalized expression from (shift, poly) pairs.

        Polynomials may be given as Poly instances, coefficient sequences in
        ascending degree, or bare scalars; duplicate shifts are merged and
        zero terms dropped.
        """
        acc: dict[int, Poly] = {}
        for shift, p in terms:
            if not isinstance(p, Poly):
                p = Poly(tuple(p)) if isinstance(p, (list, tuple)) else Poly((p,))
            shift = int(shift)
            acc[shift] = acc[shift] + p if shift in acc else p
        kept = tuple(ShiftTerm(s, q) for s, q in sorted(acc.items()) if q)
        return FibExpr(kept, Fraction(const), Fraction(alt))

    @staticmethod
    def zero() -> "FibExpr":
        return FibExpr()

    @property
    def is_zero(self) -> bool:
        return not self.terms and not self.const_e and not self.alt_f

    def at(self, n: int) -> Fraction:
        """Exact value of the sequence at index n (any integer)."""
        total = Fraction(self.const_e)
        if self.alt_f:
            total += self.alt_f if n % 2 == 0 else -self.alt_f
        for t in self.terms:
            total += t.poly(n) * fib(n - t.shift)
        return total

    def __add__(self, other: "FibExpr") -> "FibExpr":
        if not isinstance(other, FibExpr):
            return NotImplemented
        return FibExpr.of(
            [(t.shift, t.poly) for t in self.terms + other.terms],
            self.const_e + other.const_e,
            self.alt_f + other.alt_f,
        )

    def __neg__(self) -> "FibExpr":
        return self * -1

    def __sub__(self, other: "FibExpr") -> "FibExpr":
        if not isinstance(other, FibExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> "FibExpr":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        r = Fraction(scalar)
        return FibExpr.of(
            [(t.shift, t.poly * r) for t in self.terms],
            self.const_e * r,
            self.alt_f * r,
        )

    __rmul__ = __mul__

    def shifted(self, k: int) -> "FibExpr":
        """The reindexed sequence n -> self(n + k)."""
        alt = self.alt_f if k % 2 == 0 else -self.alt_f
        return FibExpr.of(
            [(t.shift - k, t.poly.taylor_shift(k)) for t in self.terms],
            self.const_e,
            alt,
        )

    def canon(self) -> "CanonForm":
        """Collapse every shift onto the F(n), F(n-1) basis."""
        p0 = Poly(())
        p1 = Poly(())
        for t in self.terms:
            c_f, c_f1 = shift_coeffs(t.shift)
            p0 = p0 + t.poly * c_f
            p1 = p1 + t.poly * c_f1
        return CanonForm(p0, p1, self.const_e, self.alt_f)

    def binet(self) -> "BinetForm":
        """Split the Fibonacci part over the roots alpha and beta.

        The constant and alternating parts are not included; they live on
        const_e and alt_f of the expression itself.
        """
        q_alpha = Poly(())
        q_beta = Poly(())
        neg_inv_sqrt5 = QuadRat(0, Fraction(-1, 5))
        for t in self.terms:
            # p(n)*F(n-j) = p(n)*(alpha^{n-j} - beta^{n-j})/sqrt5; the beta
            # multiplier is computed via its own power chain so conjugacy of
            # the two polynomials is a cross-check, not a construction.
            m_alpha = alpha_pow(-t.shift) * INV_SQRT5
            m_beta = BETA ** (-t.shift) * neg_inv_sqrt5
            q_alpha = q_alpha + t.poly * m_alpha
            q_beta = q_beta + t.poly * m_beta
        return BinetForm(q_alpha, q_beta)

    def same_sequence(self, other: "FibExpr") -> bool:
        """True iff both expressions agree at every integer index."""
        return self.canon() == other.canon()

    def __str__(self) -> str:
        from .parser import format_expr

        return format_expr(self)


@dataclass(frozen=True)
class CanonForm:
    """The reduced shape P0(n)*F(n) + P1(n)*F(n-1) + e + f*(-1)^n.

    Componentwise equality of canonical forms is equality of sequences.
    """

    p0: Poly
    p1: Poly
    const_e: Fraction
    alt_f: Fraction

    @property
    def fib_degree(self) -> int | None:
        """max(deg P0, deg P1), or None when the Fibonacci part vanishes."""
        d0, d1 = self.p0.degree, self.p1.degree
        if d0 is None:
            return d1
        if d1 is None:
            return d0
        return max(d0, d1)

    def to_expr(self) -> FibExpr:
        return FibExpr.of([(0, self.p0), (1, self.p1)], self.const_e, self.alt_f)


@dataclass(frozen=True)
class BinetForm:
    """Fibonacci part written as q_alpha(n)*alpha^n + q_beta(n)*beta^n.

    The sign convention puts a plus between the two halves, so that for
    rational input q_beta is the componentwise Q(sqrt(5))-conjugate of
    q_alpha; the two therefore always share the same degree.
    """

    q_alpha: Poly
    q_beta: Poly

    @property
    def degree(self) -> int | None:
        """Common degree of the two coefficient polynomials (None if zero)."""
        return self.q_alpha.degree

    def value_at(self, n: int) -> QuadRat:
        """q_alpha(n)*alpha^n + q_beta(n)*beta^n, exactly in Q(sqrt(5))."""
        a = alpha_pow(n)
        return self.q_alpha(n) * a + self.q_beta(n) * a.conj()
