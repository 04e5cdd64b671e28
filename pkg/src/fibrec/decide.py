"""Integrality decision: a certificate of initial values, or a witness index."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cfinite import to_recurrence
from .seqform import FibExpr


@dataclass(frozen=True)
class Integral:
    """The sequence is integer at every n; the certificate is w_0..w_{m-1}."""

    certificate: tuple[int, ...]


@dataclass(frozen=True)
class NonIntegral:
    """A concrete non-integer value; witness_n is the least such index >= 0."""

    witness_n: int
    value: Fraction


Verdict = Integral | NonIntegral


def is_integer_sequence(expr: FibExpr) -> Verdict:
    """Decide whether the expression is integer-valued over all of Z.

    The derived recurrence is monic with unit trailing coefficient, so an
    integer initial segment w_0..w_{m-1} propagates to every integer index
    in both directions; checking those m values is a complete decision.
    """
    rec = to_recurrence(expr)
    for n, v in enumerate(rec.initial):
        if v.denominator != 1:
            return NonIntegral(n, v)
    return Integral(tuple(int(v) for v in rec.initial))


def brute_scan(expr: FibExpr, lo: int, hi: int) -> int | None:
    """First n in [lo, hi] (in scan order) whose value is not an integer."""
    if lo > hi:
        raise ValueError("empty scan range")
    for n in range(lo, hi + 1):
        if expr.at(n).denominator != 1:
            return n
    return None
