"""Recover coefficient polynomials from initial values by exact linear algebra.

A ``Template`` fixes the shape of the target expression: the degrees of the
F(n) and F(n-1) coefficient polynomials, plus optional constant and
alternating terms.  The unknown coefficients then satisfy a square linear
system whose row n states w_n = <basis values at n> . <unknowns>; it is
solved exactly over the rationals with Gauss-Jordan elimination.

Slot order is the reading order of the written-out expression: F(n)
coefficients by descending degree, then F(n-1) coefficients by descending
degree, then the constant, then the alternating coefficient.  Slots are
named a, b, c, ... in that order.

``theorem_construct`` builds the four guaranteed-integer families:

    1: (a*n+b)*F(n) + (c*n+d)*F(n-1)                  params d, z=(z1..z3)
    2: (a*n^2+b*n+c)*F(n) + (d*n^2+e*n+f)*F(n-1)      params f, z=(z1..z5)
    3: (a*n^2+b*n+c)*F(n) + (d*n+e)*F(n-1)            params e, z=(z1..z4)
    4: (a*n+b)*F(n) + (c*n+d)*F(n-1) + e + f*(-1)^n   params w=(w0..w5)

Families 1-3 use closed-form coefficient rows in the parameters
z_i = w_i - F_{i-1}*w_0; family 4 goes through the general solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Poly
from .fib import fib
from .seqform import FibExpr

Matrix = list[list[Fraction]]


class DegenerateTemplateError(ValueError):
    """The template's linear system is singular."""


@dataclass(frozen=True)
class Template:
    """Shape of a synthesis target; degree None means the slot is absent."""

    deg_p0: int | None = None
    deg_p1: int | None = None
    has_const: bool = False
    has_alt: bool = False

    def __post_init__(self) -> None:
        for d in (self.deg_p0, self.deg_p1):
            if d is not None and d < 0:
                raise ValueError("polynomial degree must be >= 0 or None")
        if self.unknowns < 1:
            raise ValueError("template has no unknowns")

    @property
    def unknowns(self) -> int:
        k = 0
        if self.deg_p0 is not None:
            k += self.deg_p0 + 1
        if self.deg_p1 is not None:
            k += self.deg_p1 + 1
        return k + int(self.has_const) + int(self.has_alt)

    @property
    def slot_names(self) -> tuple[str, ...]:
        return tuple(chr(ord("a") + i) for i in range(self.unknowns))

    def basis_row(self, n: int) -> list[Fraction]:
        """Multiplier of each unknown in w_n, in slot order."""
        row: list[Fraction] = []
        if self.deg_p0 is not None:
            fn = fib(n)
            row += [Fraction(n**p * fn) for p in range(self.deg_p0, -1, -1)]
        if self.deg_p1 is not None:
            fn1 = fib(n - 1)
            row += [Fraction(n**p * fn1) for p in range(self.deg_p1, -1, -1)]
        if self.has_const:
            row.append(Fraction(1))
        if self.has_alt:
            row.append(Fraction(1 if n % 2 == 0 else -1))
        return row

    def expr_from(self, coeffs: Sequence) -> FibExpr:
        """Assemble the expression whose slots carry the given coefficients."""
        vals = [Fraction(c) for c in coeffs]
        if len(vals) != self.unknowns:
            raise ValueError(f"expected {self.unknowns} coefficients, got {len(vals)}")
        i = 0
        terms = []
        if self.deg_p0 is not None:
            width = self.deg_p0 + 1
            terms.append((0, Poly(tuple(reversed(vals[i : i + width])))))
            i += width
        if self.deg_p1 is not None:
            width = self.deg_p1 + 1
            terms.append((1, Poly(tuple(reversed(vals[i : i + width])))))
            i += width
        const = vals[i] if self.has_const else Fraction(0)
        i += int(self.has_const)
        alt = vals[i] if self.has_alt else Fraction(0)
        return FibExpr.of(terms, const, alt)


LINEAR = Template(1, 1)
QUADRATIC = Template(2, 2)
QUAD_LINEAR = Template(2, 1)
LINEAR_FULL = Template(1, 1, has_const=True, has_alt=True)

FAMILY_TEMPLATES = {1: LINEAR, 2: QUADRATIC, 3: QUAD_LINEAR, 4: LINEAR_FULL}


@dataclass(frozen=True)
class SynthSolution:
    """Solved expression plus the named slot coefficients that built it."""

    expr: FibExpr
    coefficients: dict[str, Fraction]


def build_system(template: Template) -> Matrix:
    """k x k matrix M with M[n][slot] = multiplier of that slot in w_n."""
    return [template.basis_row(n) for n in range(template.unknowns)]


def _eliminate(aug: Matrix, width: int) -> None:
    # Gauss-Jordan on the left width columns, in place.  Pivot choice is the
    # first nonzero entry top-down: deterministic, and magnitude is
    # irrelevant under exact arithmetic.
    for col in range(width):
        piv = next((r for r in range(col, len(aug)) if aug[r][col]), None)
        if piv is None:
            raise DegenerateTemplateError("the template's linear system is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(len(aug)):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]


def solve_template(template: Template, values: Sequence) -> SynthSolution:
    """Unique exact coefficients reproducing w_0..w_{k-1} = values."""
    vals = [Fraction(v) for v in values]
    k = template.unknowns
    if len(vals) != k:
        raise ValueError(f"template needs {k} values, got {len(vals)}")
    aug = [row + [v] for row, v in zip(build_system(template), vals)]
    _eliminate(aug, k)
    coeffs = [aug[r][k] for r in range(k)]
    return SynthSolution(template.expr_from(coeffs), dict(zip(template.slot_names, coeffs)))


def symbolic_inverse(template: Template) -> Matrix:
    """Exact inverse of build_system: maps (w_0..w_{k-1}) to the slot vector."""
    k = template.unknowns
    aug = [
        row + [Fraction(int(i == j)) for j in range(k)]
        for i, row in enumerate(build_system(template))
    ]
    _eliminate(aug, k)
    return [row[k:] for row in aug]


# Closed-form coefficient rows for families 1-3, over (z_1, ..., z_k) with a
# shared denominator; the trailing slot is the base parameter itself.
_CLOSED_FORMS: dict[int, tuple[str, int, list[tuple[tuple[int, ...], int]]]] = {
    1: (
        "d",
        3,
        [
            ((-1, -3, 2), 5),
            ((6, 3, -2), 5),
            ((-2, 4, -1), 5),
        ],
    ),
    2: (
        "f",
        5,
        [
            ((-1, 3, 1, -3, 1), 10),
            ((-5, -75, 15, 45, -17), 50),
            ((30, 30, -10, -15, 6), 25),
            ((3, -4, -3, 4, -1), 10),
            ((-45, 80, 15, -40, 11), 50),
        ],
    ),
    3: (
        "e",
        4,
        [
            ((2, -1, -2, 1), 10),
            ((-56, -7, 66, -23), 50),
            ((48, 6, -28, 9), 25),
            ((-6, 18, -9, 2), 25),
        ],
    ),
}


def _int_params(name: str, vals: Sequence, want: int) -> list[int]:
    out = list(vals)
    if len(out) != want:
        raise ValueError(f"{name} must have {want} entries, got {len(out)}")
    for v in out:
        if not isinstance(v, int):
            raise ValueError(f"{name} entries must be integers, got {v!r}")
    return out


def theorem_solution(which: int, *, d=None, e=None, f=None, z=None, w=None) -> SynthSolution:
    """Coefficients and expression for one of the four integer families."""
    if which == 4:
        if any(p is not None for p in (d, e, f, z)):
            raise ValueError("family 4 takes only w=(w0..w5)")
        if w is None:
            raise ValueError("family 4 needs w=(w0..w5)")
        return solve_template(LINEAR_FULL, _int_params("w", w, 6))
    if which not in _CLOSED_FORMS:
        raise ValueError(f"unknown family {which!r} (expected 1, 2, 3 or 4)")
    if w is not None:
        raise ValueError(f"family {which} does not take w")
    base_name, n_z, rows = _CLOSED_FORMS[which]
    base = {"d": d, "e": e, "f": f}[base_name]
    extras = {k: v for k, v in {"d": d, "e": e, "f": f}.items() if k != base_name}
    if any(v is not None for v in extras.values()):
        raise ValueError(f"family {which} takes only {base_name} and z")
    if base is None or z is None:
        raise ValueError(f"family {which} needs {base_name} and z=(z1..z{n_z})")
    if not isinstance(base, int):
        raise ValueError(f"{base_name} must be an integer, got {base!r}")
    zs = _int_params("z", z, n_z)
    coeffs = [
        Fraction(sum(c * zi for c, zi in zip(row, zs)), den) for row, den in rows
    ] + [Fraction(base)]
    template = FAMILY_TEMPLATES[which]
    return SynthSolution(template.expr_from(coeffs), dict(zip(template.slot_names, coeffs)))


def theorem_construct(which: int, *, d=None, e=None, f=None, z=None, w=None) -> FibExpr:
    """Expression for a family instance; integer params make it integer-valued."""
    return theorem_solution(which, d=d, e=e, f=f, z=z, w=w).expr
