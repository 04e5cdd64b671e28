"""fibrec: exact arithmetic for Fibonacci-combination integer sequences.

The central object is a sequence of the form

    w_n = sum_i p_i(n) * F(n - j_i) + e + f * (-1)**n

with rational polynomial coefficients.  The package canonicalizes such
expressions, derives their integer recurrences, decides whether they are
integer-valued over all of Z, recovers coefficients from initial values,
parses/prints a small text language for them, and cross-checks everything
against brute-force enumerators and bundled OEIS b-files.
"""

from .cfinite import InvariantViolation, Recurrence, char_poly, to_recurrence, verify_recurrence
from .decide import Integral, NonIntegral, Verdict, brute_scan, is_integer_sequence
from .exact import ALPHA, BETA, INV_SQRT5, SQRT5, Poly, QuadRat, poly
from .fib import alpha_pow, fib, shift_coeffs
from .oeis import (
    OeisEntry,
    OeisFormatError,
    OeisHit,
    OeisLookupError,
    OeisTimeoutError,
    OeisTransportError,
    entry_from_bfile,
    load_fixtures,
    parse_bfile,
    render_bfile,
    search_local,
    search_remote,
)
from .oracles import compositions_parts_count, fibonacci_word_inversions, leonardo
from .parser import ParseError, format_expr, format_poly, parse
from .seqform import BinetForm, CanonForm, FibExpr, ShiftTerm
from .synth import (
    FAMILY_TEMPLATES,
    LINEAR,
    LINEAR_FULL,
    QUAD_LINEAR,
    QUADRATIC,
    DegenerateTemplateError,
    SynthSolution,
    Template,
    build_system,
    solve_template,
    symbolic_inverse,
    theorem_construct,
    theorem_solution,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "BETA",
    "BinetForm",
    "CanonForm",
    "DegenerateTemplateError",
    "FAMILY_TEMPLATES",
    "FibExpr",
    "INV_SQRT5",
    "Integral",
    "InvariantViolation",
    "LINEAR",
    "LINEAR_FULL",
    "NonIntegral",
    "OeisEntry",
    "OeisFormatError",
    "OeisHit",
    "OeisLookupError",
    "OeisTimeoutError",
    "OeisTransportError",
    "ParseError",
    "Poly",
    "QUAD_LINEAR",
    "QUADRATIC",
    "QuadRat",
    "Recurrence",
    "SQRT5",
    "ShiftTerm",
    "SynthSolution",
    "Template",
    "Verdict",
    "alpha_pow",
    "brute_scan",
    "build_system",
    "char_poly",
    "compositions_parts_count",
    "entry_from_bfile",
    "fib",
    "fibonacci_word_inversions",
    "format_expr",
    "format_poly",
    "is_integer_sequence",
    "leonardo",
    "load_fixtures",
    "parse",
    "parse_bfile",
    "poly",
    "render_bfile",
    "search_local",
    "search_remote",
    "shift_coeffs",
    "solve_template",
    "symbolic_inverse",
    "theorem_construct",
    "theorem_solution",
    "to_recurrence",
    "verify_recurrence",
]
