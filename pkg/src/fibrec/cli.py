"""Command-line front end.

Subcommands: eval, canon, rec, check, synth, theorem, oeis, oracle.  Every
subcommand accepts --json for a single machine-readable document on stdout.

Exit codes: 0 success; 1 internal error; 2 parse or usage error;
3 NON-INTEGER verdict from `check`; 4 network failure in `oeis --remote`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .cfinite import to_recurrence
from .decide import NonIntegral, is_integer_sequence
from .oeis import (
    OeisFormatError,
    OeisTimeoutError,
    OeisTransportError,
    search_local,
    search_remote,
)
from .oracles import compositions_parts_count, fibonacci_word_inversions, leonardo
from .parser import ParseError, format_expr, format_poly, parse
from .synth import Template, solve_template, theorem_solution

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_NONINTEGER = 3
EXIT_NETWORK = 4

REMOTE_ENV = "FIBREC_OEIS_REMOTE"


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}") from None


def _fraction_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(part) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"expected a comma-separated list of rationals, got {text!r}") from None


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _cmd_eval(args) -> int:
    if args.start > args.stop:
        raise ValueError("--from must be <= --to")
    expr = parse(args.expr)
    values = [(n, expr.at(n)) for n in range(args.start, args.stop + 1)]
    payload = {
        "command": "eval",
        "expression": args.expr,
        "from": args.start,
        "to": args.stop,
        "values": [{"n": n, "value": str(v)} for n, v in values],
    }
    _emit(args, payload, [f"{n} {v}" for n, v in values])
    return EXIT_OK


def _cmd_canon(args) -> int:
    form = parse(args.expr).canon()
    payload = {
        "command": "canon",
        "expression": args.expr,
        "p0": [str(c) for c in form.p0.coeffs],
        "p1": [str(c) for c in form.p1.coeffs],
        "e": str(form.const_e),
        "f": str(form.alt_f),
    }
    lines = [
        f"P0 = {format_poly(form.p0)}",
        f"P1 = {format_poly(form.p1)}",
        f"e  = {form.const_e}",
        f"f  = {form.alt_f}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_rec(args) -> int:
    rec = to_recurrence(parse(args.expr))
    payload = {
        "command": "rec",
        "expression": args.expr,
        "order": rec.order,
        "char_poly": [int(c) for c in rec.char_poly.coeffs],
        "coefficients": list(rec.coeffs),
        "initial": [str(v) for v in rec.initial],
    }
    lines = [
        f"order: {rec.order}",
        f"characteristic polynomial: {format_poly(rec.char_poly, var='x')}",
        f"coefficients: {', '.join(str(c) for c in rec.coeffs)}",
        f"initial values: {', '.join(str(v) for v in rec.initial)}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_check(args) -> int:
    verdict = is_integer_sequence(parse(args.expr))
    if isinstance(verdict, NonIntegral):
        payload = {
            "command": "check",
            "expression": args.expr,
            "integral": False,
            "witness_n": verdict.witness_n,
            "value": str(verdict.value),
        }
        _emit(args, payload, [f"NON-INTEGER witness: n={verdict.witness_n} value={verdict.value}"])
        return EXIT_NONINTEGER
    payload = {
        "command": "check",
        "expression": args.expr,
        "integral": True,
        "certificate": list(verdict.certificate),
    }
    _emit(args, payload, [f"INTEGER certificate: {', '.join(str(v) for v in verdict.certificate)}"])
    return EXIT_OK


def _solution_output(args, command: str, extra: dict, solution) -> None:
    text = format_expr(solution.expr)
    payload = {
        "command": command,
        **extra,
        "coefficients": {k: str(v) for k, v in solution.coefficients.items()},
        "expression": text,
    }
    lines = [text] + [f"{k} = {v}" for k, v in solution.coefficients.items()]
    _emit(args, payload, lines)


def _cmd_synth(args) -> int:
    template = Template(args.deg0, args.deg1, args.const, args.alt)
    values = _fraction_list(args.values)
    solution = solve_template(template, values)
    extra = {
        "template": {
            "deg_p0": template.deg_p0,
            "deg_p1": template.deg_p1,
            "has_const": template.has_const,
            "has_alt": template.has_alt,
        },
        "values": [str(v) for v in values],
    }
    _solution_output(args, "synth", extra, solution)
    return EXIT_OK


def _cmd_theorem(args) -> int:
    params: dict[str, object] = {}
    for name in ("d", "e", "f"):
        if getattr(args, name) is not None:
            params[name] = getattr(args, name)
    if args.z is not None:
        params["z"] = tuple(_int_list(args.z))
    if args.w is not None:
        params["w"] = tuple(_int_list(args.w))
    solution = theorem_solution(args.which, **params)
    extra = {
        "which": args.which,
        "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()},
    }
    _solution_output(args, "theorem", extra, solution)
    return EXIT_OK


def _cmd_oeis(args) -> int:
    prefix = _int_list(args.terms)
    if args.remote:
        if os.environ.get(REMOTE_ENV, "").lower() not in ("1", "true", "yes"):
            raise ValueError(
                f"remote lookup needs both --remote and {REMOTE_ENV}=1 in the environment"
            )
        hits = search_remote(prefix, timeout=args.timeout)
        source = "remote"
    else:
        hits = search_local(prefix)
        source = "local"
    payload = {
        "command": "oeis",
        "prefix": prefix,
        "source": source,
        "hits": [
            {
                "a_number": h.entry.a_number,
                "offset": h.entry.offset,
                "match_start": h.match_start,
            }
            for h in hits
        ],
    }
    if hits:
        lines = [
            f"{h.entry.a_number} offset={h.entry.offset} match_start={h.match_start}"
            for h in hits
        ]
    else:
        lines = ["no matches"]
    _emit(args, payload, lines)
    return EXIT_OK


_ORACLES = {
    "compositions": compositions_parts_count,
    "inversions": fibonacci_word_inversions,
    "leonardo": leonardo,
}


def _cmd_oracle(args) -> int:
    value = _ORACLES[args.kind](args.n)
    payload = {"command": "oracle", "kind": args.kind, "n": args.n, "value": value}
    _emit(args, payload, [str(value)])
    return EXIT_OK


def _build_argparser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="fibrec",
        description="Exact arithmetic for sequences built from Fibonacci numbers "
        "with rational polynomial coefficients.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, func) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        p.set_defaults(func=func)
        return p

    p = command("eval", "evaluate an expression on an index range", _cmd_eval)
    p.add_argument("expr")
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--to", dest="stop", type=int, default=10)

    p = command("canon", "reduce to P0*F(n) + P1*F(n-1) + e + f*(-1)^n", _cmd_canon)
    p.add_argument("expr")

    p = command("rec", "derive order, characteristic polynomial and recurrence", _cmd_rec)
    p.add_argument("expr")

    p = command("check", "decide integrality (exit 3 when non-integer)", _cmd_check)
    p.add_argument("expr")

    p = command("synth", "recover coefficients from initial values", _cmd_synth)
    p.add_argument("--deg0", type=int, default=None, help="degree of the F(n) polynomial")
    p.add_argument("--deg1", type=int, default=None, help="degree of the F(n-1) polynomial")
    p.add_argument("--const", action="store_true", help="include a constant term")
    p.add_argument("--alt", action="store_true", help="include an alternating term")
    p.add_argument("--values", required=True, help="comma-separated w_0..w_{k-1}")

    p = command("theorem", "build one of the four integer families", _cmd_theorem)
    p.add_argument("which", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--e", type=int, default=None)
    p.add_argument("--f", type=int, default=None)
    p.add_argument("--z", default=None, help="comma-separated z parameters")
    p.add_argument("--w", default=None, help="comma-separated w_0..w_5 (family 4)")

    p = command("oeis", "match a prefix against bundled OEIS fixtures", _cmd_oeis)
    p.add_argument("terms", help="comma-separated sequence prefix (>= 4 terms)")
    p.add_argument("--remote", action="store_true",
                   help=f"query oeis.org (also needs {REMOTE_ENV}=1)")
    p.add_argument("--timeout", type=float, default=10.0)

    p = command("oracle", "run a brute-force enumerator", _cmd_oracle)
    p.add_argument("kind", choices=sorted(_ORACLES))
    p.add_argument("n", type=int)

    return top


def main(argv: list[str] | None = None) -> int:
    argparser = _build_argparser()
    try:
        args = argparser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OeisTimeoutError, OeisTransportError, OeisFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive catch-all
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
