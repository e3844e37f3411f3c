"""Command-line front end: ``planar <command> ...``.

Exit status is 0 on success (or a passing check), 1 when a check finds a
mismatch and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import calculus, special_series
from .expr import ParseError, format_series, parse, parse_monomial, pretty_monomial
from .report import Report
from .series import PrecisionError, Series, add, coefficient, one
from .substitution import OrderError, substitute
from .trees import encode, enumerate_monomials, orbit_sum

DEFAULT_N = 6
DEFAULT_K = 2
FORMATS = ("pretty", "canonical", "json")


class UsageError(Exception):
    pass


def _emit(f: Series, args, k: Optional[int] = None) -> None:
    print(format_series(f, args.format, k))


def _poly(text: str, precision: int) -> Series:
    # parsed inputs are exact polynomials, so their bound can be raised freely
    f = parse(text)
    return f.with_precision(max(precision, f.precision))


def _k(args) -> int:
    if args.k < 2:
        raise UsageError(f"-k must be >= 2, got {args.k}")
    return args.k


def cmd_exp(args):
    _emit(special_series.exp_k(_k(args), args.N), args, args.k)


def cmd_log(args):
    _emit(special_series.log_k(_k(args), args.N), args, args.k)


def cmd_h_closed_form(args):
    if not 1 <= args.n <= 4:
        raise UsageError("-n must be between 1 and 4")
    _emit(special_series.h_closed_form(_k(args), args.n), args, args.k)


def cmd_diff(args):
    f = parse(args.expr)
    _emit(calculus.derivative(f.with_precision(f.precision + 1)), args)


def cmd_differential(args):
    f = parse(args.expr)
    _emit(calculus.differential(f.with_precision(f.precision + 1)), args)


def cmd_subst(args):
    f = _poly(args.expr, args.N).with_precision(args.N)
    g = _poly(args.x, args.N)
    h = _poly(args.y, args.N) if args.y is not None else None
    _emit(substitute(f, g, h), args)


def cmd_orbit(args):
    s = parse_monomial(args.monomial)
    for t in orbit_sum(s):
        print(encode(t) if args.format == "canonical" else pretty_monomial(t))


def cmd_enumerate(args):
    labels = set(args.labels)
    if not labels <= {"x", "y"}:
        raise UsageError("--labels may contain only x and y")
    for t in enumerate_monomials(args.n, labels):
        print(encode(t) if args.format == "canonical" else pretty_monomial(t))


def cmd_coeff(args):
    s = parse_monomial(args.monomial)
    if args.expr is not None:
        f = parse(args.expr)
    elif args.series == "exp":
        f = special_series.exp_k(_k(args), args.N)
    else:
        f = special_series.log_k(_k(args), args.N)
    print(coefficient(f, s))


def _print_report(r: Report, args) -> int:
    if getattr(args, "json", False):
        print(json.dumps(_report_dict(r)))
    else:
        print(r.summary())
        for row in r.rows:
            rev = "n/a" if row["reversion"] is None else str(row["reversion"])
            print(f"  {row['status']:8s} {row['orbit']:16s} formula {row['formula']}  reversion {rev}")
    return 0 if r.passed else 1


def _report_dict(r: Report) -> dict:
    out = {"name": r.name, "passed": r.passed, "precision": r.precision}
    if r.precondition:
        out["precondition"] = r.precondition
    if r.mismatch is not None:
        out["mismatch"] = {
            "monomial": encode(r.mismatch.monomial),
            "lhs": str(r.mismatch.lhs),
            "rhs": str(r.mismatch.rhs),
        }
    if r.rows:
        out["rows"] = [
            {
                "orbit": row["orbit"],
                "members": row["members"],
                "formula": str(row["formula"]),
                "reversion": None if row["reversion"] is None else str(row["reversion"]),
                "status": row["status"],
            }
            for row in r.rows
        ]
    return out


def cmd_verify(args) -> int:
    which = args.check
    if which == "chain-rule":
        f = _poly(args.f, args.N)
        g = _poly(args.g, args.N)
        r = calculus.verify_chain_rule(f, g)
    elif which == "special-chain-rule":
        k = _k(args)
        f = _poly(args.f, args.N)
        g = add(special_series.exp_k(k, args.N), -one(args.N))
        r = calculus.verify_special_chain_rule(f.with_precision(args.N), g)
    elif which == "exp-functional":
        r = special_series.verify_exp_functional_equation(_k(args), args.N)
    elif which == "exp-derivative":
        r = special_series.verify_exp_derivative(_k(args), args.N)
    elif which == "omega":
        r = special_series.verify_omega_equation(_k(args), args.N)
    elif which == "log-ode":
        r = special_series.verify_log_ode(_k(args), args.N)
    elif which == "h-recurrence":
        r = special_series.verify_h_recurrence(_k(args), args.N)
    else:
        r = special_series.h4_discrepancy_report(_k(args))
    return _print_report(r, args)


VERIFY_CHECKS = (
    "chain-rule",
    "special-chain-rule",
    "exp-functional",
    "exp-derivative",
    "omega",
    "log-ode",
    "h-recurrence",
    "h4-report",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planar", description="Exact planar power series.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kn(p, n=True):
        p.add_argument("-k", type=int, default=DEFAULT_K, help="arity of the exponential (default 2)")
        if n:
            p.add_argument("-N", type=int, default=DEFAULT_N, help="x-degree precision (default 6)")

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="pretty")

    p = sub.add_parser("exp", help="k-ary planar exponential")
    add_kn(p)
    add_format(p)
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("log", help="k-ary planar logarithm Log_k(1+x)")
    add_kn(p)
    add_format(p)
    p.set_defaults(func=cmd_log)

    p = sub.add_parser("h-closed-form", help="printed closed form of h_n, n <= 4")
    add_kn(p, n=False)
    p.add_argument("-n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_h_closed_form)

    p = sub.add_parser("diff", help="derivative d/dx of a polynomial")
    p.add_argument("expr")
    add_format(p)
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("differential", help="universal differential d of a polynomial")
    p.add_argument("expr")
    add_format(p)
    p.set_defaults(func=cmd_differential)

    p = sub.add_parser("subst", help="substitute x -> G (and y -> H)")
    p.add_argument("expr")
    p.add_argument("--x", required=True, metavar="G")
    p.add_argument("--y", metavar="H")
    p.add_argument("-N", type=int, default=DEFAULT_N)
    add_format(p)
    p.set_defaults(func=cmd_subst)

    p = sub.add_parser("orbit", help="planar members of the orbit of a tree")
    p.add_argument("monomial")
    p.add_argument("--format", choices=("pretty", "canonical"), default="pretty")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("enumerate", help="all monomials of a given total degree")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--labels", default="x")
    p.add_argument("--format", choices=("pretty", "canonical"), default="pretty")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("coeff", help="coefficient of a monomial")
    p.add_argument("monomial")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--expr")
    src.add_argument("--series", choices=("exp", "log"))
    add_kn(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("verify", help="check an identity; exit 1 on mismatch")
    p.add_argument("check", choices=VERIFY_CHECKS)
    add_kn(p)
    p.add_argument("--f", default="x", help="polynomial f for the chain rules")
    p.add_argument("--g", default="x", help="polynomial g for the chain rule")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "N", 0) < 0:
        print("planar: error: -N must be >= 0", file=sys.stderr)
        return 2
    try:
        status = args.func(args)
    except (UsageError, ParseError, PrecisionError, OrderError, calculus.DomainError,
            special_series.NotNormalizedError, ValueError) as exc:
        print(f"planar: error: {exc}", file=sys.stderr)
        return 2
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
