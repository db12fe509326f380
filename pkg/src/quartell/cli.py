"""Command-line surface: context inspection, point evaluation, tabulation,
zero finding and the verification suite.

Exit codes: 0 success/pass, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import List, Optional

from .errors import DomainError
from .extension import c_complex, d_complex, find_zeros, s_squared
from .modulus import context_from_kappa
from .verification import run_verification_suite
from .weierstrass import wp, wp_prime

_FUNCTIONS = {
    "d": d_complex,
    "c": c_complex,
    "s2": s_squared,
    "wp": wp,
    "wp-prime": wp_prime,
}


def _parse_kappa(value: str) -> float:
    try:
        kappa = float(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a number: {value!r}") from exc
    if not 0.0 < kappa < 1.0:
        raise argparse.ArgumentTypeError(f"kappa must lie in (0, 1), got {value}")
    return kappa


def _parse_kappa_list(value: str) -> List[float]:
    if not value.strip():
        return []
    return [_parse_kappa(part) for part in value.split(",") if part.strip()]


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quartell",
        description=(
            "Elliptic-function family generated by the quarter-parameter "
            "hypergeometric integral: evaluation, tabulation and identity "
            "verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("context", help="print the derived modulus context as JSON")
    p.add_argument("--kappa", type=_parse_kappa, required=True)

    p = sub.add_parser("eval", help="evaluate one function at a complex point")
    p.add_argument("--kappa", type=_parse_kappa, required=True)
    p.add_argument("--fn", choices=sorted(_FUNCTIONS), required=True)
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)

    p = sub.add_parser("table", help="tabulate a function along the real axis")
    p.add_argument("--kappa", type=_parse_kappa, required=True)
    p.add_argument("--fn", choices=sorted(_FUNCTIONS), required=True)
    p.add_argument("--from", dest="u0", type=float, required=True)
    p.add_argument("--to", dest="u1", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("zeros", help="conjugate zeros of d with their wp checks")
    p.add_argument("--kappa", type=_parse_kappa, required=True)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--kappas", type=_parse_kappa_list, required=True,
                   help="comma-separated moduli in (0, 1)")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--grid-points", type=int, default=11)
    p.add_argument("--report", metavar="PATH", default=None,
                   help="also write the JSON report to PATH")
    p.add_argument("--figures", metavar="DIR", default=None,
                   help="render residual/profile figures into DIR")
    return parser


def _cmd_context(args) -> int:
    _emit_json(context_from_kappa(args.kappa).to_dict())
    return 0


def _cmd_eval(args) -> int:
    ctx = context_from_kappa(args.kappa)
    value = _FUNCTIONS[args.fn](ctx, complex(args.re, args.im))
    _emit_json(
        {
            "kappa": args.kappa,
            "fn": args.fn,
            "z": {"re": args.re, "im": args.im},
            "value": {"re": value.real, "im": value.imag},
        }
    )
    return 0


def _cmd_table(args) -> int:
    if args.steps < 1:
        print("error: --steps must be >= 1", file=sys.stderr)
        return 2
    ctx = context_from_kappa(args.kappa)
    fn = _FUNCTIONS[args.fn]
    rows = []
    for i in range(args.steps + 1):
        u = args.u0 + (args.u1 - args.u0) * i / args.steps
        value = fn(ctx, complex(u, 0.0))
        rows.append((u, value.real, value.imag))
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["u", "re", "im"])
        for u, re, im in rows:
            writer.writerow([f"{u:.17g}", f"{re:.17g}", f"{im:.17g}"])
    else:
        _emit_json([{"u": u, "re": re, "im": im} for u, re, im in rows])
    return 0


def _cmd_zeros(args) -> int:
    ctx = context_from_kappa(args.kappa)
    zeros = find_zeros(ctx)
    zp = zeros.z_plus
    _emit_json(
        {
            "kappa": args.kappa,
            "z_plus": {"re": zp.real, "im": zp.imag},
            "z_minus": {"re": zp.real, "im": -zp.imag},
            "checks": {
                "d_at_zero": abs(d_complex(ctx, zp)),
                "wp_at_zero_residual": abs(
                    wp(ctx, zp) - (0.5 * args.kappa**2 - 1.0 / 3.0)
                ),
                "wp_at_shifted_zero_residual": abs(
                    wp(ctx, zp + 1j * ctx.omega_prime) - 1.0 / 6.0
                ),
                "wp_prime_sq_residual": abs(
                    wp_prime(ctx, zp) ** 2
                    - 0.5 * args.kappa**4 * (args.kappa**2 - 1.0)
                ),
            },
        }
    )
    return 0


def _cmd_verify(args) -> int:
    if args.grid_points < 2:
        print("error: --grid-points must be >= 2", file=sys.stderr)
        return 2
    report = run_verification_suite(
        args.kappas, tol=args.tol, grid_points=args.grid_points
    )
    _emit_json(report)
    if args.report:
        with open(args.report, "w") as handle:
            json.dump(report, handle, indent=2, sort_keys=True)
            handle.write("\n")
    if args.figures:
        from .plots import render_verification_figures

        render_verification_figures(report, args.figures)
    return 0 if report["passed"] else 1


_DISPATCH = {
    "context": _cmd_context,
    "eval": _cmd_eval,
    "table": _cmd_table,
    "zeros": _cmd_zeros,
    "verify": _cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad input; normalize other codes
        return int(exc.code) if exc.code else 0
    try:
        return _DISPATCH[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
