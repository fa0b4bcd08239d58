"""Command-line front end: ``appell {check,table,eval,series,bell}``.

Exit codes: 0 success, 1 at least one failing identity, 2 usage error.
Rational arguments use ``p/q`` syntax; decimals are rejected.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .bell import bell_partial, bell_symbols
from .families import get_family
from .identities import DEFAULT_FAMILIES, SUITES, run_suite
from .poly import substitute, var
from .series import egf_coefficient, series_pow_symbolic

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"expected an exact rational p/q, got {text!r}")
    return Fraction(text)


def order_value(text: str):
    return None if text == "symbolic" else rational(text)


def non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _resolve_family(name: str, seed: int):
    if name == "random":
        name = f"random:{seed}"
    try:
        return get_family(name)
    except KeyError:
        raise UsageError(f"unknown family {name!r}; use bernoulli, euler, monomial, "
                         f"exponential or random:<seed>") from None


def _family_names(values: Optional[Sequence[str]], seed: int) -> list:
    if not values:
        return list(DEFAULT_FAMILIES)
    names = []
    for value in values:
        for name in value.split(","):
            name = name.strip()
            if name:
                names.append(_resolve_family(name, seed).name)
    return names


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _format_params(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def cmd_check(args) -> int:
    suites = args.suite or ["all"]
    for s in suites:
        if s != "all" and s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; choose from all, {', '.join(SUITES)}")
    families = _family_names(args.family, args.seed)
    reports = run_suite(suites, families, max_n=args.max_n, max_m=args.max_m,
                        max_p=args.max_p, jobs=args.jobs)
    passed = sum(r.passed for r in reports)
    failed = len(reports) - passed
    label = ",".join(suites)
    if args.format == "json":
        doc = {"suite": label, "cases": [r.to_dict() for r in reports],
               "passed": passed, "failed": failed}
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        rows = [("identity", "family", "params", "status", "lhs", "rhs")]
        rows += [(r.identity, r.family, _format_params(dict(r.params)), r.status, r.lhs or "", r.rhs or "")
                 for r in reports]
        text = _csv(rows)
    else:
        lines = []
        for r in reports:
            line = f"{r.status.upper():4} {r.identity} [{r.family}] {_format_params(dict(r.params))}"
            if not r.passed:
                line += f"\n     stage: {r.stage}\n     lhs: {r.lhs}\n     rhs: {r.rhs}"
            lines.append(line)
        lines.append(f"suite {label}: {passed} passed, {failed} failed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0 if failed == 0 else 1


def _order_polys(fam, n_max: int, order):
    for n in range(n_max + 1):
        p = fam.order_poly(n)
        yield n, p if order is None else substitute(p, "alpha", order)


def cmd_table(args) -> int:
    fam = _resolve_family(args.family, args.seed)
    rows = list(_order_polys(fam, args.n, args.order))
    if args.format == "json":
        text = json.dumps({"family": fam.name, "order": "symbolic" if args.order is None else str(args.order),
                           "rows": [{"n": n, "polynomial": str(p)} for n, p in rows]}, indent=2) + "\n"
    elif args.format == "csv":
        text = _csv([("n", "polynomial")] + [(n, str(p)) for n, p in rows])
    else:
        text = "".join(f"{n}\t{p}\n" for n, p in rows)
    _emit(text, args.output)
    return 0


def cmd_eval(args) -> int:
    fam = _resolve_family(args.family, args.seed)
    p = fam.order_poly(args.n)
    value = substitute(substitute(p, "alpha", args.order), "x", args.x).constant_value()
    if args.format == "json":
        text = json.dumps({"family": fam.name, "n": args.n, "x": str(args.x),
                           "order": str(args.order), "value": str(value)}) + "\n"
    elif args.format == "csv":
        text = _csv([("family", "n", "x", "order", "value"), (fam.name, args.n, args.x, args.order, value)])
    else:
        text = f"{value}\n"
    _emit(text, args.output)
    return 0


def cmd_series(args) -> int:
    fam = _resolve_family(args.family, args.seed)
    exponent = var("alpha") if args.alpha is None else args.alpha
    series = series_pow_symbolic(fam.generating_series(args.terms), exponent)
    coeffs = [str(egf_coefficient(series, n)) for n in range(args.terms + 1)]
    if args.format == "json":
        text = json.dumps({"family": fam.name, "alpha": "symbolic" if args.alpha is None else str(args.alpha),
                           "egf": coeffs}, indent=2) + "\n"
    elif args.format == "csv":
        text = _csv([("n", "coefficient")] + list(enumerate(coeffs)))
    else:
        text = ", ".join(coeffs) + "\n"
    _emit(text, args.output)
    return 0


def cmd_bell(args) -> int:
    if args.args:
        values = [rational(v) for v in args.args.split(",")]
    else:
        values = list(bell_symbols(max(args.n, 1)))
    try:
        value = bell_partial(args.n, args.k, values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = str(value)
    if args.format == "json":
        text = json.dumps({"n": args.n, "k": args.k, "value": text})
    elif args.format == "csv":
        text = _csv([("n", "k", "value"), (args.n, args.k, text)]).rstrip("\n")
    _emit(text + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="appell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--output", "-o", help="write to this path instead of stdout")
        p.add_argument("--seed", type=int, default=1, help="seed used by the bare 'random' family")

    p = sub.add_parser("check", help="run identity suites")
    p.add_argument("--suite", action="append", help="suite name or 'all' (repeatable)")
    p.add_argument("--family", action="append",
                   help="family name(s), comma separated or repeated; default: full catalog")
    p.add_argument("--max-n", type=non_negative, default=4)
    p.add_argument("--max-m", type=non_negative, default=None)
    p.add_argument("--max-p", type=non_negative, default=None)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $APPELL_JOBS or 1)")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", help="tabulate f_n^(order)(x)")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=non_negative, required=True)
    p.add_argument("--order", type=order_value, default=Fraction(1), help="p/q or 'symbolic'")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("eval", help="evaluate f_n^(order)(x) at a rational point")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=non_negative, required=True)
    p.add_argument("--x", type=rational, required=True)
    p.add_argument("--order", type=rational, default=Fraction(1))
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("series", help="EGF coefficients of F(t)^alpha")
    p.add_argument("--family", required=True)
    p.add_argument("--alpha", type=order_value, default=Fraction(1), help="p/q or 'symbolic'")
    p.add_argument("--terms", type=non_negative, required=True)
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bell", help="partial Bell polynomial B(n, k)")
    p.add_argument("--n", type=non_negative, required=True)
    p.add_argument("--k", type=non_negative, required=True)
    p.add_argument("--args", help="comma separated rationals instead of symbols x1..xn")
    common(p)
    p.set_defaults(func=cmd_bell)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, argparse.ArgumentTypeError) as exc:
        print(f"appell: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
