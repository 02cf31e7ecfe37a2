"""Command-line front end: ``qfloor compute|verify|figure|trend|list-ids``.

Exit codes: 0 when everything checked out, 1 when a sweep found
counterexamples, 2 for usage or domain errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import warnings
from fractions import Fraction

from . import cache
from .arith import is_squarefree
from .classnum import class_number, class_number_dirichlet, h_star, is_fundamental_discriminant
from .floorsum import F_direct, count_A_direct, f_of_n, s_of_n
from .identities import (
    REGISTRY,
    WIDTH_LIMIT,
    DomainError,
    UnknownIdentityError,
    WidthError,
    decimal_str,
    estimate_ops,
    exact_str,
    f_series,
    get,
    human_str,
    residue_class_trend,
    sweep,
)
from .symbols import kronecker

EXIT_OK, EXIT_FINDING, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _class_number_of(n: int) -> int:
    if n < 0 and is_squarefree(n):
        return class_number(n)
    if is_fundamental_discriminant(n) and n < 0:
        return class_number_dirichlet(n).h
    raise UsageError(f"h needs a negative squarefree integer or a negative fundamental discriminant, got {n}")


# kind -> (arity, evaluator, rough operation count)
_COMPUTE = {
    "F": (1, lambda n: F_direct(n), lambda n: n / 4),
    "f": (1, lambda n: f_of_n(n), lambda n: n / 4),
    "S": (1, lambda n: s_of_n(n), lambda n: n / 2),
    "A": (1, lambda n: count_A_direct(n), lambda n: n / 2),
    "h": (1, _class_number_of, lambda n: abs(4 * n)),
    "hstar": (1, lambda m: h_star(abs(m)), lambda m: abs(m)),
    "symbol": (2, lambda a, m: kronecker(a, m), lambda a, m: 0),
}


def _require_width(ops: float, allow_large: bool, what: str) -> None:
    if ops > WIDTH_LIMIT and not allow_large:
        print(f"estimated operations for {what}: {ops:.3g}", file=sys.stderr)
        raise UsageError(f"{what} exceeds the {WIDTH_LIMIT:.0e} operation budget; use --allow-large")


def cmd_compute(args) -> int:
    arity, fn, cost = _COMPUTE[args.kind]
    if len(args.values) != arity:
        raise UsageError(f"compute {args.kind} takes {arity} integer argument(s)")
    if args.kind in ("F", "f", "A") and args.values[0] < 1:
        raise UsageError(f"compute {args.kind} needs n >= 1")
    _require_width(cost(*args.values), args.allow_large, f"compute {args.kind}")
    value = Fraction(fn(*args.values))
    out = human_str(value)
    if args.decimal:
        out += " " + decimal_str(value)
    print(out)
    return EXIT_OK


def _summary_text(summary) -> str:
    lines = [
        f"{summary.id} [{summary.kind}] max_n={summary.max_n}",
        f"  domain: {summary.domain}",
        f"  cases checked: {summary.cases_checked}",
        f"  counterexamples: {summary.counterexample_count}",
    ]
    if summary.note:
        lines.append(f"  {summary.note}")
    for r in summary.counterexamples:
        params = " ".join(map(str, r.params))
        lines.append(f"    ({params}): lhs={human_str(r.lhs)} rhs={human_str(r.rhs)}")
    if summary.counterexample_count > len(summary.counterexamples):
        lines.append(f"    ... {summary.counterexample_count - len(summary.counterexamples)} more")
    lines.append(f"  wall time: {summary.wall_time:.2f} s")
    return "\n".join(lines) + "\n"


def _summary_csv(summary) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["params", "lhs", "rhs"])
    for r in summary.counterexamples:
        writer.writerow([" ".join(map(str, r.params)), exact_str(r.lhs), exact_str(r.rhs)])
    return buf.getvalue()


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def cmd_verify(args) -> int:
    entry = get(args.id)
    max_n = args.max if args.max is not None else entry.default_max
    if max_n < 1:
        raise UsageError("--max must be positive")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    _require_width(estimate_ops(args.id, max_n), args.allow_large, f"verify {args.id} --max {max_n}")
    summary = sweep(args.id, max_n, args.jobs, allow_large=True)
    if args.format == "json":
        text = json.dumps(summary.to_dict(include_time=not args.no_timing), indent=2) + "\n"
    elif args.format == "csv":
        text = _summary_csv(summary)
        print(
            f"{summary.id}: {summary.cases_checked} cases, "
            f"{summary.counterexample_count} counterexamples",
            file=sys.stderr,
        )
    else:
        text = _summary_text(summary)
    _emit(text, args.out)
    return EXIT_OK if summary.ok else EXIT_FINDING


def cmd_figure(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be positive")
    _require_width(args.max**2 / 8, args.allow_large, f"figure --max {args.max}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "f_num", "f_den", "ratio"])
    for row in f_series(args.max):
        writer.writerow([row.n, row.f.numerator, row.f.denominator, row.ratio])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_trend(args) -> int:
    _require_width(args.max**2 / 80, args.allow_large, f"trend --max {args.max}")
    rows = residue_class_trend(args.max)
    if args.format == "json":
        text = json.dumps([row._asdict() for row in rows], indent=2) + "\n"
    elif args.format == "csv":
        text = "residue,count,mean_ratio,target,deviation\n" + "".join(
            f"{r.residue},{r.count},{r.mean_ratio:.6f},{r.target:.6f},{r.deviation:.6f}\n" for r in rows
        )
    else:
        text = f"top decade of [1, {args.max}]\nclass  count  mean f(m)/m   target    deviation\n" + "".join(
            f"{r.residue:>5}  {r.count:>5}  {r.mean_ratio:>11.6f}  {r.target:>8.4f}  {r.deviation:>10.6f}\n"
            for r in rows
        )
    _emit(text, args.out)
    return EXIT_OK


def cmd_list_ids(args) -> int:
    for id, entry in REGISTRY.items():
        print(f"{id}\t{entry.kind}\t{entry.statement}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qfloor", description=__doc__.splitlines()[0])
    parser.add_argument("--cache", help=f"class number cache file (default: ${cache.ENV_VAR})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate one quantity exactly")
    p.add_argument("kind", choices=list(_COMPUTE))
    p.add_argument("values", nargs="+", type=int)
    p.add_argument("--decimal", action="store_true", help="also print six decimals")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="sweep one identity over its domain")
    p.add_argument("id")
    p.add_argument("--max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["csv", "json", "text"], default="text")
    p.add_argument("--out")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="omit wall time from JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="write n, f(n), f(n)/n as CSV")
    p.add_argument("--max", type=int, default=10_000)
    p.add_argument("--out")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("trend", help="mean f(m)/m per residue class mod 4")
    p.add_argument("--max", type=int, default=10_000)
    p.add_argument("--format", choices=["csv", "json", "text"], default="text")
    p.add_argument("--out")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_trend)

    p = sub.add_parser("list-ids", help="list registered identities")
    p.set_defaults(func=cmd_list_ids)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    cache_path = args.cache or os.environ.get(cache.ENV_VAR)
    if cache_path:
        cache.seed_memo(cache_path)
    try:
        code = args.func(args)
    except (UsageError, DomainError, WidthError, UnknownIdentityError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"qfloor: error: {message}", file=sys.stderr)
        return EXIT_USAGE
    if cache_path:
        try:
            cache.save_memo(cache_path)
        except OSError as exc:
            warnings.warn(f"could not write class number cache {cache_path}: {exc}", cache.CacheWarning)
    return code


if __name__ == "__main__":
    sys.exit(main())
