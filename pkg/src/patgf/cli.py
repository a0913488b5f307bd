"""Command-line front end.

Verbs: count, series, gf, verify, table.  Pattern syntax: compact digits
("132") or comma-separated values ("10,1,2,..."); "eps" is the empty pattern;
sets are semicolon-separated.  PATGF_MAX_N overrides the census bound.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 feasibility refusal, 4 engine error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import (
    GfResult,
    avoid_contain_gf,
    avoid_set_gf,
    u2k_both_once_gf,
    ulk_avoid_gf,
    ulk_exact_once_gf,
)
from .errors import LengthTooLarge, ParseError, PatgfError
from .perms import PatternQuery, census, census_series, parse_pattern, parse_pattern_set
from .ratfunc import RatFunc
from .verify import SUITE_NAMES, run_suites

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3
EXIT_ENGINE = 4

PATTERN_132 = (1, 3, 2)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patgf",
        description="Exact generating functions for pattern-restricted permutations.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_query_flags(p, with_n):
        p.add_argument("--avoid", default="", help="semicolon-separated avoid set")
        p.add_argument("--exactly-once", default="", dest="exactly_once",
                       help="patterns required exactly once")
        p.add_argument("--at-least-once", default="", dest="at_least_once",
                       help="patterns required at least once")
        p.add_argument("--implicit-132", action="store_true", dest="implicit_132",
                       help="adjoin 132 to the avoid set (engine semantics)")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--max-n", type=int, default=None, dest="max_n",
                       help="override the census feasibility bound")
        if with_n:
            p.add_argument("--n", type=int, required=True)
        else:
            p.add_argument("--order", type=int, default=10)
        p.add_argument("--json", action="store_true")

    p_count = sub.add_parser("count", help="exhaustive census count at one length")
    add_query_flags(p_count, with_n=True)

    p_series = sub.add_parser("series", help="census counts for lengths 0..order")
    add_query_flags(p_series, with_n=False)

    p_gf = sub.add_parser("gf", help="closed forms and recurrence-engine results")
    p_gf.add_argument("source", choices=["catalog:ulk", "catalog:ulk-once",
                                         "catalog:u2k-both", "recurrence"])
    p_gf.add_argument("--k", type=int)
    p_gf.add_argument("--l", type=int)
    p_gf.add_argument("--t", help="distinguished pattern for catalog:ulk-once")
    p_gf.add_argument("--avoid", default="")
    p_gf.add_argument("--exactly-once", default="", dest="exactly_once")
    p_gf.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run self-verification suites")
    p_verify.add_argument("--suite", required=True, choices=list(SUITE_NAMES) + ["all"])
    p_verify.add_argument("--order", type=int, default=16)
    p_verify.add_argument("--max-n", type=int, default=9, dest="max_n")
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--out", help="also write the JSON report to a file")

    p_table = sub.add_parser("table", help="series tables for the closed-form families")
    p_table.add_argument("--family", required=True,
                         choices=["ulk", "ulk-once", "u2k-both"])
    p_table.add_argument("--k", type=int, required=True)
    p_table.add_argument("--k-max", type=int, default=None, dest="k_max")
    p_table.add_argument("--l", type=int)
    p_table.add_argument("--order", type=int, default=10)
    p_table.add_argument("--json", action="store_true")
    return parser


def _parse_query(args) -> PatternQuery:
    query = PatternQuery(
        avoid=parse_pattern_set(args.avoid),
        exactly_once=parse_pattern_set(args.exactly_once),
        at_least_once=parse_pattern_set(args.at_least_once),
    )
    if args.implicit_132:
        query = query.with_implicit(PATTERN_132)
    return query


def _rf_json(f: RatFunc) -> str:
    return json.dumps(f.to_json_dict())


def _cmd_count(args) -> int:
    query = _parse_query(args)
    value = census(query, args.n, bound=args.max_n, workers=args.workers)
    print(json.dumps({"count": str(value)}) if args.json else value)
    return EXIT_OK


def _cmd_series(args) -> int:
    query = _parse_query(args)
    values = census_series(query, args.order, bound=args.max_n, workers=args.workers)
    if args.json:
        print(json.dumps({"coefficients": [str(v) for v in values]}))
    else:
        print(",".join(str(v) for v in values))
    return EXIT_OK


def _need(args, *names) -> list:
    out = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ParseError(f"--{name} is required for this source")
        out.append(value)
    return out


def _cmd_gf(args) -> int:
    if args.source == "catalog:ulk":
        k, l = _need(args, "k", "l")
        result = GfResult(ulk_avoid_gf(k, l), "catalog")
    elif args.source == "catalog:ulk-once":
        k, l = _need(args, "k", "l")
        t = parse_pattern(args.t) if args.t else None
        result = GfResult(ulk_exact_once_gf(k, l, t), "catalog")
    elif args.source == "catalog:u2k-both":
        (k,) = _need(args, "k")
        result = GfResult(u2k_both_once_gf(k), "catalog")
    else:
        avoid = parse_pattern_set(args.avoid)
        once = parse_pattern_set(args.exactly_once)
        value = avoid_contain_gf(avoid, once) if once else avoid_set_gf(avoid)
        result = GfResult(value, "recurrence")
    if args.json:
        payload = result.value.to_json_dict()
        payload["provenance"] = result.provenance
        print(json.dumps(payload))
    else:
        print(result.value.render())
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_suites([args.suite], order=args.order, max_n=args.max_n,
                        workers=args.workers)
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args.json:
        print(text)
    else:
        for suite, checks in report["suites"].items():
            for check in checks:
                line = f"[{check['status'].upper():4}] {suite}: {check['name']}"
                print(line)
                if check["status"] != "pass":
                    print(f"       expected: {check['expected']}")
                    print(f"       actual:   {check['actual']}")
                if check.get("note"):
                    print(f"       note: {check['note']}")
        print("all checks passed" if report["passed"] else "some checks FAILED")
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


def _cmd_table(args) -> int:
    k_last = args.k_max if args.k_max is not None else args.k
    rows = []
    for k in range(args.k, k_last + 1):
        if args.family == "ulk":
            (l,) = _need(args, "l")
            f = ulk_avoid_gf(k, l)
            params = {"k": k, "l": l}
        elif args.family == "ulk-once":
            (l,) = _need(args, "l")
            f = ulk_exact_once_gf(k, l)
            params = {"k": k, "l": l}
        else:
            f = u2k_both_once_gf(k)
            params = {"k": k}
        coeffs = f.series(args.order).as_ints()
        rows.append({"params": params, "coefficients": [str(c) for c in coeffs]})
    if args.json:
        print(json.dumps({"family": args.family, "rows": rows}))
    else:
        for row in rows:
            label = ",".join(f"{key}={val}" for key, val in row["params"].items())
            print(f"{label}: " + ",".join(row["coefficients"]))
    return EXIT_OK


_DISPATCH = {
    "count": _cmd_count,
    "series": _cmd_series,
    "gf": _cmd_gf,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _DISPATCH[args.verb](args)
    except LengthTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PatgfError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
