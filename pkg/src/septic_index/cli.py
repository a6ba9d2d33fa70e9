"""Command-line entry point: ``classify``, ``split``, ``scan`` and ``selftest``.

Exit codes: 0 ok (or every discrepancy allowlisted), 1 new discrepancy class,
2 invalid input or I/O failure, 3 unresolved escalation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import DegenerateFactor, DegenerateInput, SepticIndexError, Unresolved
from .exact import Trinomial, is_prime, normalize
from .report import REDUCIBLE, build_report, certify_irreducible
from .scan import ScanConfig, load_allowlist, run_scan, write_jsonl
from .selftest import run_selftest
from .splitter import engstrom_criterion, splitting_type

EXIT_OK, EXIT_NEW, EXIT_INPUT, EXIT_UNRESOLVED = 0, 1, 2, 3


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_classify(args) -> int:
    t = Trinomial(args.a, args.b)
    if args.b != 0 and t.D != 0:
        cert = certify_irreducible(normalize(t))
        if cert.status == REDUCIBLE:
            raise DegenerateInput(f"f is reducible ({cert.detail}); K is not a field of degree 7")
    report = build_report(args.a, args.b)
    print(report.to_json(with_trace=args.trace) if args.json else report.to_text())
    return EXIT_OK


def cmd_split(args) -> int:
    if not is_prime(args.p):
        raise DegenerateInput(f"{args.p} is not prime")
    t0 = Trinomial(args.a, args.b)
    if t0.b == 0:
        raise DegenerateInput("b = 0: x divides f")
    if t0.D == 0:
        raise DegenerateInput("discriminant is zero")
    t = normalize(t0)
    s = splitting_type(t, args.p)
    cid = engstrom_criterion(s, args.p)
    if args.json:
        doc = {
            "input": {"a": args.a, "b": args.b},
            "normalized": {"a": t.a, "b": t.b},
            "p": args.p,
            "splitting": [list(ef) for ef in s.factors],
            "common_index_divisor": cid,
        }
        if args.trace:
            doc["trace"] = list(s.trace)
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(f"p={args.p}: {s}")
        print(f"{args.p} {'divides' if cid else 'does not divide'} i(K)")
        if args.trace:
            print(json.dumps(list(s.trace), sort_keys=True, indent=2))
    return EXIT_OK


def cmd_scan(args) -> int:
    primes = tuple(int(x) for x in args.primes.split(",") if x.strip())
    cfg = ScanConfig(args.a_min, args.a_max, args.b_min, args.b_max, primes, args.workers)
    try:
        allowlist = load_allowlist(args.allowlist)
    except (OSError, ValueError, KeyError) as exc:
        _err(f"cannot read allowlist: {exc}")
        return EXIT_INPUT
    start = time.perf_counter()
    result = run_scan(cfg)
    elapsed = time.perf_counter() - start
    try:
        if args.out:
            with open(args.out, "w") as fh:
                write_jsonl(result.records, fh)
        else:
            write_jsonl(result.records, sys.stdout)
    except OSError as exc:
        _err(f"cannot write report: {exc}")
        return EXIT_INPUT
    new = result.new_classes(allowlist)
    summary = {
        "pairs": len(result.records),
        "skipped": dict(sorted(result.skipped.items())),
        "discrepancy_classes": dict(sorted(result.class_counts.items())),
        "new_classes": new,
        "unresolved": len(result.unresolved),
        "seconds": round(elapsed, 2),
    }
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    if result.unresolved:
        return EXIT_UNRESOLVED
    return EXIT_NEW if new else EXIT_OK


def cmd_selftest(args) -> int:
    return run_selftest()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="septic-index", description="Common index divisors of x^7 + ax + b.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="engine and congruence verdicts for p = 2, 3, 5")
    c.add_argument("--a", type=int, required=True)
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.add_argument("--trace", action="store_true", help="include polygon traces in JSON output")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("split", help="splitting type of p")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--trace", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_split)

    g = sub.add_parser("scan", help="compare both classifiers over a grid")
    g.add_argument("--a-min", type=int, required=True)
    g.add_argument("--a-max", type=int, required=True)
    g.add_argument("--b-min", type=int, required=True)
    g.add_argument("--b-max", type=int, required=True)
    g.add_argument("--primes", default="2,3")
    g.add_argument("--allowlist", default=None)
    g.add_argument("--out", default=None)
    g.add_argument("--workers", type=int, default=0, help="worker processes (0 = all cores)")
    g.set_defaults(func=cmd_scan)

    t = sub.add_parser("selftest", help="run the fixture table")
    t.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except Unresolved as exc:
        _err(f"unresolved at p={exc.p}: {exc}")
        return EXIT_UNRESOLVED
    except (DegenerateInput, DegenerateFactor) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except SepticIndexError as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
