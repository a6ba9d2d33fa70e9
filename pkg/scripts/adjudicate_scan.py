"""Run the engine-vs-theorem scan and print one example per discrepancy class.

    python scripts/adjudicate_scan.py --a-max 255 --b-max 255 --primes 2,3
"""

import argparse
import json
import sys
from collections import defaultdict

from septic_index.scan import ScanConfig, default_allowlist, run_scan


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--a-min", type=int, default=0)
    ap.add_argument("--a-max", type=int, default=127)
    ap.add_argument("--b-min", type=int, default=0)
    ap.add_argument("--b-max", type=int, default=127)
    ap.add_argument("--primes", default="2,3")
    ap.add_argument("--examples", type=int, default=3, help="sample pairs shown per class")
    args = ap.parse_args(argv)
    primes = tuple(int(x) for x in args.primes.split(","))
    result = run_scan(ScanConfig(args.a_min, args.a_max, args.b_min, args.b_max, primes))
    allowed = set(default_allowlist())
    samples = defaultdict(list)
    for rec in result.records:
        if rec["status"] != "ok":
            continue
        for p, entry in rec["primes"].items():
            cls = entry.get("class")
            if cls and len(samples[cls]) < args.examples:
                who = "engine only" if entry["engine"] else "theorem only"
                samples[cls].append(f"({rec['a']},{rec['b']}) p={p} {who} {entry['splitting']}")
    for cls, n in sorted(result.class_counts.items()):
        flag = "allowlisted" if cls in allowed else "NEW"
        print(f"{cls:<14} {n:>6}  {flag}")
        for line in samples.get(cls, []):
            print(f"    {line}")
    print(json.dumps({"skipped": dict(result.skipped), "unresolved": result.unresolved}))
    return 1 if result.new_classes(allowed) else 0


if __name__ == "__main__":
    sys.exit(main())
