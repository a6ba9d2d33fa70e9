"""Compare engine splitting types with PARI's prime decomposition.

Requires the optional ``cypari`` package.  Usage:

    python scripts/pari_crosscheck.py --a-min -64 --a-max 64 --b-min -64 --b-max 64 --primes 2,3,5,7
"""

import argparse
import sys

from cypari import pari

from septic_index.errors import DegenerateFactor
from septic_index.exact import Trinomial, normalize
from septic_index.splitter import splitting_type


def pari_splitting(a: int, b: int, p: int):
    # an order maximal at p is enough for the decomposition of p
    nf = pari.nfinit([pari(f"x^7+({a})*x+({b})"), [p]])
    return sorted((int(pr[2]), int(pr[3])) for pr in pari.idealprimedec(nf, p))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a-min", type=int, default=-32)
    ap.add_argument("--a-max", type=int, default=32)
    ap.add_argument("--b-min", type=int, default=-32)
    ap.add_argument("--b-max", type=int, default=32)
    ap.add_argument("--primes", default="2,3,5,7")
    args = ap.parse_args(argv)
    primes = [int(x) for x in args.primes.split(",")]
    pari.allocatemem(2 * 10**9)
    checked = mismatches = 0
    for a in range(args.a_min, args.a_max + 1):
        for b in range(args.b_min, args.b_max + 1):
            t = Trinomial(a, b)
            if b == 0 or t.D == 0:
                continue
            if not pari.polisirreducible(pari(f"x^7+({a})*x+({b})")):
                continue
            t = normalize(t)
            for p in primes:
                try:
                    mine = sorted(splitting_type(t, p).factors)
                except DegenerateFactor:
                    print(f"({a},{b}) p={p}: unexpected DegenerateFactor")
                    mismatches += 1
                    continue
                except Exception as exc:  # noqa: BLE001 - report and continue
                    print(f"({a},{b}) p={p}: {type(exc).__name__}: {exc}")
                    mismatches += 1
                    continue
                ref = sorted(pari_splitting(t.a, t.b, p))
                checked += 1
                if mine != ref:
                    mismatches += 1
                    print(f"({a},{b}) p={p}: engine {mine} pari {ref}")
    print(f"checked {checked} (pair, prime) cases, {mismatches} mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
