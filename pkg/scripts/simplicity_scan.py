#!/usr/bin/env python3
"""Compare the factorization test for simplicity with an exhaustive lattice scan.

For each n in the range: every sublattice is simple (decomposes by
crossing and nesting alone, i.e. its poset has no induced N) exactly when
n is p^e, p^e*q, or a product of three distinct primes.  Prints one line
per n and the first non-simple lattice found, if any.

Example:
    python3 scripts/simplicity_scan.py 2 100
"""
import argparse
import sys

from ratcirc import is_simple_lattice, simple_reduction_applies, sublattices


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("lo", type=int)
    ap.add_argument("hi", type=int)
    args = ap.parse_args()

    disagreements = 0
    for n in range(args.lo, args.hi + 1):
        witness = None
        for lat in sublattices(n):
            verdict = is_simple_lattice(lat)
            if not verdict.is_simple:
                witness = (lat, verdict.certificate)
                break
        predicted = simple_reduction_applies(n)
        actual = witness is None
        mark = "ok" if predicted == actual else "DISAGREE"
        if predicted != actual:
            disagreements += 1
        line = f"n={n:3d} simple={str(actual):5s} predicted={str(predicted):5s} {mark}"
        if witness is not None:
            lat, quad = witness
            line += f"  witness={{{','.join(map(str, lat.elements))}}} N at nodes {tuple(q + 1 for q in quad)}"
        print(line)
    print("no disagreements" if not disagreements else f"{disagreements} DISAGREEMENTS")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
