#!/usr/bin/env python3
"""Cross-validate the constructive pipeline against brute force over a range of n.

For every n in the range and every divisor subset, computes the group
order twice (closed formula vs. backtracking search) and reports any
mismatch.  Writes the full per-instance JSON report when --out is given.

Example:
    python3 scripts/full_verify.py 2 20 --out verify_report.json
"""
import argparse
import json
import sys
import time

from ratcirc import full_verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("lo", type=int, help="first modulus (inclusive)")
    ap.add_argument("hi", type=int, help="last modulus (inclusive)")
    ap.add_argument("--max-oracle-n", type=int, default=40)
    ap.add_argument("--out", help="path for the JSON report")
    args = ap.parse_args()

    reports = []
    bad = 0
    t0 = time.perf_counter()
    for n in range(args.lo, args.hi + 1):
        rep = full_verify(n, max_oracle_n=args.max_oracle_n)
        reports.append(rep.to_json_dict())
        verified = sum(1 for r in rep.records if r.match is True)
        failed = sum(1 for r in rep.records if r.match is False)
        bad += failed
        mode = "pipeline-only" if verified + failed == 0 else f"{verified} verified"
        print(f"n={n:3d}: {len(rep.records):4d} rational circulants, {mode}"
              + (f", {failed} MISMATCHES" if failed else ""))
    print(f"total {time.perf_counter() - t0:.1f}s")

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(reports, fh, indent=2, sort_keys=True)
        print(f"wrote {args.out}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
