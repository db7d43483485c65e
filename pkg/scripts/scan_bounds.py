#!/usr/bin/env python3
"""Sweep witness construction over a range of n and tabulate how the edge
and vertex counts compare with the (n+7)/3 and (n+13)/4 families of bounds.

Writes one CSV row per n and prints the violation summary. Useful for
eyeballing which construction family wins where, e.g.

    python scripts/scan_bounds.py 3 2000 --out bounds.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import Counter

from treeforge.minimal_builder import build_witness, check_bounds


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("lo", type=int, nargs="?", default=3)
    ap.add_argument("hi", type=int, nargs="?", default=10000)
    ap.add_argument("--out", default=None, help="CSV path (default stdout)")
    args = ap.parse_args()

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    writer = csv.writer(out)
    writer.writerow(
        ["n", "edges", "vertices", "strategy", "third", "quarter", "exception"]
    )
    strategies = Counter()
    third_violations = []
    for n in range(args.lo, args.hi + 1):
        w = build_witness(n)
        r = check_bounds(n, w)
        strategies[w.strategy.value] += 1
        if not r.bound_third:
            third_violations.append(n)
        writer.writerow(
            [
                n,
                w.edges,
                w.vertices,
                w.strategy.value,
                int(r.bound_third),
                int(r.bound_quarter),
                r.exception_class.value,
            ]
        )
    if args.out:
        out.close()
    print(f"strategies used: {dict(strategies)}", file=sys.stderr)
    print(f"(n+7)/3 edge violations: {third_violations}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
