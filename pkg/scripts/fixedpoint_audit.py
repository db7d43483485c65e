#!/usr/bin/env python3
"""Produce the full audit transcript for a fixed-point proof.

Runs the skeleton-subdivision verifier for one n (default 22, the largest
fixed point) and dumps the JSON transcript: every skeleton topology
examined per cyclomatic level, its minimal subdivision count, the sweep
statistics, and the level at which the search provably stops.

    python scripts/fixedpoint_audit.py 22 --out audit22.json
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from treeforge.search_oracle import verify_no_smaller_graph


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, nargs="?", default=22)
    ap.add_argument("--budget", type=int, default=None, help="vertex budget (default n)")
    ap.add_argument("--out", default=None, help="JSON path (default stdout)")
    args = ap.parse_args()

    budget = args.budget if args.budget is not None else args.n
    t0 = time.perf_counter()
    report = verify_no_smaller_graph(args.n, budget)
    elapsed = time.perf_counter() - t0

    doc = report.to_dict()
    doc["elapsed_seconds"] = round(elapsed, 3)
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    verdict = "proved" if report.proved else "REFUTED"
    print(
        f"{verdict}: no simple graph on < {budget} vertices has {args.n} "
        f"spanning trees ({elapsed:.2f}s)",
        file=sys.stderr,
    )
    return 0 if report.proved else 1


if __name__ == "__main__":
    sys.exit(main())
