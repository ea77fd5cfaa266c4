#!/usr/bin/env python3
"""Sweep the whole claim catalog for counterexamples over small trees.

For each catalog entry, exhaustively evaluates every isomorphism class of
trees with 2 <= n <= --nmax and reports how many probative failures exist,
plus the smallest witness for each failing claim.  Optionally dumps the
full counterexample set as JSON.

Usage:
    python scripts/falsification_campaign.py [--nmax 9] [--json PATH]
"""

import argparse
import json
import sys
import time

from sigmairr.bounds import BOUND_IDS
from sigmairr.search import ExhaustiveMode, falsify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, default=9)
    parser.add_argument("--json", metavar="PATH", help="write all counterexamples as JSON")
    args = parser.parse_args()

    everything = {}
    print(f"exhaustive falsification over all trees with 2 <= n <= {args.nmax}")
    for bound_id in BOUND_IDS:
        start = time.perf_counter()
        found = falsify(bound_id, ExhaustiveMode(args.nmax))
        elapsed = time.perf_counter() - start
        everything[bound_id] = [c.to_json_dict() for c in found]
        if not found:
            print(f"  {bound_id:5s}: no counterexamples ({elapsed:.1f}s)")
            continue
        smallest = min(found, key=lambda c: c.graph.vertex_count)
        orders = sorted({c.graph.vertex_count for c in found})
        print(
            f"  {bound_id:5s}: {len(found):5d} counterexamples, orders {orders[0]}..{orders[-1]}, "
            f"smallest witness n={smallest.graph.vertex_count} "
            f"lhs={smallest.report.lhs} {smallest.report.relation} rhs={smallest.report.rhs} "
            f"({elapsed:.1f}s)"
        )
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(everything, fh, sort_keys=True, indent=2)
        print(f"wrote {args.json}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
