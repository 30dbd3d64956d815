#!/usr/bin/env python3
"""Cross-check the rank formula against the class-counting oracle.

Runs the full pipeline (pair search, classification, rank formula) over
every catalog group up to a given order and reports any disagreement.
"""

import argparse
import time

from zgcentral.catalog import catalog
from zgcentral.rank import rank_total
from zgcentral.shoda import complete_irredundant_set


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=100)
    args = ap.parse_args()

    failures = 0
    start = time.monotonic()
    for entry in catalog():
        G = entry.constructor()
        if G.order > args.max_order:
            continue
        t0 = time.monotonic()
        pairs, complete = complete_irredundant_set(G)
        if not complete:
            print(f"{entry.name:>14}  INCOMPLETE pair set")
            failures += 1
            continue
        report = rank_total(G, pairs, complete=True)
        mark = "ok" if report.agree else "MISMATCH"
        if not report.agree:
            failures += 1
        print(
            f"{entry.name:>14}  order {G.order:>4}  pairs {len(pairs):>3}  "
            f"rank {report.total:>3}  oracle {report.oracle_total:>3}  "
            f"{mark}  ({time.monotonic() - t0:.2f}s)"
        )
    print(f"done in {time.monotonic() - start:.1f}s, {failures} failure(s)")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
