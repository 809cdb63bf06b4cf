#!/usr/bin/env python3
"""Sweep the alcove-count identities over a parameter grid.

Example:
    python scripts/identity_sweep.py --rmax 5 --dmax 6 --jobs 4
"""

import argparse
import json
import sys
import time

from alcove_atlas import verify_grid


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rmax", type=int, default=5)
    parser.add_argument("--dmax", type=int, default=6)
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument("--json", action="store_true", help="emit JSON")
    args = parser.parse_args()

    start = time.perf_counter()
    reports = verify_grid(args.rmax, args.dmax, args.jobs)
    elapsed = time.perf_counter() - start
    if args.json:
        json.dump(
            {
                "rmax": args.rmax,
                "dmax": args.dmax,
                "elapsed_seconds": elapsed,
                "passed": all(rep.passed for rep in reports),
                "reports": [rep.to_json() for rep in reports],
            },
            sys.stdout,
            indent=2,
        )
        print()
    else:
        for rep in reports:
            print(rep.to_text())
        print(f"checked {len(reports)} cells in {elapsed:.2f} s")
    return 0 if all(rep.passed for rep in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
