#!/usr/bin/env python3
"""Scan the dual-graph composition conjecture over small parameters.

For every polytope in the grid, runs the facet-matched wiring and the
per-color-wall wiring and prints both verdicts. Verdicts are recorded
observations, not proofs.

Example:
    python scripts/conjecture_scan.py --rmax 2 --dmax 4
"""

import argparse
import sys
import time

from alcove_atlas import HypersimplexSpec, check_conjecture


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rmax", type=int, default=2)
    parser.add_argument("--dmax", type=int, default=4)
    parser.add_argument("--budget", type=int, default=256)
    parser.add_argument(
        "--limit",
        type=int,
        default=5000,
        help="skip polytopes with more alcoves than this",
    )
    args = parser.parse_args()

    for r in range(2, args.rmax + 1):
        for d in range(2, args.dmax + 1):
            for i in range(1, d + 1):
                spec = HypersimplexSpec(r, i, d)
                if spec.expected_alcove_count > args.limit:
                    print(f"r={r} i={i} d={d}: skipped "
                          f"({spec.expected_alcove_count} alcoves)")
                    continue
                start = time.perf_counter()
                facet = check_conjecture(spec, "facet")
                color = check_conjecture(
                    spec, "color", assignment_budget=args.budget
                )
                elapsed = time.perf_counter() - start
                assignment = ""
                if color.color_assignment:
                    assignment = " walls=" + ",".join(
                        f"{c}->{w}" for c, w in color.color_assignment
                    )
                print(
                    f"r={r} i={i} d={d}: facet={facet.verdict} "
                    f"color={color.verdict} "
                    f"ones-cycle={color.base_subgraph_matches}"
                    f"{assignment} ({elapsed:.1f}s)"
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
