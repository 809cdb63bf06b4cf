#!/usr/bin/env python3
"""Export the dual graph of a dilated hypersimplex and its models to DOT.

Writes three files into --out-dir: the geometric dual graph, the
combinatorial model (word graph, permutation graph, or composition,
depending on the parameters), and a JSON dump of the geometric graph.

Example:
    python scripts/export_graphs.py --r 2 --i 2 --d 3 --out-dir graphs/
"""

import argparse
import json
import pathlib
import sys

from alcove_atlas import (
    HypersimplexSpec,
    base_cell_graph,
    conjecture_connectors,
    dual_graph,
    graph_compose,
    permutation_graph,
    word_graph,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, required=True)
    parser.add_argument("--i", type=int, required=True)
    parser.add_argument("--d", type=int, required=True)
    parser.add_argument("--out-dir", default=".")
    args = parser.parse_args()

    spec = HypersimplexSpec(args.r, args.i, args.d)
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"r{spec.r}_i{spec.i}_d{spec.d}"

    geometric = dual_graph(spec)
    if spec.i == 1:
        model = word_graph(spec.r, spec.d)
    elif spec.r == 1:
        model = permutation_graph(spec.i, spec.d)
    else:
        model = graph_compose(
            base_cell_graph(spec.i, spec.d),
            word_graph(spec.r, spec.d),
            conjecture_connectors(spec, "facet"),
        )

    (out / f"dual_{stem}.dot").write_text(geometric.to_dot(f"dual_{stem}"))
    (out / f"model_{stem}.dot").write_text(model.to_dot(f"model_{stem}"))
    (out / f"dual_{stem}.json").write_text(
        json.dumps(geometric.to_json(), indent=2)
    )
    print(
        f"wrote dual_{stem}.dot, model_{stem}.dot, dual_{stem}.json to {out}"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
