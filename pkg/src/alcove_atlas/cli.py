"""Command line interface.

Examples:

    alcove-atlas alcoves --r 2 --i 2 --d 3 --strategy pairs
    alcove-atlas label --r 3 --i 1 --d 3 --map word1 --roundtrip
    alcove-atlas dual-graph --r 2 --i 1 --d 3 --format dot --out graph.dot
    alcove-atlas dual-graph --r 1 --i 2 --d 4 --abstract --format dot
    alcove-atlas verify --rmax 4 --dmax 5 --jobs 2
    alcove-atlas conjecture --r 2 --i 2 --d 3 --scheme both

Exit codes: 0 success (checks pass, conjecture holds); 1 a verification
or roundtrip failed; 2 usage, parameter, or size-limit error; 3 the
conjecture search was inconclusive within budget. The environment
variable ALCOVE_ATLAS_JOBS sets the default worker count for ``verify``.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .alcoves import (
    HypersimplexSpec,
    enumerate_dilated_alcoves,
    write_alcoves,
)
from .dual_graphs import (
    base_cell_graph,
    check_conjecture,
    conjecture_connectors,
    dual_graph_from_alcoves,
    graph_compose,
    permutation_graph,
    word_graph,
)
from .errors import AtlasError, ParameterError
from .identities import verify_grid
from .labelings import (
    alcove_from_pair,
    alcove_from_sigma,
    comp,
    pair_label,
    sigma_label,
    word1,
    word1_inverse,
    words_label,
    words_label_inverse,
)
from .serial import SCHEMA_VERSION, jsonify, label_text

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

DEFAULT_LIMIT = 10**6


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as handle:
            yield handle


def _spec_from_args(args) -> HypersimplexSpec:
    return HypersimplexSpec(args.r, args.i, args.d)


def _add_polytope_flags(parser, include_strategy=False):
    parser.add_argument("--r", type=int, required=True, help="dilation factor")
    parser.add_argument("--i", type=int, required=True, help="hypersimplex index")
    parser.add_argument("--d", type=int, required=True, help="dimension parameter")
    parser.add_argument(
        "--limit",
        type=int,
        default=DEFAULT_LIMIT,
        help=f"refuse predicted alcove counts above this (default {DEFAULT_LIMIT})",
    )
    if include_strategy:
        parser.add_argument(
            "--strategy",
            choices=("words", "pairs", "brute"),
            default="words",
            help="enumeration strategy (default words)",
        )


def cmd_alcoves(args) -> int:
    spec = _spec_from_args(args)
    alcoves = enumerate_dilated_alcoves(spec, args.strategy, limit=args.limit)
    with _output(args.out) as out:
        if args.format == "jsonl":
            write_alcoves(out, alcoves, spec, args.strategy)
        elif args.format == "json":
            doc = {
                "schema_version": SCHEMA_VERSION,
                "polytope": spec.to_json(),
                "strategy": args.strategy,
                "count": len(alcoves),
                "alcoves": [jsonify(list(a)) for a in alcoves],
            }
            json.dump(doc, out, indent=2)
            out.write("\n")
        else:
            out.write(
                f"# {len(alcoves)} alcoves of the {spec.r}-dilated "
                f"({spec.i}, {spec.d}) hypersimplex\n"
            )
            for alcove in alcoves:
                out.write(" ".join(label_text(p) for p in alcove) + "\n")
    return EXIT_OK


def _label_word1(alcove, spec):
    return word1(alcove, spec)


def _label_words(alcove, spec):
    return words_label(alcove, spec)


_LABEL_MAPS = {
    "word1": (word1, lambda label, spec: word1_inverse(label, spec)),
    "comp": (comp, None),
    "sigma": (sigma_label, "r1"),
    "pair": (
        pair_label,
        lambda label, spec: alcove_from_pair(label[0], label[1], spec),
    ),
    "words": (
        words_label,
        lambda label, spec: words_label_inverse(label[0], label[1], spec),
    ),
}


def cmd_label(args) -> int:
    spec = _spec_from_args(args)
    forward, inverse = _LABEL_MAPS[args.map]
    if args.map == "word1" and spec.i != 1:
        print("error: --map word1 requires --i 1", file=sys.stderr)
        return EXIT_USAGE
    if inverse == "r1":
        inverse = (
            (lambda label, spec: alcove_from_sigma(label))
            if spec.r == 1
            else None
        )
    if args.roundtrip and inverse is None:
        print(
            f"error: --map {args.map} has no inverse at r={spec.r}; "
            "--roundtrip is unsupported",
            file=sys.stderr,
        )
        return EXIT_USAGE
    alcoves = enumerate_dilated_alcoves(spec, args.strategy, limit=args.limit)
    records = []
    failures = 0
    for alcove in alcoves:
        label = forward(alcove, spec)
        ok = None
        if args.roundtrip:
            ok = inverse(label, spec) == alcove
            failures += 0 if ok else 1
        records.append((alcove, label, ok))
    with _output(args.out) as out:
        if args.format == "jsonl":
            manifest = {
                "schema_version": SCHEMA_VERSION,
                "kind": "manifest",
                "polytope": spec.to_json(),
                "map": args.map,
                "count": len(records),
                "roundtrip_failures": failures if args.roundtrip else None,
            }
            out.write(json.dumps(manifest) + "\n")
            for alcove, label, ok in records:
                line = {
                    "kind": "label",
                    "vertices": jsonify(list(alcove)),
                    "label": jsonify(label),
                }
                if ok is not None:
                    line["roundtrip_ok"] = ok
                out.write(json.dumps(line) + "\n")
        elif args.format == "json":
            doc = {
                "schema_version": SCHEMA_VERSION,
                "polytope": spec.to_json(),
                "map": args.map,
                "count": len(records),
                "roundtrip_failures": failures if args.roundtrip else None,
                "records": [
                    {
                        "vertices": jsonify(list(alcove)),
                        "label": jsonify(label),
                        **({"roundtrip_ok": ok} if ok is not None else {}),
                    }
                    for alcove, label, ok in records
                ],
            }
            json.dump(doc, out, indent=2)
            out.write("\n")
        else:
            for alcove, label, ok in records:
                suffix = "" if ok is None else ("  ok" if ok else "  FAIL")
                out.write(
                    f"{label_text(label)}\t"
                    + " ".join(label_text(p) for p in alcove)
                    + suffix
                    + "\n"
                )
            if args.roundtrip:
                out.write(
                    f"# roundtrip: {len(records) - failures}/{len(records)} ok\n"
                )
    return EXIT_FAIL if failures else EXIT_OK


def cmd_dual_graph(args) -> int:
    spec = _spec_from_args(args)
    if args.abstract:
        if spec.i == 1:
            graph = word_graph(spec.r, spec.d)
        elif spec.r == 1:
            graph = permutation_graph(spec.i, spec.d)
        else:
            graph = graph_compose(
                base_cell_graph(spec.i, spec.d),
                word_graph(spec.r, spec.d),
                conjecture_connectors(spec, "facet"),
            )
    else:
        alcoves = enumerate_dilated_alcoves(spec, "pairs", limit=args.limit)
        graph = dual_graph_from_alcoves(alcoves, spec)
    with _output(args.out) as out:
        if args.format == "dot":
            out.write(graph.to_dot() + "\n")
        elif args.format == "json":
            json.dump(graph.to_json(), out, indent=2)
            out.write("\n")
        else:
            out.write(f"# {graph.order} vertices, {graph.size} edges\n")
            for u, v, color in graph.edges:
                out.write(
                    f"{label_text(u)} -- {label_text(v)}"
                    f"  [{label_text(color) if isinstance(color, tuple) else color}]\n"
                )
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = verify_grid(args.rmax, args.dmax, args.jobs)
    passed = all(report.passed for report in reports)
    with _output(args.out) as out:
        if args.format == "json":
            doc = {
                "schema_version": SCHEMA_VERSION,
                "rmax": args.rmax,
                "dmax": args.dmax,
                "passed": passed,
                "reports": [report.to_json() for report in reports],
            }
            json.dump(doc, out, indent=2)
            out.write("\n")
        else:
            for report in reports:
                out.write(report.to_text() + "\n")
            out.write("all passed\n" if passed else "FAILURES above\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_conjecture(args) -> int:
    spec = _spec_from_args(args)
    schemes = ("facet", "color") if args.scheme == "both" else (args.scheme,)
    reports = [
        check_conjecture(
            spec,
            scheme,
            assignment_budget=args.budget,
            limit=args.limit,
        )
        for scheme in schemes
    ]
    with _output(args.out) as out:
        if args.format == "json":
            doc = {
                "schema_version": SCHEMA_VERSION,
                "reports": [report.to_json() for report in reports],
            }
            json.dump(doc, out, indent=2)
            out.write("\n")
        else:
            for report in reports:
                out.write(report.to_text() + "\n")
    if any(report.holds for report in reports):
        return EXIT_OK
    if any(report.verdict == "inconclusive" for report in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alcove-atlas",
        description=(
            "Enumerate, label, and compare alcoved triangulations of "
            "dilated hypersimplices."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_alcoves = sub.add_parser(
        "alcoves", help="enumerate the alcoves of a dilated hypersimplex"
    )
    _add_polytope_flags(p_alcoves, include_strategy=True)
    p_alcoves.add_argument(
        "--format", choices=("jsonl", "json", "text"), default="jsonl"
    )
    p_alcoves.add_argument("--out", help="output path (default stdout)")
    p_alcoves.set_defaults(func=cmd_alcoves)

    p_label = sub.add_parser(
        "label", help="compute a labeling of every alcove"
    )
    _add_polytope_flags(p_label, include_strategy=True)
    p_label.add_argument(
        "--map",
        choices=sorted(_LABEL_MAPS),
        required=True,
        help="which labeling to apply",
    )
    p_label.add_argument(
        "--roundtrip",
        action="store_true",
        help="verify label -> inverse -> alcove on every alcove",
    )
    p_label.add_argument(
        "--format", choices=("jsonl", "json", "text"), default="jsonl"
    )
    p_label.add_argument("--out", help="output path (default stdout)")
    p_label.set_defaults(func=cmd_label)

    p_graph = sub.add_parser(
        "dual-graph", help="emit the dual graph or its combinatorial model"
    )
    _add_polytope_flags(p_graph)
    p_graph.add_argument(
        "--abstract",
        action="store_true",
        help="emit the combinatorial model instead of the geometric graph",
    )
    p_graph.add_argument(
        "--format", choices=("dot", "json", "text"), default="text"
    )
    p_graph.add_argument("--out", help="output path (default stdout)")
    p_graph.set_defaults(func=cmd_dual_graph)

    p_verify = sub.add_parser(
        "verify", help="verify the alcove-count identities on a grid"
    )
    p_verify.add_argument("--rmax", type=int, default=4)
    p_verify.add_argument("--dmax", type=int, default=5)
    p_verify.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes (default: ALCOVE_ATLAS_JOBS or 1)",
    )
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out", help="output path (default stdout)")
    p_verify.set_defaults(func=cmd_verify)

    p_conj = sub.add_parser(
        "conjecture",
        help="compare the composed dual-graph model with the true dual graph",
    )
    _add_polytope_flags(p_conj)
    p_conj.add_argument(
        "--scheme", choices=("facet", "color", "both"), default="both"
    )
    p_conj.add_argument(
        "--budget",
        type=int,
        default=4096,
        help="max color-to-wall assignments to try (default 4096)",
    )
    p_conj.add_argument("--format", choices=("text", "json"), default="text")
    p_conj.add_argument("--out", help="output path (default stdout)")
    p_conj.set_defaults(func=cmd_conjecture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AtlasError as exc:
        print(f"error ({exc.code}): {exc}", file=sys.stderr)
        # Bad input or size guard -> usage; broken internal invariant -> failure.
        return EXIT_USAGE if type(exc) is not AtlasError else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
