"""Alcoved triangulations of dilated hypersimplices.

The polytope of interest is the r-th dilate of the hypersimplex with
parameters (i, d): all points of [0, r]^(d+1) whose coordinates sum to
i * r. Its alcoved triangulation cuts it along the hyperplanes
x_{a+1} + ... + x_b = k into unimodular simplices (alcoves). An alcove is
recorded by its d + 1 vertices, and the central structural fact driving
everything here is: a set of d + 1 distinct lattice points of the polytope
spans an alcove exactly when its multiset collection is sorted (see
``sorted_collections``).

Vertices are plain int tuples of length d + 1. An alcove is a tuple of
vertices in canonical order: sorted by their multiset rows, which matches
the row order of the decorated matrix. The number of alcoves is
r^d * A(d, i) with A the descent-refined permutation count.

Three independent enumeration strategies are provided and are expected to
agree point-for-point:

- ``words``: every (word, permutation) label pulled back through the
  labeling inverse (see ``labelings``);
- ``pairs``: every (bounded composition, permutation) pair translated onto
  a base cell;
- ``brute``: every placement of one strict-increase mark per row boundary
  of the (d+1) x (i*r) matrix, filtered by the dilation bound.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .combinatorics import composition_set, eulerian_number, eulerian_set
from .errors import ParameterError, SizeLimitError
from .serial import SCHEMA_VERSION
from .sorted_collections import (
    fill_from_marks,
    multiset_row,
    multisets_from_points,
    points_from_multisets,
    sorting_witness,
)


@dataclass(frozen=True)
class HypersimplexSpec:
    """Parameters (r, i, d) of the dilated hypersimplex."""

    r: int
    i: int
    d: int

    def __post_init__(self) -> None:
        for name in ("r", "i", "d"):
            value = getattr(self, name)
            if not isinstance(value, int):
                raise ParameterError(f"{name} must be an int, got {value!r}")
        if self.r < 1:
            raise ParameterError(f"dilation r must be >= 1, got {self.r}")
        if self.d < 1:
            raise ParameterError(f"dimension d must be >= 1, got {self.d}")
        if not 1 <= self.i <= self.d:
            raise ParameterError(
                f"hypersimplex index i must satisfy 1 <= i <= d, got {self.i}"
            )

    @property
    def n(self) -> int:
        """Ambient coordinate count d + 1."""
        return self.d + 1

    @property
    def vertex_sum(self) -> int:
        """Coordinate sum i * r shared by all lattice points."""
        return self.i * self.r

    @property
    def expected_alcove_count(self) -> int:
        """r^d * A(d, i), the alcove count."""
        return self.r**self.d * eulerian_number(self.d, self.i)

    def to_json(self) -> dict:
        return {"r": self.r, "i": self.i, "d": self.d}

    @staticmethod
    def from_json(data: dict) -> "HypersimplexSpec":
        return HypersimplexSpec(int(data["r"]), int(data["i"]), int(data["d"]))


@dataclass(frozen=True)
class AlcoveCheck:
    """Outcome of ``is_alcove`` with a machine-readable failure reason."""

    ok: bool
    reason: str | None = None


def phi(point: tuple[int, ...]) -> tuple[int, ...]:
    """Prefix sums dropping the last: coordinates on the sum hyperplane."""
    return tuple(itertools.accumulate(point))[:-1]


def psi(z: tuple[int, ...], total: int) -> tuple[int, ...]:
    """Inverse of ``phi`` on the hyperplane of coordinate sum ``total``."""
    if not z:
        return (total,)
    diffs = [z[0]]
    diffs.extend(z[t] - z[t - 1] for t in range(1, len(z)))
    diffs.append(total - z[-1])
    return tuple(diffs)


def canonical_alcove(points) -> tuple[tuple[int, ...], ...]:
    """Vertices sorted by multiset row (the decorated-matrix row order)."""
    pts = [tuple(p) for p in points]
    return tuple(sorted(pts, key=multiset_row))


def is_alcove(points, spec: HypersimplexSpec) -> AlcoveCheck:
    """Check that ``points`` spans an alcove of the spec's polytope.

    Accepts any iterable of int tuples; the verdict is driven entirely by
    the sorted-collection characterization, so it applies verbatim to any
    set of d + 1 distinct lattice points of the polytope.
    """
    pts = [tuple(p) for p in points]
    if len(pts) != spec.n:
        return AlcoveCheck(False, "wrong-vertex-count")
    for p in pts:
        if len(p) != spec.n or not all(isinstance(c, int) for c in p):
            return AlcoveCheck(False, "malformed-point")
        if any(c < 0 for c in p):
            return AlcoveCheck(False, "negative-coordinate")
        if any(c > spec.r for c in p):
            return AlcoveCheck(False, "coordinate-exceeds-dilation")
        if sum(p) != spec.vertex_sum:
            return AlcoveCheck(False, "wrong-coordinate-sum")
    if len(set(pts)) != len(pts):
        return AlcoveCheck(False, "duplicate-points")
    if sorting_witness(multisets_from_points(pts)) is None:
        return AlcoveCheck(False, "not-sorted")
    return AlcoveCheck(True)


def _require_alcoves(alcoves, spec: HypersimplexSpec, where: str) -> None:
    for alcove in alcoves:
        check = is_alcove(alcove, spec)
        if not check.ok:
            raise ParameterError(
                f"{where} produced an invalid alcove ({check.reason}): {alcove}"
            )


def _enumerate_brute(spec: HypersimplexSpec):
    """All mark placements of the (d+1) x (i*r) matrix, filtered.

    Every alcove matrix has exactly one strict-increase mark per row
    boundary and none at column breaks, so placing marks freely and keeping
    the fills whose rows respect the dilation bound (no letter repeated
    more than r times per row) enumerates the triangulation exactly once.
    """
    num_cols = spec.vertex_sum
    for cols in itertools.product(range(1, num_cols + 1), repeat=spec.d):
        dm = fill_from_marks(spec.n, num_cols, cols)
        if all(
            row.count(v) <= spec.r for row in dm.rows for v in set(row)
        ):
            yield canonical_alcove(points_from_multisets(dm.rows, spec.n))


def _enumerate_pairs(spec: HypersimplexSpec):
    from .labelings import alcove_from_pair

    for j in range(1, spec.d + 1):
        sigmas = eulerian_set(spec.d, j)
        comps = composition_set(spec.r - 1, spec.n, spec.vertex_sum - j)
        for comp in comps:
            for sigma in sigmas:
                yield alcove_from_pair(comp, sigma, spec)


def _enumerate_words(spec: HypersimplexSpec):
    from .labelings import words_label_inverse

    taus = eulerian_set(spec.d, spec.i)
    for word in itertools.product(range(1, spec.r + 1), repeat=spec.d):
        for tau in taus:
            yield words_label_inverse(word, tau, spec)


_STRATEGIES = {
    "brute": _enumerate_brute,
    "pairs": _enumerate_pairs,
    "words": _enumerate_words,
}


def enumerate_dilated_alcoves(
    spec: HypersimplexSpec,
    strategy: str = "words",
    limit: int | None = None,
) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All alcoves of the dilated hypersimplex, sorted deterministically."""
    if strategy not in _STRATEGIES:
        raise ParameterError(
            f"unknown strategy {strategy!r}; choose from {sorted(_STRATEGIES)}"
        )
    if limit is not None and spec.expected_alcove_count > limit:
        raise SizeLimitError(
            f"predicted alcove count {spec.expected_alcove_count} exceeds "
            f"limit {limit}"
        )
    alcoves = tuple(sorted(_STRATEGIES[strategy](spec)))
    if strategy == "brute":
        _require_alcoves(alcoves, spec, "brute enumeration")
    return alcoves


def enumerate_hypersimplex_alcoves(
    i: int, d: int, limit: int | None = None
) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Alcoves of the undilated hypersimplex (r = 1)."""
    return enumerate_dilated_alcoves(
        HypersimplexSpec(1, i, d), strategy="pairs", limit=limit
    )


def alcoves_on_facet(alcoves, j: int):
    """Alcoves with a full facet on the polytope facet x_j = 0.

    An alcove lies on that wall exactly when d of its d + 1 vertices have
    j-th coordinate zero.
    """
    out = []
    for alcove in alcoves:
        d = len(alcove) - 1
        if not 1 <= j <= d + 1:
            raise ParameterError(f"facet index must lie in [1, {d + 1}]")
        if sum(1 for p in alcove if p[j - 1] == 0) == d:
            out.append(alcove)
    return tuple(out)


def write_alcoves(stream, alcoves, spec: HypersimplexSpec, strategy: str):
    """Write a manifest line followed by one JSON line per alcove."""
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "kind": "manifest",
        "polytope": spec.to_json(),
        "strategy": strategy,
        "count": len(alcoves),
    }
    stream.write(json.dumps(manifest) + "\n")
    for alcove in alcoves:
        record = {"kind": "alcove", "vertices": [list(p) for p in alcove]}
        stream.write(json.dumps(record) + "\n")


def read_alcoves(stream):
    """Inverse of ``write_alcoves``; returns (spec, strategy, alcoves)."""
    first = stream.readline()
    if not first:
        raise ParameterError("empty alcove stream")
    manifest = json.loads(first)
    if manifest.get("kind") != "manifest":
        raise ParameterError("alcove stream does not start with a manifest")
    if manifest.get("schema_version") != SCHEMA_VERSION:
        raise ParameterError(
            f"unsupported schema_version {manifest.get('schema_version')!r}"
        )
    spec = HypersimplexSpec.from_json(manifest["polytope"])
    alcoves = []
    for line in stream:
        if not line.strip():
            continue
        record = json.loads(line)
        if record.get("kind") != "alcove":
            raise ParameterError(f"unexpected record kind {record.get('kind')!r}")
        alcoves.append(tuple(tuple(int(c) for c in p) for p in record["vertices"]))
    if len(alcoves) != manifest["count"]:
        raise ParameterError(
            f"manifest count {manifest['count']} != {len(alcoves)} records"
        )
    return spec, manifest.get("strategy"), tuple(alcoves)
