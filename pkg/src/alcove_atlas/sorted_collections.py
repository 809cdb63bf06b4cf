"""Sorted multiset collections and their decorated matrices.

A lattice point x in Z_{>=0}^n with coordinate sum m is recorded as the
weakly increasing word of length m over the alphabet [n] whose letter v
appears x_v times (``multiset_row``). A collection of k such points is
*sorted* when its rows can be ordered so that reading the resulting k x m
matrix column by column, top to bottom, left to right, is weakly
increasing. ``sorting_witness`` finds such an order when one exists; any
valid order is a linear extension of the componentwise order on rows, so
lexicographic sorting of the rows is the only candidate and the check is
exact.

A sorted matrix is *decorated* by marking the positions where the reading
word strictly increases:

- row mark (a, b), 1 <= a <= k - 1: entry at row a, column b is strictly
  below the entry at row a + 1, column b;
- bottom mark b, 1 <= b <= m - 1: the last entry of column b is strictly
  below the first entry of column b + 1.

Marks determine the matrix: start from 1 at the top of column 1, copy
downward except across a row mark (increment by one there), and copy the
bottom of each column to the top of the next except across a bottom mark.
``fill_from_marks`` runs that reconstruction for the mark patterns used by
the alcove labelings (one row mark per boundary, no bottom marks).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import NotSortedError, ParameterError
from .serial import SCHEMA_VERSION, jsonify


def multiset_row(point: tuple[int, ...]) -> tuple[int, ...]:
    """Weakly increasing word with letter v repeated point[v-1] times."""
    if any(c < 0 for c in point):
        raise ParameterError(f"coordinates must be nonnegative: {point}")
    out: list[int] = []
    for v, c in enumerate(point, start=1):
        out.extend([v] * c)
    return tuple(out)


def point_from_row(row: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Inverse of multiset_row for words over the alphabet [n]."""
    point = [0] * n
    for v in row:
        if not 1 <= v <= n:
            raise ParameterError(f"letter {v} outside alphabet [1, {n}]")
        point[v - 1] += 1
    return tuple(point)


def multisets_from_points(
    points,
) -> tuple[tuple[int, ...], ...]:
    """Rows for a collection of points (validated: equal length and sum)."""
    pts = [tuple(p) for p in points]
    if not pts:
        raise ParameterError("empty point collection")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ParameterError("points have mixed dimensions")
    total = sum(pts[0])
    if any(sum(p) != total for p in pts):
        raise ParameterError("points have mixed coordinate sums")
    return tuple(multiset_row(p) for p in pts)


def points_from_multisets(
    rows, n: int
) -> tuple[tuple[int, ...], ...]:
    return tuple(point_from_row(tuple(row), n) for row in rows)


def column_reading(rows) -> tuple[int, ...]:
    """Column-major reading word of a rectangular matrix of rows."""
    grid = [tuple(row) for row in rows]
    if not grid:
        return ()
    m = len(grid[0])
    return tuple(grid[a][b] for b in range(m) for a in range(len(grid)))


def sorting_witness(rows):
    """A row order making the column reading weakly increasing, or None.

    Any valid order must list the rows in weakly increasing componentwise
    order, and lex order of the rows is the unique such listing up to ties,
    so sorting lexicographically and verifying is a complete test.
    """
    ordered = sorted(tuple(row) for row in rows)
    if not ordered:
        return None
    if any(len(row) != len(ordered[0]) for row in ordered):
        raise ParameterError("rows have mixed lengths")
    reading = column_reading(ordered)
    if all(x <= y for x, y in zip(reading, reading[1:])):
        return tuple(ordered)
    return None


def is_sorted_collection(rows) -> bool:
    return sorting_witness(rows) is not None


@dataclass(frozen=True)
class DecoratedMatrix:
    """A sorted matrix together with its strict-increase marks."""

    rows: tuple[tuple[int, ...], ...]
    row_marks: frozenset = field(repr=False)
    bottom_marks: frozenset = field(repr=False)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def max_entry(self) -> int:
        return max(max(row) for row in self.rows)

    @cached_property
    def marks_in_reading_order(self) -> tuple[tuple[int, int], ...]:
        """All marks as (boundary, column), column-major reading order.

        Row mark (a, b) sits at boundary a in column b; a bottom mark in
        column b is reported as boundary k (below the last row) in column b.
        """
        k = self.num_rows
        marks = [(a, b) for (a, b) in self.row_marks]
        marks.extend((k, b) for b in self.bottom_marks)
        return tuple(sorted(marks, key=lambda mark: (mark[1], mark[0])))

    def row_counts(self) -> dict[int, int]:
        """How many row marks sit at each boundary 1..k-1."""
        counts: dict[int, int] = {}
        for a, _ in self.row_marks:
            counts[a] = counts.get(a, 0) + 1
        return counts

    def render_text(self) -> str:
        """Rows plus a mark summary, for CLI text output."""
        lines = [" ".join(str(v) for v in row) for row in self.rows]
        marks = ", ".join(
            f"({a},{b})" for (a, b) in sorted(self.row_marks)
        )
        bottoms = ", ".join(str(b) for b in sorted(self.bottom_marks))
        lines.append(f"row marks: {marks or 'none'}")
        lines.append(f"bottom marks: {bottoms or 'none'}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "rows": jsonify(self.rows),
            "row_marks": jsonify(sorted(self.row_marks)),
            "bottom_marks": jsonify(sorted(self.bottom_marks)),
        }


def decorate(rows) -> DecoratedMatrix:
    """Decorate a matrix whose given row order is already sorted."""
    grid = tuple(tuple(row) for row in rows)
    if not grid:
        raise ParameterError("empty matrix")
    k, m = len(grid), len(grid[0])
    if any(len(row) != m for row in grid):
        raise ParameterError("rows have mixed lengths")
    reading = column_reading(grid)
    if any(x > y for x, y in zip(reading, reading[1:])):
        raise NotSortedError(
            "column reading of the given row order is not weakly increasing"
        )
    row_marks = frozenset(
        (a, b + 1)
        for b in range(m)
        for a in range(1, k)
        if grid[a - 1][b] < grid[a][b]
    )
    bottom_marks = frozenset(
        b + 1 for b in range(m - 1) if grid[k - 1][b] < grid[0][b + 1]
    )
    return DecoratedMatrix(grid, row_marks, bottom_marks)


def fill_from_marks(
    num_rows: int, num_cols: int, mark_columns
) -> DecoratedMatrix:
    """Reconstruct the matrix with one row mark per boundary, no bottom marks.

    ``mark_columns[a-1]`` is the column of the unique mark at boundary a,
    for a = 1..num_rows-1. Entries start at 1 and increment exactly at the
    marks in reading order, so the result uses the alphabet
    [num_rows] when every boundary carries a mark.
    """
    cols = tuple(mark_columns)
    if len(cols) != num_rows - 1:
        raise ParameterError(
            f"need {num_rows - 1} mark columns, got {len(cols)}"
        )
    if any(not 1 <= c <= num_cols for c in cols):
        raise ParameterError(
            f"mark columns must lie in [1, {num_cols}]: {cols}"
        )
    grid = [[0] * num_cols for _ in range(num_rows)]
    current = 1
    for b in range(1, num_cols + 1):
        for a in range(num_rows):
            if a >= 1 and cols[a - 1] == b:
                current += 1
            grid[a][b - 1] = current
    rows = tuple(tuple(row) for row in grid)
    return decorate(rows)
