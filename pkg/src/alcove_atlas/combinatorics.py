"""Permutation statistics and bounded compositions.

Conventions used throughout the package:

- Permutations of [d] are tuples ``sigma`` with ``sigma[t-1] = sigma_t``,
  one-line notation, values 1..d.
- ``descent_set`` returns 1-indexed descent positions: t is a descent iff
  sigma_t > sigma_{t+1}.
- The descent-count refinement ``eulerian_set(d, j)`` collects permutations
  of [d] with exactly j - 1 descents, so the j index runs 1..d and
  ``eulerian_number(d, j) = |eulerian_set(d, j)|``.
- ``composition_set(r, d, i)`` enumerates weak compositions of i into d
  parts, each part in [0, r]; the count is the coefficient of q^i in
  (1 + q + ... + q^r)^d.

Everything is exact integer arithmetic; enumeration order is lexicographic
and deterministic.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .errors import ParameterError


def descent_set(sigma: tuple[int, ...]) -> tuple[int, ...]:
    """1-indexed positions t with sigma_t > sigma_{t+1}."""
    return tuple(
        t for t in range(1, len(sigma)) if sigma[t - 1] > sigma[t]
    )


def descent_count(sigma: tuple[int, ...]) -> int:
    return len(descent_set(sigma))


@lru_cache(maxsize=None)
def eulerian_set(d: int, j: int) -> tuple[tuple[int, ...], ...]:
    """Permutations of [d] with exactly j - 1 descents, in lex order."""
    if d < 1:
        raise ParameterError(f"d must be a positive integer, got {d}")
    if not 1 <= j <= d:
        return ()
    return tuple(
        sigma
        for sigma in itertools.permutations(range(1, d + 1))
        if descent_count(sigma) == j - 1
    )


@lru_cache(maxsize=None)
def _eulerian_row(d: int) -> tuple[int, ...]:
    """Row (A(d,1), ..., A(d,d)) via the two-term recurrence."""
    if d == 1:
        return (1,)
    prev = _eulerian_row(d - 1)
    row = []
    for j in range(1, d + 1):
        left = j * prev[j - 1] if j <= d - 1 else 0
        right = (d - j + 1) * prev[j - 2] if j >= 2 else 0
        row.append(left + right)
    return tuple(row)


def eulerian_number(d: int, j: int) -> int:
    """Number of permutations of [d] with j - 1 descents (0 outside 1..d)."""
    if d < 1:
        raise ParameterError(f"d must be a positive integer, got {d}")
    if not 1 <= j <= d:
        return 0
    return _eulerian_row(d)[j - 1]


def eulerian_row(d: int) -> tuple[int, ...]:
    """The full row (A(d,1), ..., A(d,d))."""
    if d < 1:
        raise ParameterError(f"d must be a positive integer, got {d}")
    return _eulerian_row(d)


def composition_set(r: int, d: int, i: int) -> tuple[tuple[int, ...], ...]:
    """Weak compositions of i into d parts bounded by r, in lex order."""
    if r < 0:
        raise ParameterError(f"part bound r must be >= 0, got {r}")
    if d < 1:
        raise ParameterError(f"number of parts d must be >= 1, got {d}")
    if i < 0:
        return ()

    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int, parts_left: int) -> None:
        if parts_left == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        # Lower bound keeps the tail feasible; upper bound is the box.
        low = max(0, remaining - r * (parts_left - 1))
        high = min(r, remaining)
        for part in range(low, high + 1):
            prefix.append(part)
            extend(prefix, remaining - part, parts_left - 1)
            prefix.pop()

    extend([], i, d)
    return tuple(out)


def composition_count(r: int, d: int, i: int) -> int:
    """|composition_set(r, d, i)| by dynamic programming, no enumeration."""
    if r < 0:
        raise ParameterError(f"part bound r must be >= 0, got {r}")
    if d < 1:
        raise ParameterError(f"number of parts d must be >= 1, got {d}")
    if i < 0:
        return 0
    counts = [1] + [0] * i
    for _ in range(d):
        nxt = [0] * (i + 1)
        for total in range(i + 1):
            if counts[total]:
                for part in range(0, min(r, i - total) + 1):
                    nxt[total + part] += counts[total]
        counts = nxt
    return counts[i]


def box_partitions(r: int, d: int, i: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of i with at most d parts, each part at most r."""
    if r < 0 or d < 0:
        raise ParameterError("box dimensions must be nonnegative")
    if i < 0:
        return ()

    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int, bound: int, slots: int):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0:
            return
        for part in range(min(bound, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part, slots - 1)
            prefix.pop()

    extend([], i, r, d)
    return tuple(out)


def composition_count_via_partitions(r: int, d: int, i: int) -> int:
    """|composition_set(r, d, i)| as a sum of multinomials over partitions.

    Each partition fitting in the d x r box contributes the number of its
    distinct rearrangements into d slots: d! / (prod_v m_v! * (d - l)!)
    where m_v counts parts equal to v and l is the number of parts.
    """
    if d < 1:
        raise ParameterError(f"number of parts d must be >= 1, got {d}")
    total = 0
    for lam in box_partitions(r, d, i):
        denom = math.factorial(d - len(lam))
        for v in set(lam):
            denom *= math.factorial(lam.count(v))
        total += math.factorial(d) // denom
    return total
