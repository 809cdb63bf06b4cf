"""Bijective labelings of alcoves.

All labelings read off the decorated matrix of an alcove (see
``sorted_collections``): for an alcove of the r-dilated (i, d)
hypersimplex the matrix has d + 1 rows, i * r columns, exactly one
strict-increase mark per row boundary, and no marks at column breaks.

- ``word1`` (i = 1 only): the word w in [r]^d whose a-th letter is the
  column of the mark at boundary a. A bijection onto [r]^d.
- ``comp``: the coordinatewise minimum of the alcove, equivalently the
  translation part; computable from marks alone (``comp_from_marks``).
- ``sigma_label``: the permutation listing boundary indices in the
  column-major reading order of their marks. For r = 1 this is a bijection
  onto permutations with i - 1 descents (``alcove_from_sigma`` inverts it).
- ``pair_label``: (comp, sigma). A bijection onto pairs (c, sigma) with
  sigma a permutation of [d], c a composition of i*r - (des(sigma) + 1)
  into d + 1 parts bounded by r - 1 (``alcove_from_pair`` inverts it).
- ``words_label``: (word, tau) with tau the unique permutation whose base
  cell B satisfies A inside r * B, and word the ``word1`` label of A
  rewritten in B's vertex basis. Inverted by ``words_label_inverse``.

The boundary machinery (``duplicate``, ``facet_word``, ``boundary_words``)
identifies which words label alcoves with a facet on each wall x_j = 0 of
the dilated simplex (i = 1).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .alcoves import HypersimplexSpec, canonical_alcove, is_alcove
from .combinatorics import descent_count, eulerian_set
from .errors import (
    AtlasError,
    LabelDomainError,
    NotRepresentableError,
    ParameterError,
)
from .sorted_collections import (
    DecoratedMatrix,
    decorate,
    fill_from_marks,
    multisets_from_points,
    points_from_multisets,
    sorting_witness,
)


def decorated_matrix(alcove) -> DecoratedMatrix:
    """Decorated matrix of an alcove given by its vertices (any order)."""
    rows = sorting_witness(multisets_from_points(alcove))
    if rows is None:
        raise LabelDomainError("point collection is not sorted")
    return decorate(rows)


def _checked_matrix(alcove, spec: HypersimplexSpec) -> DecoratedMatrix:
    check = is_alcove(alcove, spec)
    if not check.ok:
        raise LabelDomainError(f"not an alcove of {spec}: {check.reason}")
    return decorated_matrix(alcove)


def _mark_word(dm: DecoratedMatrix) -> tuple[int, ...]:
    """Column of the unique mark at each row boundary 1..d."""
    if dm.bottom_marks:
        raise AtlasError("alcove matrix has a mark at a column break")
    columns: dict[int, int] = {}
    for a, b in dm.row_marks:
        if a in columns:
            raise AtlasError(f"two marks at row boundary {a}")
        columns[a] = b
    if sorted(columns) != list(range(1, dm.num_rows)):
        raise AtlasError("alcove matrix misses a row boundary mark")
    return tuple(columns[a] for a in range(1, dm.num_rows))


def word1(alcove, spec: HypersimplexSpec) -> tuple[int, ...]:
    """Mark-column word of an alcove of the dilated simplex (i = 1)."""
    if spec.i != 1:
        raise LabelDomainError("word1 is defined only for i = 1")
    return _mark_word(_checked_matrix(alcove, spec))


def word1_inverse(
    word: tuple[int, ...], spec: HypersimplexSpec
) -> tuple[tuple[int, ...], ...]:
    """The alcove of the dilated simplex whose word1 label is ``word``."""
    if spec.i != 1:
        raise LabelDomainError("word1 is defined only for i = 1")
    word = tuple(word)
    if len(word) != spec.d:
        raise ParameterError(f"word must have {spec.d} letters, got {word}")
    if any(not isinstance(w, int) or not 1 <= w <= spec.r for w in word):
        raise ParameterError(f"letters must lie in [1, {spec.r}]: {word}")
    dm = fill_from_marks(spec.n, spec.vertex_sum, word)
    return canonical_alcove(points_from_multisets(dm.rows, spec.n))


def comp_from_marks(dm: DecoratedMatrix) -> tuple[int, ...]:
    """Coordinate minima read off the mark positions alone.

    With the d marks listed in column-major reading order as
    (boundary_t, column_t) and the sentinel (boundary_0, column_0) = (0, 1):
    the t-th minimum is column_t - column_{t-1}, less one when the boundary
    decreases, and the last is the column count minus column_d.
    """
    marks = dm.marks_in_reading_order
    prev_a, prev_b = 0, 1
    out = []
    for a, b in marks:
        out.append(b - prev_b - (1 if a < prev_a else 0))
        prev_a, prev_b = a, b
    out.append(dm.num_cols - prev_b)
    return tuple(out)


def sigma_from_marks(dm: DecoratedMatrix) -> tuple[int, ...]:
    """Row-boundary indices in column-major reading order of the marks."""
    return tuple(a for a, _ in dm.marks_in_reading_order)


def comp(alcove, spec: HypersimplexSpec) -> tuple[int, ...]:
    """Coordinatewise minimum of the alcove (its translation part)."""
    check = is_alcove(alcove, spec)
    if not check.ok:
        raise LabelDomainError(f"not an alcove of {spec}: {check.reason}")
    pts = [tuple(p) for p in alcove]
    return tuple(min(p[t] for p in pts) for t in range(spec.n))


def sigma_label(alcove, spec: HypersimplexSpec) -> tuple[int, ...]:
    """Permutation part of the alcove's pair label."""
    dm = _checked_matrix(alcove, spec)
    _mark_word(dm)
    return sigma_from_marks(dm)


def pair_label(
    alcove, spec: HypersimplexSpec
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(composition, permutation) label of an alcove."""
    dm = _checked_matrix(alcove, spec)
    _mark_word(dm)
    return comp_from_marks(dm), sigma_from_marks(dm)


def _check_permutation(sigma: tuple[int, ...]) -> tuple[int, ...]:
    sigma = tuple(sigma)
    d = len(sigma)
    if sorted(sigma) != list(range(1, d + 1)):
        raise ParameterError(f"not a permutation of [{d}]: {sigma}")
    return sigma


@lru_cache(maxsize=None)
def alcove_from_sigma(sigma: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Base cell of the permutation: the alcove of the undilated
    hypersimplex whose sigma label is ``sigma``.

    Marks are placed in reading order: the t-th mark sits at row boundary
    sigma_t, and the column advances after each descent of sigma, so the
    matrix has des(sigma) + 1 columns.
    """
    sigma = _check_permutation(sigma)
    d = len(sigma)
    column = 1
    mark_columns = [0] * d
    for t, boundary in enumerate(sigma):
        mark_columns[boundary - 1] = column
        if t + 1 < d and sigma[t] > sigma[t + 1]:
            column += 1
    dm = fill_from_marks(d + 1, column, tuple(mark_columns))
    return canonical_alcove(points_from_multisets(dm.rows, d + 1))


def alcove_from_pair(
    comp_part, sigma, spec: HypersimplexSpec
) -> tuple[tuple[int, ...], ...]:
    """Inverse of ``pair_label``: translate the base cell by a composition."""
    sigma = _check_permutation(sigma)
    if len(sigma) != spec.d:
        raise LabelDomainError(
            f"permutation length {len(sigma)} != d = {spec.d}"
        )
    c = tuple(comp_part)
    j = descent_count(sigma) + 1
    if len(c) != spec.n:
        raise LabelDomainError(f"composition needs {spec.n} parts, got {c}")
    if any(not isinstance(v, int) or not 0 <= v <= spec.r - 1 for v in c):
        raise LabelDomainError(
            f"composition parts must lie in [0, {spec.r - 1}]: {c}"
        )
    if sum(c) != spec.vertex_sum - j:
        raise LabelDomainError(
            f"composition parts must sum to {spec.vertex_sum - j}, got {sum(c)}"
        )
    base = alcove_from_sigma(sigma)
    return canonical_alcove(
        tuple(v + c[t] for t, v in enumerate(p)) for p in base
    )


@lru_cache(maxsize=None)
def _basis_inverse(basis: tuple[tuple[int, ...], ...]):
    """Exact inverse of the matrix whose columns are the basis points."""
    n = len(basis)
    if any(len(p) != n for p in basis):
        raise ParameterError("basis points must form a square matrix")
    # Augmented [V | I] with V[t][k] = k-th basis point's t-th coordinate.
    aug = [
        [Fraction(basis[k][t]) for k in range(n)]
        + [Fraction(1 if s == t else 0) for s in range(n)]
        for t in range(n)
    ]
    for col in range(n):
        pivot = next(
            (row for row in range(col, n) if aug[row][col] != 0), None
        )
        if pivot is None:
            raise ParameterError("basis points are affinely dependent")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col]
        aug[col] = [v / scale for v in aug[col]]
        for row in range(n):
            if row != col and aug[row][col] != 0:
                factor = aug[row][col]
                aug[row] = [
                    v - factor * w for v, w in zip(aug[row], aug[col])
                ]
    return tuple(tuple(row[n:]) for row in aug)


def vertex_basis_change(
    point: tuple[int, ...], basis
) -> tuple[int, ...]:
    """Coefficients of ``point`` in the vertex basis, if lattice-valid.

    Solves sum_k c_k * basis_k = point exactly and returns integer
    coefficients; raises ``NotRepresentableError`` when any coefficient is
    fractional or negative (the point lies outside the dilated cell).
    """
    basis = tuple(tuple(p) for p in basis)
    point = tuple(point)
    if len(point) != len(basis):
        raise ParameterError("point dimension does not match basis size")
    inv = _basis_inverse(basis)
    coeffs = []
    for k in range(len(basis)):
        value = sum(inv[k][t] * point[t] for t in range(len(point)))
        if value.denominator != 1 or value < 0:
            raise NotRepresentableError(
                f"{point} has no lattice expansion in the given basis"
            )
        coeffs.append(int(value))
    return tuple(coeffs)


def words_label(
    alcove, spec: HypersimplexSpec
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(word, permutation) label of an alcove of the dilated hypersimplex.

    The permutation tau identifies the unique base cell B whose r-fold
    dilate contains the alcove; the word is the ``word1`` label of the
    alcove rewritten in B's vertex basis.
    """
    check = is_alcove(alcove, spec)
    if not check.ok:
        raise LabelDomainError(f"not an alcove of {spec}: {check.reason}")
    alcove = canonical_alcove(alcove)
    simplex = HypersimplexSpec(spec.r, 1, spec.d)
    for tau in eulerian_set(spec.d, spec.i):
        basis = alcove_from_sigma(tau)
        try:
            coords = tuple(vertex_basis_change(p, basis) for p in alcove)
        except NotRepresentableError:
            continue
        return word1(canonical_alcove(coords), simplex), tau
    raise LabelDomainError(
        f"alcove lies in no dilated base cell of {spec}: {alcove}"
    )


def words_label_inverse(
    word: tuple[int, ...], tau: tuple[int, ...], spec: HypersimplexSpec
) -> tuple[tuple[int, ...], ...]:
    """Inverse of ``words_label``."""
    tau = _check_permutation(tau)
    if len(tau) != spec.d:
        raise LabelDomainError(f"permutation length {len(tau)} != d = {spec.d}")
    if descent_count(tau) + 1 != spec.i:
        raise LabelDomainError(
            f"permutation must have {spec.i - 1} descents, got {tau}"
        )
    basis = alcove_from_sigma(tau)
    inner = word1_inverse(word, HypersimplexSpec(spec.r, 1, spec.d))
    points = (
        tuple(
            sum(c[k] * basis[k][t] for k in range(spec.n))
            for t in range(spec.n)
        )
        for c in inner
    )
    return canonical_alcove(points)


def duplicate(word: tuple[int, ...], j: int) -> tuple[int, ...]:
    """Repeat the j-th letter in reading order just after itself.

    Reading order lists positions sorted by (letter value, position), so
    equal letters are read left to right within their value block.
    """
    word = tuple(word)
    if not 1 <= j <= len(word):
        raise ParameterError(
            f"letter index {j} outside [1, {len(word)}] for {word}"
        )
    order = sorted(range(len(word)), key=lambda t: (word[t], t))
    k = order[j - 1]
    return word[: k + 1] + (word[k],) + word[k + 1 :]


def facet_word(word: tuple[int, ...], j: int, r: int) -> tuple[int, ...]:
    """Label of a boundary alcove facet within the wall x_j = 0.

    ``word`` must label an alcove with a facet on the j-th wall of the
    dilated simplex; the result is the (d-1)-letter label of that facet in
    the wall's own alcove structure. Raises ``LabelDomainError`` when the
    word lies on no such wall, making this the membership test for the
    boundary-word sets.
    """
    word = tuple(word)
    d = len(word)
    if not 1 <= j <= d + 1:
        raise ParameterError(f"wall index {j} outside [1, {d + 1}]")
    if j == 1:
        if not word or word[0] != 1:
            raise LabelDomainError(f"{word} does not start with 1")
        return word[1:]
    if j == d + 1:
        if not word or word[-1] != r:
            raise LabelDomainError(f"{word} does not end with {r}")
        return word[:-1]
    order = sorted(range(d), key=lambda t: (word[t], t))
    p, q = order[j - 2], order[j - 1]
    if q != p + 1 or word[p] != word[q]:
        raise LabelDomainError(
            f"reading letters {j - 1}, {j} of {word} are not an adjacent "
            "equal pair"
        )
    return word[:q] + word[q + 1 :]


def boundary_word_insert(
    word: tuple[int, ...], j: int, r: int
) -> tuple[int, ...]:
    """Inverse of ``facet_word``: lift a wall label to the full polytope."""
    word = tuple(word)
    d = len(word) + 1
    if not 1 <= j <= d + 1:
        raise ParameterError(f"wall index {j} outside [1, {d + 1}]")
    if j == 1:
        return (1,) + word
    if j == d + 1:
        return word + (r,)
    return duplicate(word, j - 1)


def boundary_words(r: int, d: int, j: int) -> tuple[tuple[int, ...], ...]:
    """All words labeling alcoves with a facet on the wall x_j = 0."""
    if r < 1 or d < 1:
        raise ParameterError("r and d must be positive")
    if not 1 <= j <= d + 1:
        raise ParameterError(f"wall index {j} outside [1, {d + 1}]")
    smaller = itertools.product(range(1, r + 1), repeat=d - 1)
    return tuple(sorted(boundary_word_insert(u, j, r) for u in smaller))
