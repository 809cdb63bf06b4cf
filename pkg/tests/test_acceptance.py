"""End-to-end acceptance checks, each with an explicit runtime budget.

Every assertion here is exact integer arithmetic; the time caps guard
against accidental blowups in the enumeration strategies.
"""

import itertools
import math
import time
from collections import Counter

from alcove_atlas.alcoves import (
    HypersimplexSpec,
    alcoves_on_facet,
    enumerate_dilated_alcoves,
    enumerate_hypersimplex_alcoves,
)
from alcove_atlas.combinatorics import (
    composition_count,
    composition_count_via_partitions,
    composition_set,
    descent_count,
    eulerian_number,
    eulerian_set,
)
from alcove_atlas.dual_graphs import (
    base_cell_graph,
    check_conjecture,
    check_labeling_isomorphism,
    conjecture_connectors,
    dual_graph,
    graph_compose,
    graphs_isomorphic,
    permutation_graph,
    word_graph,
)
from alcove_atlas.identities import eigenvector_check, verify_grid
from alcove_atlas.labelings import (
    alcove_from_pair,
    alcove_from_sigma,
    boundary_word_insert,
    boundary_words,
    comp,
    decorated_matrix,
    duplicate,
    facet_word,
    pair_label,
    sigma_label,
    word1,
    word1_inverse,
    words_label,
    words_label_inverse,
)


def test_hypersimplex_alcove_counts_are_eulerian():
    """Normalized volume of every hypersimplex up to d = 7, exactly."""
    start = time.perf_counter()
    for d in range(1, 8):
        for i in range(1, d + 1):
            alcoves = enumerate_hypersimplex_alcoves(i, d)
            assert len(alcoves) == eulerian_number(d, i), (d, i)
            assert len(set(alcoves)) == len(alcoves)
    assert len(enumerate_hypersimplex_alcoves(2, 4)) == 11
    assert time.perf_counter() - start < 5.0


def test_dilated_simplex_counts_and_brute_agreement():
    """r^d alcoves in the r-dilated d-simplex, by labels and by brute force."""
    start = time.perf_counter()
    for r in range(1, 5):
        for d in range(1, 5):
            spec = HypersimplexSpec(r, 1, d)
            via_words = enumerate_dilated_alcoves(spec, strategy="words")
            assert len(via_words) == r**d, (r, d)
            via_brute = enumerate_dilated_alcoves(spec, strategy="brute")
            assert set(via_brute) == set(via_words), (r, d)
    assert time.perf_counter() - start < 10.0


def test_simplex_count_identity_both_routes():
    """Sum over j of c(r-1, d+1, r-j) * A(d, j) equals r^d.

    Checked arithmetically for r <= 5, d <= 6, and structurally: the
    composition-permutation labels partition the alcoves of the dilated
    simplex into blocks of exactly those sizes.
    """
    start = time.perf_counter()
    for r in range(1, 6):
        for d in range(1, 7):
            total = sum(
                composition_count(r - 1, d + 1, r - j) * eulerian_number(d, j)
                for j in range(1, d + 1)
            )
            assert total == r**d, (r, d)

            spec = HypersimplexSpec(r, 1, d)
            alcoves = enumerate_dilated_alcoves(spec, strategy="words")
            labels = [pair_label(alcove, spec) for alcove in alcoves]
            assert len(set(labels)) == len(alcoves)
            by_descents = Counter(
                descent_count(sigma) + 1 for _, sigma in labels
            )
            for j in range(1, d + 1):
                expected = composition_count(
                    r - 1, d + 1, r - j
                ) * eulerian_number(d, j)
                assert by_descents.get(j, 0) == expected, (r, d, j)
            assert sum(by_descents.values()) == r**d
    assert time.perf_counter() - start < 10.0


def test_dilated_volume_identity_and_strategy_agreement():
    """Sum over j of c(r-1, d+1, ir-j) * A(d, j) equals r^d * A(d, i).

    Arithmetic for the full r <= 5, d <= 6 grid (all routes, plus the
    numerator eigenvector check), then alcove-level agreement of all
    three enumeration strategies at r <= 3, d <= 4.
    """
    start = time.perf_counter()
    for report in verify_grid(5, 6):
        assert report.passed, (report.r, report.d)

    for r in range(1, 4):
        for d in range(1, 5):
            for i in range(1, d + 1):
                spec = HypersimplexSpec(r, i, d)
                words = enumerate_dilated_alcoves(spec, strategy="words")
                pairs = enumerate_dilated_alcoves(spec, strategy="pairs")
                brute = enumerate_dilated_alcoves(spec, strategy="brute")
                assert words == pairs == brute, (r, i, d)
                assert len(words) == spec.expected_alcove_count
    assert time.perf_counter() - start < 60.0


def test_worked_examples_reproduce_exactly():
    """Reference labelings of specific alcoves, frozen digit for digit."""
    simplex_alcove = (
        (3, 1, 1, 0, 1),
        (2, 2, 1, 0, 1),
        (2, 2, 0, 1, 1),
        (2, 1, 1, 1, 1),
        (2, 1, 1, 0, 2),
    )
    simplex_spec = HypersimplexSpec(6, 1, 4)
    assert word1(simplex_alcove, simplex_spec) == (3, 5, 4, 5)
    assert comp(simplex_alcove, simplex_spec) == (2, 1, 0, 0, 1)
    assert sigma_label(simplex_alcove, simplex_spec) == (1, 3, 2, 4)

    hyper_alcove = (
        (1, 0, 1, 0, 1, 0, 0),
        (0, 1, 1, 0, 1, 0, 0),
        (0, 1, 0, 1, 1, 0, 0),
        (0, 1, 0, 1, 0, 1, 0),
        (0, 0, 1, 1, 0, 1, 0),
        (0, 0, 1, 1, 0, 0, 1),
        (0, 0, 1, 0, 1, 0, 1),
    )
    hyper_spec = HypersimplexSpec(1, 3, 6)
    assert sigma_label(hyper_alcove, hyper_spec) == (1, 4, 2, 6, 3, 5)

    dilated_simplex = alcove_from_pair(
        (1, 0, 2, 0, 0, 1, 0), (1, 4, 2, 6, 3, 5), HypersimplexSpec(7, 1, 6)
    )
    dm = decorated_matrix(dilated_simplex)
    assert dm.rows == (
        (1, 1, 3, 3, 3, 5, 6),
        (1, 2, 3, 3, 3, 5, 6),
        (1, 2, 3, 3, 4, 5, 6),
        (1, 2, 3, 3, 4, 6, 6),
        (1, 3, 3, 3, 4, 6, 6),
        (1, 3, 3, 3, 4, 6, 7),
        (1, 3, 3, 3, 5, 6, 7),
    )
    assert dm.row_marks == frozenset(
        {(1, 2), (2, 5), (3, 6), (4, 2), (5, 7), (6, 5)}
    )

    dilated_alcove = (
        (2, 3, 0, 1, 2, 0),
        (2, 2, 1, 1, 2, 0),
        (2, 2, 0, 2, 2, 0),
        (2, 2, 0, 2, 1, 1),
        (1, 3, 0, 2, 1, 1),
        (1, 3, 0, 1, 2, 1),
    )
    dilated_spec = HypersimplexSpec(4, 2, 5)
    assert words_label(dilated_alcove, dilated_spec) == (
        (1, 1, 4, 2, 2),
        (3, 1, 2, 4, 5),
    )
    assert pair_label(dilated_alcove, dilated_spec) == (
        (1, 2, 0, 1, 1, 0),
        (4, 1, 2, 5, 3),
    )

    assert duplicate((3, 2, 5, 4, 2, 1, 3), 3) == (3, 2, 5, 4, 2, 2, 1, 3)


def test_labelings_are_dual_graph_isomorphisms():
    """The label maps carry the model graphs onto the true dual graphs."""
    start = time.perf_counter()
    for r in range(1, 4):
        for d in range(1, 5):
            spec = HypersimplexSpec(r, 1, d)
            truth = dual_graph(spec, strategy="words")
            model = word_graph(r, d)
            check = check_labeling_isomorphism(
                model, truth, lambda w: word1_inverse(w, spec)
            )
            assert check.ok and check.bijective, (r, d)

    for d in range(1, 6):
        for i in range(1, d + 1):
            spec = HypersimplexSpec(1, i, d)
            truth = dual_graph(spec, strategy="pairs")
            model = permutation_graph(i, d)
            check = check_labeling_isomorphism(
                model, truth, alcove_from_sigma
            )
            assert check.ok and check.bijective, (i, d)
    assert time.perf_counter() - start < 30.0


def test_boundary_words_match_facet_detection():
    """Wall words by rule versus alcoves found sitting on each facet."""
    for r in range(1, 4):
        for d in range(1, 4):
            spec = HypersimplexSpec(r, 1, d)
            alcoves = enumerate_dilated_alcoves(spec, strategy="words")
            for j in range(1, d + 2):
                predicted = set(boundary_words(r, d, j))
                observed = {
                    word1(alcove, spec)
                    for alcove in alcoves_on_facet(alcoves, j)
                }
                assert predicted == observed, (r, d, j)
                assert len(predicted) == r ** (d - 1), (r, d, j)
                if j == 1:
                    assert all(w[0] == 1 for w in predicted)
                    assert predicted == {
                        w for w in map(tuple, itertools.product(
                            range(1, r + 1), repeat=d
                        )) if w[0] == 1
                    }
                if j == d + 1:
                    assert all(w[-1] == r for w in predicted)
                    assert predicted == {
                        w for w in map(tuple, itertools.product(
                            range(1, r + 1), repeat=d
                        )) if w[-1] == r
                    }


def test_composed_model_matches_dual_graph_of_twice_dilated_2_3():
    """Word-graph copies glued over the base cell graph reproduce the
    dual graph of the 2-dilated (2, 3) hypersimplex, and the four copies
    of the all-ones word close up into a 4-cycle."""
    spec = HypersimplexSpec(2, 2, 3)

    facet_report = check_conjecture(spec, scheme="facet")
    assert facet_report.verdict == "holds-via-label-map"
    assert facet_report.label_map_exact
    assert facet_report.true_order == facet_report.composite_order == 32
    assert facet_report.true_size == facet_report.composite_size == 48

    walls = {(0, 2, 1): 1, (1, 3, 1): 3}
    color_report = check_conjecture(spec, scheme="color", color_to_facet=walls)
    assert color_report.holds
    assert color_report.base_subgraph_matches

    composite = graph_compose(
        base_cell_graph(2, 3),
        word_graph(2, 3),
        conjecture_connectors(spec, scheme="color", color_to_facet=walls),
    )
    assert graphs_isomorphic(composite, dual_graph(spec))
    ones = (1, 1, 1)
    cycle = [
        ((1, 3, 2), (2, 1, 3)),
        ((2, 1, 3), (3, 1, 2)),
        ((3, 1, 2), (2, 3, 1)),
        ((2, 3, 1), (1, 3, 2)),
    ]
    for sigma_u, sigma_v in cycle:
        assert composite.has_edge((sigma_u, ones), (sigma_v, ones))

    # Recorded conjecture verdicts on a small grid; the composition
    # statement is only conjectural, so nothing here is asserted beyond
    # the checker producing a verdict at all.
    known = {"holds-via-label-map", "holds-via-search", "fails", "inconclusive"}
    for r in range(1, 3):
        for d in range(2, 5):
            grid_spec = HypersimplexSpec(r, 2, d)
            for scheme in ("facet", "color"):
                report = check_conjecture(grid_spec, scheme=scheme)
                assert report.verdict in known
                print(
                    f"recorded: r={r} i=2 d={d} scheme={scheme} "
                    f"-> {report.verdict}"
                )
    swapped = check_conjecture(
        spec, scheme="color", color_to_facet={(1, 3, 1): 1, (0, 2, 1): 2}
    )
    assert swapped.verdict in known
    print(f"recorded: swapped wall assignment -> {swapped.verdict}")


def test_bijection_roundtrips_and_exact_arithmetic():
    """Exhaustive roundtrips for all five label maps, plus the counting
    and eigenvector identities they rest on."""
    start = time.perf_counter()
    for r in range(1, 4):
        for d in range(1, 5):
            simplex = HypersimplexSpec(r, 1, d)
            for word in itertools.product(range(1, r + 1), repeat=d):
                assert word1(word1_inverse(word, simplex), simplex) == word
            for alcove in enumerate_dilated_alcoves(simplex, "words"):
                assert word1_inverse(word1(alcove, simplex), simplex) == alcove

            for i in range(1, d + 1):
                spec = HypersimplexSpec(r, i, d)
                for alcove in enumerate_dilated_alcoves(spec, "words"):
                    parts, sigma = pair_label(alcove, spec)
                    assert alcove_from_pair(parts, sigma, spec) == alcove
                    word, tau = words_label(alcove, spec)
                    assert words_label_inverse(word, tau, spec) == alcove
                if r == 1:
                    for tau in eulerian_set(d, i):
                        assert sigma_label(alcove_from_sigma(tau), spec) == tau

            for j in range(1, d + 2):
                for base in itertools.product(
                    range(1, r + 1), repeat=d - 1
                ):
                    lifted = boundary_word_insert(base, j, r)
                    assert facet_word(lifted, j, r) == base
                for wall_word in boundary_words(r, d, j):
                    assert boundary_word_insert(
                        facet_word(wall_word, j, r), j, r
                    ) == wall_word

    for d in range(1, 8):
        assert sum(
            eulerian_number(d, j) for j in range(1, d + 1)
        ) == math.factorial(d)

    for r in range(0, 4):
        for d in range(1, 6):
            for i in range(-1, r * d + 2):
                expected = len(composition_set(r, d, i))
                assert composition_count(r, d, i) == expected
                assert composition_count_via_partitions(r, d, i) == expected

    for r in range(1, 6):
        for d in range(1, 7):
            assert eigenvector_check(r, d), (r, d)
    assert time.perf_counter() - start < 60.0
