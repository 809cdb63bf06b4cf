"""alcove-atlas: exact combinatorics of alcoved hypersimplex triangulations.

The package enumerates the alcoves of dilated hypersimplices, labels them
bijectively by words, compositions, and permutations, builds and compares
dual graphs against purely combinatorial models, and verifies the
underlying counting identities with exact integer arithmetic throughout.
"""

from .alcoves import (
    AlcoveCheck,
    HypersimplexSpec,
    alcoves_on_facet,
    canonical_alcove,
    enumerate_dilated_alcoves,
    enumerate_hypersimplex_alcoves,
    is_alcove,
    phi,
    psi,
    read_alcoves,
    write_alcoves,
)
from .combinatorics import (
    box_partitions,
    composition_count,
    composition_count_via_partitions,
    composition_set,
    descent_count,
    descent_set,
    eulerian_number,
    eulerian_row,
    eulerian_set,
)
from .dual_graphs import (
    AdjacencyRecord,
    ConjectureReport,
    Connector,
    LabeledGraph,
    LabelingCheck,
    base_cell_graph,
    canonical_wall_assignment,
    check_conjecture,
    check_labeling_isomorphism,
    conjecture_connectors,
    dual_graph,
    dual_graph_from_alcoves,
    graph_compose,
    graphs_isomorphic,
    hypersimplex_adjacency_records,
    make_graph,
    permutation_graph,
    word_graph,
)
from .errors import (
    AtlasError,
    LabelDomainError,
    NotRepresentableError,
    NotSortedError,
    ParameterError,
    SizeLimitError,
)
from .identities import (
    IdentityReport,
    IdentityRow,
    NumeratorVector,
    eigenvector_check,
    eulerian_numerator,
    verify_grid,
    verify_identity,
    veronese_transform,
)
from .labelings import (
    alcove_from_pair,
    alcove_from_sigma,
    boundary_word_insert,
    boundary_words,
    comp,
    comp_from_marks,
    decorated_matrix,
    duplicate,
    facet_word,
    pair_label,
    sigma_from_marks,
    sigma_label,
    vertex_basis_change,
    word1,
    word1_inverse,
    words_label,
    words_label_inverse,
)
from .serial import SCHEMA_VERSION
from .sorted_collections import (
    DecoratedMatrix,
    column_reading,
    decorate,
    fill_from_marks,
    is_sorted_collection,
    multiset_row,
    multisets_from_points,
    point_from_row,
    points_from_multisets,
    sorting_witness,
)

__version__ = "0.1.0"
