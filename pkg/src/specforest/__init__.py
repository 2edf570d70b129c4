"""Spectral extremal toolkit for graphs avoiding large cliques and long
linear forests: constructions, certified spectral radii, exact forbidden-
structure detection, brute-force verification, local-search ascent, and
structural audits."""

from .audit import (
    LemmaCheck,
    StructureReport,
    intersection_lower_bound,
    pair_edge_count,
    structure_sets,
)
from .constructions import (
    CandidateResult,
    TuranNumberBreakdown,
    edge_upper_bound_check,
    extremal_candidate,
    linear_forest_turan_number,
    matching_candidate,
)
from .forbidden import (
    ForbiddenFamily,
    FreenessResult,
    FreenessWitness,
    clique_number,
    contains_clique,
    find_clique,
    find_linear_forest,
    find_matching,
    is_free,
    linear_forest_witness,
    matching_witness,
    max_clique,
    max_linear_forest,
    max_matching,
)
from .graph import (
    Graph,
    PartitionSpec,
    add_edges,
    complement,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    components,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    is_connected,
    join,
    make_graph,
    neighborhood,
    path_graph,
    relabel,
    remove_edges,
    second_neighborhood,
    turan,
    turan_part_sizes,
    union,
)
from .graph6 import g6_decode, g6_encode
from .search import (
    BalanceResult,
    SearchReport,
    balance_step,
    brute_force_extremal,
    canonical_form,
    canonical_g6,
    enumerate_free_graphs,
    zykov_climb,
    zykov_step,
)
from .spectral import (
    DEFAULT_TOL,
    MAX_ITERATIONS,
    RadiusBracket,
    SpectralResult,
    equitable_radius,
    quotient_radius,
    rayleigh_delta,
    spectral_radius,
)

__version__ = "0.1.0"
