"""Covering graphs with few s-clubs.

An s-club is a vertex set whose induced subgraph has diameter at most s;
this package covers graphs with as few of them as possible.  It bundles a
greedy closed-neighborhood cover heuristic with a provable quality bound,
exact brute-force oracles for desk-scale instances, and labeled instance
transformations between clique partition, five-literal double-SAT, and
club-cover problems, with solution mappings in both directions.
"""

from .cover import (
    ClubCover,
    CoverViolation,
    cover_from_dominating_set,
    dominating_set_size_bound,
    greedy_club_cover,
    greedy_factor_bound,
    validate_cover,
)
from .exact import (
    CliquePartition,
    ResourceLimitError,
    double_sat_brute,
    enumerate_s_clubs,
    has_h_cover,
    min_clique_partition_exact,
    min_dominating_set_exact,
    min_s_club_cover_exact,
    partition_violations,
    sat_brute,
)
from .graph import (
    INF,
    Graph,
    VertexSet,
    all_pairs_distances,
    ball,
    bfs_distances,
    connected_components,
    diameter,
    induced_subgraph,
    is_s_club,
)
from .sat import (
    Assignment,
    AuxVarMap,
    Clause,
    CnfFormula,
    FiveDSatInstance,
    FiveDSatViolation,
    Literal,
    clause_double_satisfied,
    clause_satisfied,
    formula_double_satisfied,
    formula_satisfied,
    has_two_variable_double_cover,
    lift_assignment,
    normalize_single_polarity,
    reduce_3sat_to_5dsat,
    restrict_assignment,
    validate_5dsat,
)
from .reductions import (
    Label,
    LabeledGraph,
    Provenance,
    check_cover2_image,
    check_cover3_image,
    check_pendant_image,
    formula_from_cover3_image,
    map_assignment_to_clubs3,
    map_cliques_to_clubs2,
    map_cliques_to_clubs3,
    map_clubs2_to_cliques,
    map_clubs3_to_assignment,
    map_clubs3_to_cliques,
    prepare_5dsat,
    reduce_cp_to_cover2,
    reduce_cp_to_cover3_pendant,
    reduce_5dsat_to_cover3,
    source_graph_from_cover2_image,
    source_graph_from_pendant_image,
)
from .generators import gen_gnp, gen_planted_clubs, gen_random_3sat, gen_valid_5dsat

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
