"""Isomorphism testing for graphs close to a simple base class.

The heavy lifting happens in three layers: enumeration of small vertex
deletion sets into a hereditary class (`deletion`), colored isomorphism
backends for the base classes themselves (`backends`), and an engine that
anchors the deleted part and composes the two (`engine`). Brute-force
reference implementations live in `oracle`, and two related bounded search
problems in `games`.
"""

from .backends import (
    NotClusterError,
    NotCographError,
    NotEdgelessError,
    build_cotree,
    canonical_code,
    cluster_census,
    colored_gi_cluster,
    colored_gi_cograph,
    colored_gi_independent,
    cotree_to_graph,
    independent_census,
)
from .deletion import (
    DeletionSet,
    KernelDecomposition,
    SearchStats,
    buss_kernel,
    enumerate_deletion_sets,
    enumerate_minimal_vertex_covers,
    enumerate_occurrences,
    enumerate_twin_covers,
    minimum_deletion_set,
    remove_twin_edges,
)
from .engine import (
    EngineStats,
    Parameterization,
    anchor_color,
    decide,
    gi_distance_to_class,
    gi_distance_to_clique,
    gi_twin_cover,
    gi_vertex_cover,
)
from .games import (
    CnfInstance,
    HittingGameInstance,
    parse_dimacs_cnf,
    parse_hitting_sets,
    player_one_wins,
    weighted_qcnf_sat,
    winning_first_move,
)
from .graphs import (
    ColoredGraph,
    Graph,
    GraphFormatError,
    are_twins,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    emit_graph6,
    empty_graph,
    induced_subgraph,
    parse_dimacs,
    parse_graph6,
    path_graph,
    relabel,
    star_graph,
    verify_colored_isomorphism,
    verify_isomorphism,
)
from .oracle import brute_force_colored_gi, brute_force_deletion_sets, brute_force_gi
from .recognition import (
    ForbiddenFamily,
    builtin_family,
    family_from_graph6_file,
    find_forbidden_occurrence,
    is_member,
)
from .results import DistanceExceeded, IsoResult

__version__ = "0.1.0"

__all__ = [
    "ColoredGraph",
    "CnfInstance",
    "DeletionSet",
    "DistanceExceeded",
    "EngineStats",
    "ForbiddenFamily",
    "Graph",
    "GraphFormatError",
    "HittingGameInstance",
    "IsoResult",
    "KernelDecomposition",
    "NotClusterError",
    "NotCographError",
    "NotEdgelessError",
    "Parameterization",
    "SearchStats",
    "anchor_color",
    "are_twins",
    "brute_force_colored_gi",
    "brute_force_deletion_sets",
    "brute_force_gi",
    "build_cotree",
    "builtin_family",
    "buss_kernel",
    "canonical_code",
    "cluster_census",
    "colored_gi_cluster",
    "colored_gi_cograph",
    "colored_gi_independent",
    "complement",
    "complete_graph",
    "cotree_to_graph",
    "cycle_graph",
    "decide",
    "disjoint_union",
    "emit_graph6",
    "empty_graph",
    "enumerate_deletion_sets",
    "enumerate_minimal_vertex_covers",
    "enumerate_occurrences",
    "enumerate_twin_covers",
    "family_from_graph6_file",
    "find_forbidden_occurrence",
    "gi_distance_to_class",
    "gi_distance_to_clique",
    "gi_twin_cover",
    "gi_vertex_cover",
    "independent_census",
    "induced_subgraph",
    "is_member",
    "minimum_deletion_set",
    "parse_dimacs",
    "parse_dimacs_cnf",
    "parse_graph6",
    "parse_hitting_sets",
    "path_graph",
    "player_one_wins",
    "relabel",
    "remove_twin_edges",
    "star_graph",
    "verify_colored_isomorphism",
    "verify_isomorphism",
    "weighted_qcnf_sat",
    "winning_first_move",
]
