"""Totally silver graphs: regular graphs colorable so that every closed
neighborhood sees each color exactly once."""

from .families import (
    ColoredGraph,
    FamilySpec,
    augment,
    gen_B,
    gen_clique_union,
    gen_cycle_star,
    gen_D,
    gen_E,
    gen_L,
    gen_Lprime,
    gen_M,
    gen_moebius,
    gen_petersen,
)
from .graph import (
    Bipartition,
    EdgeCut,
    Graph,
    bipartite_double_cover,
    bipartition,
    components,
    degree_profile,
    disjoint_union,
    edge_cuts_of_size,
    find_isomorphism,
    girth,
    is_connected,
    is_isomorphic,
    square,
    vertex_connectivity_at_least,
)
from .reductions import (
    ReductionStep,
    is_nontrivial,
    reduce_four_cycle,
    reduce_fully,
    reduce_triangle,
    split_two_edge_cut,
)
from .silver import (
    BudgetExceeded,
    Coloring,
    SilverReport,
    check_necessary,
    chromatic_number_square,
    edge_chromatic_cubic,
    partite_class_matrix,
    solve_totally_silver,
    verify_totally_silver,
)
from .switches import (
    SwitchCertificate,
    SwitchMove,
    apply_bipartite_switch,
    apply_switch,
    decompose_to_Br,
    decompose_to_cliques,
    replay,
)

__version__ = "0.1.0"
