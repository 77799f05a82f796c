from cfc.generators.families import (
    gen_complete,
    gen_cycle,
    gen_fan,
    gen_gk,
    gen_kn_minus_triangle,
    gen_path,
    gen_star,
    gk_core_coloring,
    gk_edge_list,
)
from cfc.generators.random_graphs import (
    gen_random_bipartite_planar,
    gen_random_outerplanar,
    gen_random_planar,
)
from cfc.generators.reductions import (
    GADGET,
    ORIGINAL,
    PENDANT,
    SUBDIVISION,
    ClauseOrders,
    LabeledGraph,
    clause_vertex,
    coloring_from_assignment,
    default_clause_orders,
    gen_coloring_reduction,
    gen_open_reduction,
    gen_reduction_1color,
    variable_vertex,
)
from cfc.generators.triangulations import (
    catalan,
    enumerate_polygon_triangulations,
    fan_triangulation,
    find_outerplanar_requiring_2,
    polygon_graph,
    triangulation_count,
)

__all__ = [
    "GADGET",
    "ORIGINAL",
    "PENDANT",
    "SUBDIVISION",
    "ClauseOrders",
    "LabeledGraph",
    "catalan",
    "clause_vertex",
    "coloring_from_assignment",
    "default_clause_orders",
    "enumerate_polygon_triangulations",
    "fan_triangulation",
    "find_outerplanar_requiring_2",
    "gen_complete",
    "gen_coloring_reduction",
    "gen_cycle",
    "gen_fan",
    "gen_gk",
    "gen_kn_minus_triangle",
    "gen_open_reduction",
    "gen_path",
    "gen_random_bipartite_planar",
    "gen_random_outerplanar",
    "gen_random_planar",
    "gen_reduction_1color",
    "gen_star",
    "gk_core_coloring",
    "gk_edge_list",
    "polygon_graph",
    "triangulation_count",
    "variable_vertex",
]
