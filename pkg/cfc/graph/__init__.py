from cfc.graph.core import (
    BiconnectedDecomposition,
    Graph,
    Mode,
    NeighborhoodSet,
    as_mode,
    biconnected_components,
    bipartition,
    connected_components,
    contract_edge,
    contract_into,
    distance,
    independent_dominating_set,
    is_connected,
    neighborhood,
)
from cfc.graph.embedding import (
    OuterBlock,
    OuterEmbedding,
    find_outer_cycle,
    inner_faces,
    is_outerplanar,
    outerplanar_embedding,
)
from cfc.graph.io import (
    format_coloring,
    format_graph,
    format_roles,
    parse_coloring,
    parse_graph,
    parse_roles,
    read_coloring,
    read_graph,
    to_dot,
    write_coloring,
    write_dot,
    write_graph,
)

__all__ = [
    "BiconnectedDecomposition",
    "Graph",
    "Mode",
    "NeighborhoodSet",
    "OuterBlock",
    "OuterEmbedding",
    "as_mode",
    "biconnected_components",
    "bipartition",
    "connected_components",
    "contract_edge",
    "contract_into",
    "distance",
    "find_outer_cycle",
    "format_coloring",
    "format_graph",
    "format_roles",
    "independent_dominating_set",
    "inner_faces",
    "is_connected",
    "is_outerplanar",
    "neighborhood",
    "outerplanar_embedding",
    "parse_coloring",
    "parse_graph",
    "parse_roles",
    "read_coloring",
    "read_graph",
    "to_dot",
    "write_coloring",
    "write_dot",
    "write_graph",
]
