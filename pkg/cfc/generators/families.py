"""Named graph families."""

from functools import lru_cache

import networkx as nx

from cfc.graph.core import Graph
from cfc.utils import settings


def _require(condition, message):
    if not condition:
        raise ValueError(message)


def gen_path(n) -> Graph:
    _require(n >= 1, f"a path needs at least one vertex, got {n}")
    return Graph.from_networkx(nx.path_graph(n))


def gen_cycle(n) -> Graph:
    _require(n >= 3, f"a cycle needs at least three vertices, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def gen_star(n) -> Graph:
    """Center 0 and ``n - 1`` leaves."""
    _require(n >= 1, f"a star needs at least one vertex, got {n}")
    return Graph.from_networkx(nx.star_graph(n - 1))


def gen_complete(n) -> Graph:
    _require(n >= 1, f"a complete graph needs at least one vertex, got {n}")
    return Graph.from_networkx(nx.complete_graph(n))


def gen_fan(n) -> Graph:
    """Apex 0 joined to every vertex of the path 1..n-1."""
    _require(n >= 2, f"a fan needs at least two vertices, got {n}")
    graph = nx.path_graph(range(1, n))
    graph.add_edges_from((0, v) for v in range(1, n))
    return Graph.from_networkx(graph)


def gen_kn_minus_triangle(n) -> Graph:
    """K_n without the three edges among vertices 0, 1 and 2."""
    _require(n >= 3, f"K_n minus a triangle needs n >= 3, got {n}")
    graph = nx.complete_graph(n)
    graph.remove_edges_from([(0, 1), (0, 2), (1, 2)])
    return Graph.from_networkx(graph)


@lru_cache(maxsize=None)
def gk_edge_list(k):
    """(vertex count, edges) of G_k with its K_k core on ids 0..k-1."""
    if k == 1:
        return 1, ()
    if k == 2:
        return 5, ((0, 1), (0, 2), (0, 3), (1, 4))
    core = k
    edges = [(u, v) for u in range(core) for v in range(u + 1, core)]
    size = core

    def attach(sub_k, anchors):
        nonlocal size
        sub_n, sub_edges = gk_edge_list(sub_k)
        offset = size
        edges.extend((u + offset, v + offset) for u, v in sub_edges)
        edges.extend((a, offset + w) for a in anchors for w in range(sub_n))
        size += sub_n

    for v in range(core):
        for _ in range(2):
            attach(k - 1, (v,))
    for u in range(core):
        for v in range(u + 1, core):
            for _ in range(2):
                attach(k - 2, (u, v))
    return size, tuple(edges)


def gen_gk(k) -> Graph:
    """The graph G_k, which has conflict-free chromatic number k.

    G_1 is a single vertex and G_2 a claw with one edge subdivided. G_k for
    k >= 3 is a K_k on ids 0..k-1, two copies of G_{k-1} joined completely to
    each of its vertices and two copies of G_{k-2} joined completely to both
    ends of each of its edges.
    """
    _require(
        1 <= k <= settings.MAX_GK,
        f"G_k is generated for 1 <= k <= {settings.MAX_GK}, got {k}",
    )
    n, edges = gk_edge_list(k)
    return Graph.from_edges(n, edges)


def gk_core_coloring(k):
    """Colors 1..k on the core of G_k, everything else uncolored."""
    _require(1 <= k <= settings.MAX_GK, f"G_k is generated for 1 <= k <= {settings.MAX_GK}, got {k}")
    n, _ = gk_edge_list(k)
    return {v: v + 1 if v < k else 0 for v in range(n)}
