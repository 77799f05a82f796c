"""Seeded random outerplanar, planar and bipartite planar graphs.

All generators draw from a private ``random.Random(seed)`` so equal seeds give
equal edge lists.
"""

import random

import networkx as nx

from cfc.generators.triangulations import triangulation_count
from cfc.graph.core import Graph
from cfc.utils import settings


def _check_probability(name, value):
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


def _random_triangulation(n, rng):
    """Uniform triangulation of the n-gon, chosen apex by apex with Catalan weights."""
    chords = set()
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        weights = [
            triangulation_count(apex - i + 1) * triangulation_count(j - apex + 1)
            for apex in range(i + 1, j)
        ]
        pick = rng.randrange(sum(weights))
        apex = i + 1
        for weight in weights:
            if pick < weight:
                break
            pick -= weight
            apex += 1
        if apex > i + 1:
            chords.add((i, apex))
        if j > apex + 1:
            chords.add((apex, j))
        stack.extend([(i, apex), (apex, j)])
    return sorted(chords)


def _drop_keeping_connected(graph: nx.Graph, edges, probability, rng):
    for u, v in edges:
        if rng.random() >= probability:
            continue
        graph.remove_edge(u, v)
        if not nx.has_path(graph, u, v):
            graph.add_edge(u, v)


def _relabel(graph: nx.Graph, rng):
    order = list(graph.nodes)
    rng.shuffle(order)
    return nx.relabel_nodes(graph, {old: new for new, old in enumerate(order)})


def gen_random_outerplanar(
    n,
    edge_keep_prob=settings.DEFAULT_EDGE_KEEP_PROB,
    seed=None,
    outer_drop_prob=settings.DEFAULT_OUTER_DROP_PROB,
    shuffle=False,
) -> Graph:
    """Random connected outerplanar graph on ``n >= 3`` vertices.

    A uniformly random triangulation of the n-gon keeps each chord with
    probability ``edge_keep_prob``; outer edges are then dropped with
    probability ``outer_drop_prob`` unless that disconnects the graph.
    """
    if n < 3:
        raise ValueError(f"random outerplanar graphs need n >= 3, got {n}")
    _check_probability("edge_keep_prob", edge_keep_prob)
    _check_probability("outer_drop_prob", outer_drop_prob)
    rng = random.Random(seed)
    graph = nx.cycle_graph(n)
    graph.add_edges_from(
        chord for chord in _random_triangulation(n, rng) if rng.random() < edge_keep_prob
    )
    if outer_drop_prob:
        _drop_keeping_connected(
            graph, [(v, (v + 1) % n) for v in range(n)], outer_drop_prob, rng
        )
    if shuffle:
        graph = _relabel(graph, rng)
    return Graph.from_networkx(graph)


def _stacked_triangulation(n, rng):
    graph = nx.complete_graph(3)
    # the outer face is a face too
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        graph.add_edges_from([(v, a), (v, b), (v, c)])
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    return graph


def gen_random_planar(
    n, seed=None, delete_prob=settings.DEFAULT_PLANAR_DELETE_PROB, shuffle=False
) -> Graph:
    """Random connected planar graph on ``n >= 3`` vertices.

    Vertices are stacked into random faces of a triangulation, then each edge
    is deleted with probability ``delete_prob`` unless that disconnects it.
    """
    if n < 3:
        raise ValueError(f"random planar graphs need n >= 3, got {n}")
    _check_probability("delete_prob", delete_prob)
    rng = random.Random(seed)
    graph = _stacked_triangulation(n, rng)
    if delete_prob:
        _drop_keeping_connected(graph, sorted(graph.edges), delete_prob, rng)
    if shuffle:
        graph = _relabel(graph, rng)
    return Graph.from_networkx(graph)


def gen_random_bipartite_planar(
    n, seed=None, delete_prob=settings.DEFAULT_PLANAR_DELETE_PROB
) -> Graph:
    """Random planar graph reduced to the edges joining odd and even BFS layers.

    The BFS tree survives, so the result stays connected and has no isolated
    vertices.
    """
    planar = gen_random_planar(n, seed=seed, delete_prob=delete_prob).to_networkx()
    depth = nx.single_source_shortest_path_length(planar, 0)
    kept = [(u, v) for u, v in planar.edges if depth[u] % 2 != depth[v] % 2]
    return Graph.from_edges(n, kept)
