"""Graph value type, neighborhoods, decompositions and contractions."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

import networkx as nx

from cfc.exceptions import (
    EdgeNotFoundError,
    InvalidGraphError,
    InvalidVertexError,
    NotBipartiteError,
)


class Mode(str, Enum):
    CLOSED = "closed"
    OPEN = "open"


def as_mode(mode):
    """Coerce ``"closed"``/``"open"`` strings into :class:`Mode`."""
    try:
        return Mode(mode)
    except ValueError as exc:
        raise ValueError(f"mode must be 'closed' or 'open', got {mode!r}") from exc


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Build instances with :meth:`from_edges`; the constructor checks that the
    adjacency and the canonical edge list describe the same simple graph.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise InvalidGraphError("adjacency must list one neighbor set per vertex")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InvalidGraphError(f"edge ({u}, {v}) is not canonical on 0..{self.n - 1}")
            if (u, v) in seen:
                raise InvalidGraphError(f"edge ({u}, {v}) appears twice")
            seen.add((u, v))
        degree_sum = sum(len(nbrs) for nbrs in self.adjacency)
        if degree_sum != 2 * len(self.edges):
            raise InvalidGraphError("adjacency and edge list disagree")
        for u, v in self.edges:
            if v not in self.adjacency[u] or u not in self.adjacency[v]:
                raise InvalidGraphError(f"edge ({u}, {v}) missing from adjacency")

    @classmethod
    def from_edges(cls, n, edges: Iterable[tuple[int, int]]):
        adjacency = [set() for _ in range(n)]
        canonical = []
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) leaves vertex range 0..{n - 1}")
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            if b in adjacency[a]:
                raise InvalidGraphError(f"edge ({a}, {b}) appears twice")
            adjacency[a].add(b)
            adjacency[b].add(a)
            canonical.append((a, b))
        return cls(
            n=n,
            adjacency=tuple(frozenset(nbrs) for nbrs in adjacency),
            edges=tuple(sorted(canonical)),
        )

    @classmethod
    def from_networkx(cls, graph: nx.Graph):
        """Convert a networkx graph; nodes are relabeled by sorted order."""
        nodes = sorted(graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges))

    @property
    def m(self):
        return len(self.edges)

    @property
    def vertices(self):
        return range(self.n)

    def check_vertex(self, v):
        if not isinstance(v, int) or not (0 <= v < self.n):
            raise InvalidVertexError(v, self.n)

    def neighbors(self, v):
        self.check_vertex(v)
        return self.adjacency[v]

    def sorted_neighbors(self, v):
        return tuple(sorted(self.neighbors(v)))

    def closed_neighbors(self, v):
        return self.neighbors(v) | {v}

    def degree(self, v):
        return len(self.neighbors(v))

    def max_degree(self):
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def has_edge(self, u, v):
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adjacency[u]

    def isolated_vertices(self):
        return [v for v in self.vertices if not self.adjacency[v]]

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def induced_subgraph(self, vertices):
        """Return the induced subgraph and the old-id to new-id mapping."""
        kept = sorted(set(vertices))
        for v in kept:
            self.check_vertex(v)
        mapping = {v: i for i, v in enumerate(kept)}
        edges = [
            (mapping[u], mapping[v])
            for u, v in self.edges
            if u in mapping and v in mapping
        ]
        return Graph.from_edges(len(kept), edges), mapping


@dataclass(frozen=True)
class NeighborhoodSet:
    center: int
    members: frozenset[int]
    mode: Mode

    def __post_init__(self):
        if self.mode is Mode.CLOSED and self.center not in self.members:
            raise ValueError("closed neighborhood must contain its center")
        if self.mode is Mode.OPEN and self.center in self.members:
            raise ValueError("open neighborhood must not contain its center")


@dataclass(frozen=True)
class BiconnectedDecomposition:
    components: tuple[frozenset[int], ...]
    articulation_points: frozenset[int]
    bridge_edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)


def neighborhood(g: Graph, v: int, mode="closed") -> NeighborhoodSet:
    mode = as_mode(mode)
    members = g.neighbors(v)
    if mode is Mode.CLOSED:
        members = members | {v}
    return NeighborhoodSet(center=v, members=frozenset(members), mode=mode)


def distance(g: Graph, u: int, v: int):
    """Breadth-first distance; ``math.inf`` across components."""
    g.check_vertex(u)
    g.check_vertex(v)
    try:
        return nx.shortest_path_length(g.to_networkx(), u, v)
    except nx.NetworkXNoPath:
        return math.inf


def connected_components(g: Graph):
    """Components as sorted tuples, ordered by smallest vertex."""
    comps = [tuple(sorted(c)) for c in nx.connected_components(g.to_networkx())]
    return sorted(comps)


def is_connected(g: Graph):
    return g.n > 0 and len(connected_components(g)) == 1


def biconnected_components(g: Graph) -> BiconnectedDecomposition:
    graph = g.to_networkx()
    components = sorted(
        (frozenset(c) for c in nx.biconnected_components(graph)),
        key=lambda c: tuple(sorted(c)),
    )
    bridges = frozenset(tuple(sorted(e)) for e in nx.bridges(graph))
    return BiconnectedDecomposition(
        components=tuple(components),
        articulation_points=frozenset(nx.articulation_points(graph)),
        bridge_edges=bridges,
    )


def contract_edge(g: Graph, keep: int, remove: int):
    """Contract ``remove`` into ``keep``.

    Returns the contracted graph and the mapping old id -> new id; ``remove``
    maps to the new id of ``keep`` and the remaining ids stay in order.
    """
    if not g.has_edge(keep, remove):
        raise EdgeNotFoundError(keep, remove)
    mapping = {}
    next_id = 0
    for v in g.vertices:
        if v == remove:
            continue
        mapping[v] = next_id
        next_id += 1
    mapping[remove] = mapping[keep]
    edges = {
        tuple(sorted((mapping[u], mapping[v])))
        for u, v in g.edges
        if mapping[u] != mapping[v]
    }
    return Graph.from_edges(g.n - 1, sorted(edges)), mapping


def contract_into(g: Graph, owner: Mapping[int, int]):
    """Contract every vertex into its owner.

    ``owner`` maps each vertex to a representative that is either the vertex
    itself or one of its neighbors, and representatives own themselves. The
    result equals contracting each edge (v, owner[v]) in turn; the mapping
    sends every vertex to the new id of its representative.
    """
    for v in g.vertices:
        rep = owner.get(v, v)
        if rep != v:
            if not g.has_edge(v, rep):
                raise EdgeNotFoundError(v, rep)
            if owner.get(rep, rep) != rep:
                raise ValueError(f"representative {rep} is itself contracted")
    reps = sorted({owner.get(v, v) for v in g.vertices})
    rep_index = {rep: i for i, rep in enumerate(reps)}
    mapping = {v: rep_index[owner.get(v, v)] for v in g.vertices}
    edges = {
        tuple(sorted((mapping[u], mapping[v])))
        for u, v in g.edges
        if mapping[u] != mapping[v]
    }
    return Graph.from_edges(len(reps), sorted(edges)), mapping


def bipartition(g: Graph):
    """Return (V1, V2).

    The smallest vertex of every component with an edge lands in V1; isolated
    vertices land in V2.
    """
    try:
        color = nx.bipartite.color(g.to_networkx())
    except nx.NetworkXError as exc:
        raise NotBipartiteError("graph contains an odd cycle") from exc
    side_one = frozenset(v for v, c in color.items() if c == 1)
    side_two = frozenset(g.vertices) - side_one
    return side_one, side_two


def independent_dominating_set(g: Graph):
    """Greedy maximal independent set scanning ascending ids."""
    chosen = set()
    blocked = set()
    for v in g.vertices:
        if v in blocked:
            continue
        chosen.add(v)
        blocked.add(v)
        blocked.update(g.adjacency[v])
    return frozenset(chosen)
