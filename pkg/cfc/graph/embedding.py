"""Outerplanar embedding recognition.

Every biconnected block with at least three vertices of an outerplanar graph
has a unique Hamiltonian cycle bounding the outer face; all other block edges
are chords that pairwise do not interleave along that cycle. Blocks are
pre-screened with the edge bound ``m <= 2n - 3`` and a planarity test of the
block plus an apex joined to every vertex (planar iff the block is
outerplanar); the apex rotation then proposes the outer cycle, and a
backtracking Hamiltonian-cycle search is the fallback.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from cfc.exceptions import DisconnectedGraphError, NotOuterplanarError
from cfc.graph.core import Graph, biconnected_components, is_connected

logger = logging.getLogger(__name__)

_APEX = -1


def _edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class OuterBlock:
    """Outer cycle and chords of one biconnected block."""

    cycle: tuple[int, ...]
    chords: frozenset[tuple[int, int]]

    @property
    def vertices(self):
        return frozenset(self.cycle)

    def cycle_edges(self):
        size = len(self.cycle)
        return [_edge(self.cycle[i], self.cycle[(i + 1) % size]) for i in range(size)]

    def faces(self):
        """Inner faces: the chord-free cycles cut out of the outer cycle by chords."""
        return inner_faces(self.cycle, self.chords)


@dataclass(frozen=True)
class OuterEmbedding:
    blocks: tuple[OuterBlock, ...]
    bridges: frozenset[tuple[int, int]]

    def faces(self):
        return [face for block in self.blocks for face in block.faces()]


def normalize_cycle(cycle):
    """Rotate to start at the smallest vertex, walking towards the smaller neighbor."""
    cycle = list(cycle)
    start = cycle.index(min(cycle))
    cycle = cycle[start:] + cycle[:start]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return tuple(cycle)


def chords_cross(position, first, second):
    """Two chords cross iff their endpoints interleave along the cycle."""
    if set(first) & set(second):
        return False
    a, b = sorted((position[first[0]], position[first[1]]))
    c, d = sorted((position[second[0]], position[second[1]]))
    return a < c < b < d or c < a < d < b


def _as_outer_block(cycle, edges):
    """Validate ``cycle`` against the block edges; None if it is not an outer cycle."""
    size = len(cycle)
    if size < 3 or len(set(cycle)) != size:
        return None
    edge_set = set(edges)
    ring = {_edge(cycle[i], cycle[(i + 1) % size]) for i in range(size)}
    if not ring <= edge_set:
        return None
    chords = edge_set - ring
    position = {v: i for i, v in enumerate(cycle)}
    if any(v not in position for e in chords for v in e):
        return None
    for first, second in combinations(sorted(chords), 2):
        if chords_cross(position, first, second):
            return None
    return OuterBlock(cycle=normalize_cycle(cycle), chords=frozenset(chords))


def _apex_rotation(vertices, edges):
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    graph.add_edges_from((_APEX, v) for v in vertices)
    is_planar, embedding = nx.check_planarity(graph)
    if not is_planar:
        return None
    return tuple(embedding.neighbors_cw_order(_APEX))


def hamiltonian_cycles(vertices, edges):
    """Yield Hamiltonian cycles starting at the smallest vertex.

    Pruned so that every unvisited vertex keeps two usable cycle neighbors.
    Each undirected cycle is produced twice, once per direction.
    """
    vertices = sorted(vertices)
    adjacency = {v: set() for v in vertices}
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    start = vertices[0]
    path = [start]
    unvisited = set(vertices) - {start}

    def viable():
        ends = {start, path[-1]}
        for x in unvisited:
            usable = sum(1 for w in adjacency[x] if w in unvisited or w in ends)
            if usable < 2:
                return False
        return True

    def extend():
        if not unvisited:
            if start in adjacency[path[-1]]:
                yield tuple(path)
            return
        for w in sorted(adjacency[path[-1]] & unvisited):
            path.append(w)
            unvisited.discard(w)
            if viable():
                yield from extend()
            unvisited.add(w)
            path.pop()

    if len(vertices) >= 3 and viable():
        yield from extend()


def find_outer_cycle(vertices, edges):
    """Exhaustive search for an outer cycle; None when the block is not outerplanar."""
    for cycle in hamiltonian_cycles(vertices, edges):
        block = _as_outer_block(cycle, edges)
        if block is not None:
            return block
    return None


def embed_block(g: Graph, component):
    vertices = sorted(component)
    edges = [
        (u, v) for u, v in g.edges if u in component and v in component
    ]
    if len(edges) > 2 * len(vertices) - 3:
        raise NotOuterplanarError(
            f"block {vertices} has {len(edges)} edges, more than 2n-3"
        )
    rotation = _apex_rotation(vertices, edges)
    if rotation is None:
        raise NotOuterplanarError(f"block {vertices} plus an apex is not planar")
    block = _as_outer_block(rotation, edges)
    if block is None:
        logger.debug(f"apex rotation rejected for block {vertices}, searching cycles")
        block = find_outer_cycle(vertices, edges)
    if block is None:
        raise NotOuterplanarError(f"block {vertices} has no outer cycle")
    return block


def outerplanar_embedding(g: Graph) -> OuterEmbedding:
    """Outer cycle and chords for every block with at least three vertices.

    Raises:
        DisconnectedGraphError: if ``g`` is not connected.
        NotOuterplanarError: if any block admits no outer cycle.
    """
    if g.n == 0:
        return OuterEmbedding(blocks=(), bridges=frozenset())
    if not is_connected(g):
        raise DisconnectedGraphError("outerplanar embedding needs a connected graph")
    decomposition = biconnected_components(g)
    blocks = tuple(
        embed_block(g, component)
        for component in decomposition.components
        if len(component) >= 3
    )
    return OuterEmbedding(blocks=blocks, bridges=decomposition.bridge_edges)


def is_outerplanar(g: Graph):
    try:
        outerplanar_embedding(g)
    except NotOuterplanarError:
        return False
    return True


def inner_faces(cycle, chords):
    """Split the polygon ``cycle`` along ``chords`` into chord-free cycles.

    Faces keep the orientation of ``cycle`` and are rotated to start at their
    smallest vertex.
    """
    chord_set = {_edge(*c) for c in chords}
    polygons = [list(cycle)]
    faces = []
    while polygons:
        polygon = polygons.pop()
        split = _find_split(polygon, chord_set)
        if split is None:
            start = polygon.index(min(polygon))
            faces.append(tuple(polygon[start:] + polygon[:start]))
            continue
        i, j = split
        polygons.append(polygon[i : j + 1])
        polygons.append(polygon[j:] + polygon[: i + 1])
    return sorted(faces, key=lambda face: tuple(sorted(face)))


def _find_split(polygon, chord_set):
    size = len(polygon)
    for i in range(size):
        for j in range(i + 2, size):
            if i == 0 and j == size - 1:
                continue
            if _edge(polygon[i], polygon[j]) in chord_set:
                return i, j
    return None
