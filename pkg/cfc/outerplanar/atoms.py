"""Atom decomposition of a connected outerplanar graph.

Bridges become edge atoms and the inner faces of every block become face
atoms. Two faces sharing a chord are linked through that chord (an edge
separator). At an articulation point each block contributes the smallest of
its atoms containing the point, and the smallest of those contributions is
the hub linked to the others (a vertex separator). The resulting tree is
rooted at the smallest atom containing vertex 0 and oriented away from it;
the atoms containing any fixed vertex form a connected subtree.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

import pandas as pd

from cfc.graph.core import Graph
from cfc.graph.embedding import OuterEmbedding, outerplanar_embedding

EDGE = "edge"
FACE = "face"


def _edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Atom:
    """One edge or face of the decomposition.

    ``vertices`` starts at the incoming separator: an edge atom lists the
    separator vertex first, a face atom with an edge separator ``{x, y}`` is
    rotated so that ``(vertices[-1], vertices[0])`` is that edge.
    """

    index: int
    kind: str
    vertices: tuple[int, ...]
    incoming_separator: tuple[int, ...]
    parent: Optional[int] = None
    children: tuple[int, ...] = ()

    @property
    def key(self):
        return tuple(sorted(self.vertices))

    @property
    def is_root(self):
        return self.parent is None

    @property
    def separator_is_edge(self):
        return len(self.incoming_separator) == 2

    def edges(self):
        """Traversal edges in order; a face closes back at ``vertices[0]``."""
        if self.kind == EDGE:
            return [tuple(self.vertices)]
        size = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % size]) for i in range(size)]


@dataclass(frozen=True)
class AtomTree:
    atoms: tuple[Atom, ...]
    root: int
    arcs: tuple[tuple[int, int, tuple[int, ...]], ...] = field(default=())

    def __len__(self):
        return len(self.atoms)

    def postorder(self):
        """Atom indices with every child before its parent."""
        order = []
        stack = [(self.root, False)]
        while stack:
            index, expanded = stack.pop()
            if expanded:
                order.append(index)
                continue
            stack.append((index, True))
            for child in reversed(self.atoms[index].children):
                stack.append((child, False))
        return order

    def atoms_containing(self, v):
        return [a.index for a in self.atoms if v in a.vertices]

    def to_frame(self):
        return pd.DataFrame(
            [
                {
                    "atom": a.index,
                    "kind": a.kind,
                    "vertices": "-".join(map(str, a.vertices)),
                    "separator": "-".join(map(str, a.incoming_separator)),
                    "parent": a.parent,
                }
                for a in self.atoms
            ]
        )


def _raw_atoms(emb: OuterEmbedding):
    """(kind, cycle, block id) for every atom, in a deterministic order."""
    raw = []
    for block_id, block in enumerate(emb.blocks):
        for face in block.faces():
            raw.append((FACE, face, ("block", block_id)))
    for bridge in sorted(emb.bridges):
        raw.append((EDGE, bridge, ("bridge", bridge)))
    raw.sort(key=lambda item: (tuple(sorted(item[1])), item[0]))
    return raw


def _links(raw, emb: OuterEmbedding, articulation_points):
    links = {i: [] for i in range(len(raw))}
    key = {i: tuple(sorted(raw[i][1])) for i in range(len(raw))}

    def link(a, b, separator):
        links[a].append((b, separator))
        links[b].append((a, separator))

    sides = {}
    for i, (kind, cycle, _) in enumerate(raw):
        if kind != FACE:
            continue
        size = len(cycle)
        for j in range(size):
            sides.setdefault(_edge(cycle[j], cycle[(j + 1) % size]), []).append(i)
    for block in emb.blocks:
        for chord in sorted(block.chords):
            faces = sides.get(chord, [])
            if len(faces) != 2:
                raise RuntimeError(f"chord {chord} borders {len(faces)} faces")
            link(faces[0], faces[1], chord)

    for v in sorted(articulation_points):
        by_block = {}
        for i, (_, cycle, block_id) in enumerate(raw):
            if v in cycle:
                by_block.setdefault(block_id, []).append(i)
        representatives = sorted(
            (min(members, key=lambda i: key[i]) for members in by_block.values()),
            key=lambda i: key[i],
        )
        hub = representatives[0]
        for other in representatives[1:]:
            link(hub, other, (v,))
    return links


def _rotate(kind, cycle, separator):
    cycle = tuple(cycle)
    if kind == EDGE:
        (s,) = separator
        return (s, cycle[1] if cycle[0] == s else cycle[0])
    size = len(cycle)
    if len(separator) == 1:
        start = cycle.index(separator[0])
        return cycle[start:] + cycle[:start]
    pair = set(separator)
    for i in range(size):
        if {cycle[i], cycle[(i + 1) % size]} == pair:
            start = (i + 1) % size
            return cycle[start:] + cycle[:start]
    raise RuntimeError(f"separator {separator} is not a side of face {cycle}")


def build_atom_tree(g: Graph, emb: Optional[OuterEmbedding] = None) -> AtomTree:
    """Decompose a connected outerplanar graph with at least two vertices.

    Raises:
        NotOuterplanarError: propagated from the embedding.
        DisconnectedGraphError: propagated from the embedding.
    """
    if g.n < 2:
        raise ValueError("atom decomposition needs at least two vertices")
    emb = emb or outerplanar_embedding(g)
    articulation_points = set()
    membership = {}
    for block_id, block in enumerate(emb.blocks):
        for v in block.vertices:
            membership.setdefault(v, set()).add(("block", block_id))
    for bridge in emb.bridges:
        for v in bridge:
            membership.setdefault(v, set()).add(("bridge", bridge))
    for v, blocks in membership.items():
        if len(blocks) >= 2:
            articulation_points.add(v)

    raw = _raw_atoms(emb)
    links = _links(raw, emb, articulation_points)
    root_vertex = min(g.vertices)
    root = min(
        (i for i, (_, cycle, _) in enumerate(raw) if root_vertex in cycle),
        key=lambda i: tuple(sorted(raw[i][1])),
    )

    parent = {root: None}
    separator = {root: (root_vertex,)}
    children = {i: [] for i in range(len(raw))}
    arcs = []
    queue = deque([root])
    while queue:
        a = queue.popleft()
        for b, shared in sorted(links[a], key=lambda item: (tuple(sorted(raw[item[0]][1])), item[1])):
            if b in parent:
                continue
            parent[b] = a
            separator[b] = tuple(sorted(shared))
            children[a].append(b)
            arcs.append((a, b, separator[b]))
            queue.append(b)
    link_count = sum(len(v) for v in links.values()) // 2
    if len(parent) != len(raw) or link_count != len(raw) - 1:
        raise RuntimeError("atom links do not form a tree")

    atoms = tuple(
        Atom(
            index=i,
            kind=kind,
            vertices=_rotate(kind, cycle, separator[i]),
            incoming_separator=separator[i],
            parent=parent[i],
            children=tuple(children[i]),
        )
        for i, (kind, cycle, _) in enumerate(raw)
    )
    return AtomTree(atoms=atoms, root=root, arcs=tuple(arcs))
