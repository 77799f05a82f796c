from dataclasses import dataclass

from cfc.exact.search import MUST_COLOR, MUST_DIFFER
from cfc.graph.core import Graph


@dataclass(frozen=True)
class ForcedFact:
    """A fact every open conflict-free coloring of the graph satisfies.

    ``must-color`` names one vertex that cannot stay uncolored; ``must-differ``
    names two vertices that cannot share a nonzero color.
    """

    kind: str
    vertices: tuple[int, ...]
    source: int

    def __post_init__(self):
        expected = {MUST_COLOR: 1, MUST_DIFFER: 2}
        if self.kind not in expected:
            raise ValueError(f"unknown fact kind {self.kind!r}")
        if len(self.vertices) != expected[self.kind]:
            raise ValueError(f"{self.kind} takes {expected[self.kind]} vertices")

    def __str__(self):
        return f"{self.kind} {' '.join(map(str, self.vertices))} (from {self.source})"


def open_degree_constraints(g: Graph):
    """Facts forced by vertices of degree one and two.

    The only neighbor of a degree-one vertex must be colored, and the two
    neighbors of a degree-two vertex cannot share a color.
    """
    facts = []
    for v in g.vertices:
        nbrs = g.sorted_neighbors(v)
        if len(nbrs) == 1:
            facts.append(ForcedFact(MUST_COLOR, nbrs, v))
        elif len(nbrs) == 2:
            facts.append(ForcedFact(MUST_DIFFER, nbrs, v))
    return facts
