"""Ground-truth checks for conflict-free, proper and dominating colorings.

A partial coloring is a mapping vertex -> color where 0 (or absence) means
uncolored.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from cfc.graph.core import Graph, Mode, as_mode

PartialColoring = Mapping[int, int]

NO_UNIQUE_COLOR = "no-unique-color"
ISOLATED_OPEN = "isolated-open"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violations: tuple[tuple[int, str], ...] = ()

    def __post_init__(self):
        if self.valid != (not self.violations):
            raise ValueError("a verdict is valid exactly when it has no violations")

    @classmethod
    def from_violations(cls, violations):
        violations = tuple(sorted(violations))
        return cls(valid=not violations, violations=violations)

    def violating_vertices(self):
        return [v for v, _ in self.violations]


def _members(g: Graph, v, mode):
    nbrs = g.neighbors(v)
    return nbrs | {v} if mode is Mode.CLOSED else nbrs


def cf_neighbors(g: Graph, coloring: PartialColoring, v: int, mode="closed"):
    """Colored members of the neighborhood of ``v`` whose color is unique there."""
    mode = as_mode(mode)
    members = _members(g, v, mode)
    counts = Counter(coloring.get(w, 0) for w in members)
    return frozenset(
        w for w in members if coloring.get(w, 0) >= 1 and counts[coloring[w]] == 1
    )


def verify_cf(g: Graph, coloring: PartialColoring, mode="closed") -> Verdict:
    mode = as_mode(mode)
    violations = []
    for v in g.vertices:
        if mode is Mode.OPEN and not g.adjacency[v]:
            violations.append((v, ISOLATED_OPEN))
        elif not cf_neighbors(g, coloring, v, mode):
            violations.append((v, NO_UNIQUE_COLOR))
    return Verdict.from_violations(violations)


def verify_proper(g: Graph, coloring: PartialColoring) -> bool:
    if any(coloring.get(v, 0) < 1 for v in g.vertices):
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges)


def is_dominating(g: Graph, dominators: Iterable[int]) -> bool:
    dominators = set(dominators)
    return all(
        v in dominators or g.adjacency[v] & dominators for v in g.vertices
    )


def undominated(g: Graph, dominators: Iterable[int]):
    dominators = set(dominators)
    return [
        v for v in g.vertices if v not in dominators and not g.adjacency[v] & dominators
    ]


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vertices = set(vertices)
    return not any(g.adjacency[v] & vertices for v in vertices)


def count_colored(coloring: PartialColoring) -> int:
    return sum(1 for c in coloring.values() if c >= 1)


def coloring_palette(coloring: PartialColoring):
    """Distinct colors in use."""
    return frozenset(c for c in coloring.values() if c >= 1)


def colored_vertices(coloring: PartialColoring):
    return frozenset(v for v, c in coloring.items() if c >= 1)
