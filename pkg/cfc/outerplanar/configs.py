"""Vertex neighborhood configurations and their pairwise compatibility.

A configuration of ``v`` fixes the color of ``v`` and names the conflict-free
neighbors ``S`` of ``v`` together with their colors ``rho``. Choosing one
configuration per vertex such that every edge joins compatible
configurations is the same as choosing a conflict-free coloring (in graphs
without isolated vertices), which is what the dynamic program exploits.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Mapping

from cfc.exceptions import EdgeNotFoundError
from cfc.graph.core import Graph
from cfc.verify.checks import cf_neighbors


@dataclass(frozen=True, order=True)
class VertexConfig:
    """``(chi, S, rho)`` for one vertex; ``assignment`` lists ``(w, rho(w))`` sorted by ``w``."""

    vertex: int
    chi: int
    assignment: tuple[tuple[int, int], ...]

    def __post_init__(self):
        members = [w for w, _ in self.assignment]
        colors = [c for _, c in self.assignment]
        if not members:
            raise ValueError("a configuration names at least one conflict-free neighbor")
        if members != sorted(set(members)):
            raise ValueError("assignment must be sorted by vertex without repeats")
        if len(set(colors)) != len(colors) or min(colors) < 1:
            raise ValueError("rho must be injective into colors 1..k")
        if self.vertex in members and self.rho[self.vertex] != self.chi:
            raise ValueError("a vertex naming itself must carry its own color")

    @cached_property
    def S(self):
        return frozenset(w for w, _ in self.assignment)

    @cached_property
    def rho(self):
        return dict(self.assignment)

    @property
    def colored(self):
        return self.chi >= 1

    def __str__(self):
        named = ",".join(f"{w}:{c}" for w, c in self.assignment)
        return f"[{self.vertex}|{self.chi}|{named}]"


def enumerate_vertex_configs(g: Graph, v: int, k: int):
    """All configurations of ``v`` with at most ``k`` named neighbors, sorted."""
    closed = sorted(g.closed_neighbors(v))
    palette = range(1, k + 1)
    configs = []
    for chi in range(0, k + 1):
        for size in range(1, k + 1):
            for members in combinations(closed, size):
                for colors in permutations(palette, size):
                    if v in members and colors[members.index(v)] != chi:
                        continue
                    configs.append(
                        VertexConfig(v, chi, tuple(zip(members, colors)))
                    )
    configs.sort()
    return configs


def compatible(cu: VertexConfig, cv: VertexConfig, g: Graph) -> bool:
    """Check the two conditions for configurations of adjacent ``u`` and ``v``.

    1. Shared named neighbors get the same color, and a named endpoint carries
       the color the other side names it with.
    2. In the coloring combined from both configurations, every named
       conflict-free neighbor of ``u`` (of ``v``) is the only vertex of
       ``N[u]`` (``N[v]``) with its color.
    """
    u, v = cu.vertex, cv.vertex
    if not g.has_edge(u, v):
        raise EdgeNotFoundError(u, v)
    rho_u = cu.rho
    rho_v = cv.rho
    for w in rho_u.keys() & rho_v.keys():
        if rho_u[w] != rho_v[w]:
            return False
    if u in rho_v and rho_v[u] != cu.chi:
        return False
    if v in rho_u and rho_u[v] != cv.chi:
        return False

    combined = dict(rho_v)
    combined.update(rho_u)
    combined[u] = cu.chi
    combined[v] = cv.chi
    return _named_stay_unique(rho_u, u, combined, g) and _named_stay_unique(
        rho_v, v, combined, g
    )


def _named_stay_unique(rho, center, combined, g: Graph):
    nbrs = g.adjacency[center]
    for w, color in rho.items():
        for x, other in combined.items():
            if x != w and other == color and (x == center or x in nbrs):
                return False
    return True


def config_of(g: Graph, coloring: Mapping[int, int], v: int) -> VertexConfig:
    """The configuration a closed conflict-free coloring induces at ``v``."""
    named = cf_neighbors(g, coloring, v, "closed")
    return VertexConfig(
        v,
        coloring.get(v, 0),
        tuple(sorted((w, coloring[w]) for w in named)),
    )
