import logging
import math
from typing import Optional

from cfc.exact.limits import SearchBudget, SearchLimits
from cfc.graph.core import Graph

logger = logging.getLogger(__name__)


def greedy_dominating_set(g: Graph):
    """Repeatedly take the vertex covering most undominated vertices (smallest id on ties)."""
    undominated = set(g.vertices)
    chosen = set()
    while undominated:
        best = max(
            g.vertices,
            key=lambda v: (len((g.adjacency[v] | {v}) & undominated), -v),
        )
        chosen.add(best)
        undominated -= g.adjacency[best] | {best}
    return frozenset(chosen)


def min_dominating_set(g: Graph, limits: Optional[SearchLimits] = None, budget=None):
    """Exact minimum dominating set by branch and bound.

    Branches on the smallest undominated vertex ``u``: one of ``N[u]`` must be
    chosen. A branch is cut when ``|D| + ceil(undominated / (max_degree + 1))``
    cannot beat the incumbent, which starts from the greedy solution.

    Raises:
        BudgetExceededError: if the search budget runs out.
    """
    budget = budget or SearchBudget(limits)
    start_nodes = budget.nodes
    closed = [tuple(sorted(g.adjacency[v] | {v})) for v in g.vertices]
    cover = max(g.max_degree() + 1, 1)
    best = set(greedy_dominating_set(g))
    hits = [0] * g.n
    chosen = []
    remaining = g.n

    def choose(w):
        nonlocal remaining
        chosen.append(w)
        for x in closed[w]:
            if hits[x] == 0:
                remaining -= 1
            hits[x] += 1

    def unchoose(w):
        nonlocal remaining
        chosen.pop()
        for x in closed[w]:
            hits[x] -= 1
            if hits[x] == 0:
                remaining += 1

    def dfs():
        nonlocal best
        budget.tick()
        if remaining == 0:
            if len(chosen) < len(best):
                best = set(chosen)
            return
        if len(chosen) + math.ceil(remaining / cover) >= len(best):
            return
        u = next(v for v in g.vertices if hits[v] == 0)
        for w in closed[u]:
            choose(w)
            dfs()
            unchoose(w)

    dfs()
    logger.debug(
        f"min dominating set of size {len(best)} after {budget.nodes - start_nodes} nodes"
    )
    return frozenset(best)
