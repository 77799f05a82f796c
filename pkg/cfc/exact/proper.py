import logging
from typing import Optional

import networkx as nx

from cfc.exact.limits import (
    FEASIBLE,
    INFEASIBLE,
    SearchBudget,
    SearchLimits,
    SearchResult,
)
from cfc.graph.core import Graph

logger = logging.getLogger(__name__)


def proper_coloring(
    g: Graph, k: int, limits: Optional[SearchLimits] = None, budget=None
) -> SearchResult:
    """Exact proper k-coloring by backtracking in DSATUR order.

    The next vertex is the uncolored one with the most distinct neighbor
    colors, then the highest degree, then the smallest id. A fresh color is
    only tried once, as the next unused one.

    Raises:
        BudgetExceededError: if the search budget runs out.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    budget = budget or SearchBudget(limits)
    start_nodes = budget.nodes
    colors = [0] * g.n
    # neighbor_colors[v][c] counts neighbors of v with color c
    neighbor_colors = [[0] * (k + 1) for _ in g.vertices]

    def saturation(v):
        return sum(1 for c in range(1, k + 1) if neighbor_colors[v][c])

    def pick():
        best = None
        best_key = None
        for v in g.vertices:
            if colors[v]:
                continue
            key = (saturation(v), g.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def dfs(colored, used):
        budget.tick()
        if colored == g.n:
            return True
        v = pick()
        for c in range(1, min(k, used + 1) + 1):
            if neighbor_colors[v][c]:
                continue
            colors[v] = c
            for w in g.adjacency[v]:
                neighbor_colors[w][c] += 1
            if dfs(colored + 1, max(used, c)):
                return True
            for w in g.adjacency[v]:
                neighbor_colors[w][c] -= 1
            colors[v] = 0
        return False

    found = dfs(0, 0)
    nodes = budget.nodes - start_nodes
    logger.debug(f"proper {k}-coloring search on n={g.n}: {nodes} nodes, found={found}")
    if not found:
        return SearchResult(INFEASIBLE, k, None, nodes, budget.elapsed)
    return SearchResult(
        FEASIBLE, k, {v: colors[v] for v in g.vertices}, nodes, budget.elapsed
    )


def smallest_last_coloring(g: Graph):
    """Greedy coloring in smallest-last order; at most 6 colors on planar graphs."""
    coloring = nx.coloring.greedy_color(g.to_networkx(), strategy="smallest_last")
    return {v: c + 1 for v, c in sorted(coloring.items())}


def chromatic_number(g: Graph, limits: Optional[SearchLimits] = None):
    """Smallest k with a proper k-coloring, with its witness."""
    if g.n == 0:
        return SearchResult(FEASIBLE, 0, {}, 0, 0.0)
    budget = SearchBudget(limits)
    for k in range(1, g.n + 1):
        result = proper_coloring(g, k, budget=budget)
        if result.feasible:
            return result
    raise RuntimeError("n colors always suffice")
