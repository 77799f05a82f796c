"""Exhaustive conflict-free coloring search.

Vertices are assigned in descending degree order (ties by id) with colors
tried in ascending order, 0 (uncolored) first. A branch is cut when some
vertex has its whole neighborhood assigned and no color appears exactly once
in it. A new color may only be one above the largest color used so far; every
coloring is a relabeling of one that obeys this rule, and the
lexicographically smallest valid assignment always does, so the witness
returned is the lexicographically smallest one.
"""

import logging
import math
from typing import Optional, Sequence

from cfc.exact.limits import (
    FEASIBLE,
    INFEASIBLE,
    SearchBudget,
    SearchLimits,
    SearchResult,
)
from cfc.exceptions import IsolatedVertexError
from cfc.graph.core import Graph, Mode, as_mode
from cfc.utils.utils import log_time

logger = logging.getLogger(__name__)

MUST_COLOR = "must-color"
MUST_DIFFER = "must-differ"


class ConflictFreeSearch:
    """Backtracking state for one palette size.

    ``hints`` are forced facts for open neighborhoods (objects with ``kind``
    and ``vertices``): a must-color vertex never takes color 0 and the two
    vertices of a must-differ fact never share a nonzero color.
    """

    def __init__(
        self,
        g: Graph,
        k: int,
        mode=Mode.CLOSED,
        budget: Optional[SearchBudget] = None,
        hints: Optional[Sequence] = None,
        require_all=False,
        minimize=False,
    ):
        if k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        self.g = g
        self.k = k
        self.mode = as_mode(mode)
        self.budget = budget or SearchBudget()
        self.require_all = require_all
        self.minimize = minimize
        self.order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
        self.watchers = [
            tuple(sorted(g.adjacency[x] | {x} if self.mode is Mode.CLOSED else g.adjacency[x]))
            for x in g.vertices
        ]
        # the neighborhood relation is symmetric, so watchers double as members
        self.pending = [len(self.watchers[u]) for u in g.vertices]
        self.counts = [[0] * (k + 1) for _ in g.vertices]
        self.colors = [None] * g.n
        self.max_used = 0
        self.colored = 0
        self.must_color = set()
        self.differ = {v: [] for v in g.vertices}
        for fact in hints or ():
            if fact.kind == MUST_COLOR:
                self.must_color.update(fact.vertices)
            elif fact.kind == MUST_DIFFER:
                a, b = fact.vertices
                self.differ[a].append(b)
                self.differ[b].append(a)
        self.best = None
        self.best_count = math.inf

    def _values(self, x):
        start = 1 if (self.require_all or x in self.must_color) else 0
        top = min(self.k, self.max_used + 1)
        for c in range(start, top + 1):
            if c and any(self.colors[y] == c for y in self.differ[x]):
                continue
            yield c

    def _assign(self, x, c):
        self.colors[x] = c
        if c:
            self.colored += 1
            self.max_used = max(self.max_used, c)
        watchers = self.watchers[x]
        for u in watchers:
            self.pending[u] -= 1
            if c:
                self.counts[u][c] += 1
        for u in watchers:
            if self.pending[u] == 0 and 1 not in self.counts[u][1:]:
                return False
        return True

    def _unassign(self, x, c, previous_max):
        for u in self.watchers[x]:
            self.pending[u] += 1
            if c:
                self.counts[u][c] -= 1
        if c:
            self.colored -= 1
        self.max_used = previous_max
        self.colors[x] = None

    def _dfs(self, index):
        self.budget.tick()
        if index == len(self.order):
            snapshot = {v: c for v, c in enumerate(self.colors) if c}
            if not self.minimize:
                self.best = snapshot
                self.best_count = self.colored
                return True
            if self.colored < self.best_count:
                self.best = snapshot
                self.best_count = self.colored
            return False
        if self.minimize and self.colored >= self.best_count:
            return False
        x = self.order[index]
        for c in self._values(x):
            if self.minimize and c and self.colored + 1 >= self.best_count:
                break
            previous_max = self.max_used
            if self._assign(x, c) and self._dfs(index + 1):
                return True
            self._unassign(x, c, previous_max)
        return False

    def run(self) -> SearchResult:
        start_nodes = self.budget.nodes
        impossible = any(p == 0 for p in self.pending)
        if not impossible:
            self._dfs(0)
        nodes = self.budget.nodes - start_nodes
        logger.debug(
            f"cf search k={self.k} mode={self.mode.value} n={self.g.n}: "
            f"{nodes} nodes, best={self.best_count}"
        )
        if self.best is None:
            return SearchResult(INFEASIBLE, self.k, None, nodes, self.budget.elapsed)
        coloring = {v: self.best.get(v, 0) for v in self.g.vertices}
        return SearchResult(FEASIBLE, self.k, coloring, nodes, self.budget.elapsed)


def exists_cf_k(
    g: Graph,
    k: int,
    mode="closed",
    limits: Optional[SearchLimits] = None,
    hints=None,
    require_all=False,
    budget: Optional[SearchBudget] = None,
) -> SearchResult:
    """Decide whether ``g`` has a conflict-free ``k``-coloring.

    Args:
        g: Input graph.
        k: Palette size, at least 1.
        mode: ``"closed"`` or ``"open"`` neighborhoods.
        limits: Node and time budget; defaults from settings.
        hints: Forced facts used to skip values in open mode.
        require_all: Color every vertex (no 0 values).
        budget: Shared budget, overrides ``limits``.

    Returns:
        SearchResult with the lexicographically smallest witness or infeasible.

    Raises:
        BudgetExceededError: if the budget runs out first.
    """
    budget = budget or SearchBudget(limits)
    search = ConflictFreeSearch(
        g, k, mode, budget, hints=hints, require_all=require_all
    )
    return search.run()


@log_time
def chi_cf(
    g: Graph, mode="closed", limits: Optional[SearchLimits] = None, hints=None
) -> SearchResult:
    """Smallest k with a conflict-free k-coloring, with its witness."""
    mode = as_mode(mode)
    if g.n == 0:
        raise ValueError("chi_cf needs a nonempty graph")
    if mode is Mode.OPEN and g.isolated_vertices():
        raise IsolatedVertexError(g.isolated_vertices())
    budget = SearchBudget(limits)
    for k in range(1, g.n + 1):
        result = exists_cf_k(g, k, mode, hints=hints, budget=budget)
        if result.feasible:
            logger.info(f"chi_cf({mode.value}) = {k} after {budget.nodes} nodes")
            return SearchResult(FEASIBLE, k, result.coloring, budget.nodes, budget.elapsed)
    raise RuntimeError("coloring every vertex distinctly must succeed")


def gamma_cf_k(
    g: Graph, k: int, mode="closed", limits: Optional[SearchLimits] = None
) -> SearchResult:
    """Minimum number of colored vertices over conflict-free k-colorings."""
    budget = SearchBudget(limits)
    search = ConflictFreeSearch(g, k, mode, budget, minimize=True)
    return search.run()
