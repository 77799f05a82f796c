import math
import time
from dataclasses import dataclass
from typing import Literal, Optional

from cfc.exceptions import BudgetExceededError
from cfc.utils import settings

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class SearchLimits:
    """Node and wall-clock budgets for one exact search call."""

    node_budget: int = settings.DEFAULT_NODE_BUDGET
    time_budget: float = settings.DEFAULT_TIME_BUDGET

    def __post_init__(self):
        if self.node_budget <= 0:
            raise ValueError(f"node_budget must be positive, got {self.node_budget}")
        if self.time_budget <= 0:
            raise ValueError(f"time_budget must be positive, got {self.time_budget}")

    @classmethod
    def default(cls):
        return cls()


class SearchBudget:
    """Counts search-tree nodes and raises once a limit is crossed."""

    def __init__(self, limits: Optional[SearchLimits] = None):
        self.limits = limits or SearchLimits.default()
        self.nodes = 0
        self.started = time.perf_counter()

    @property
    def elapsed(self):
        return time.perf_counter() - self.started

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limits.node_budget:
            raise BudgetExceededError(self.nodes, self.elapsed, "node budget")
        if self.nodes % settings.TIME_CHECK_INTERVAL == 0:
            if self.elapsed > self.limits.time_budget:
                raise BudgetExceededError(self.nodes, self.elapsed, "time budget")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a decision or optimisation search.

    ``coloring`` is set exactly when ``status`` is feasible. ``k`` is the
    palette the search ran with (the chromatic number for ``chi_cf``).
    """

    status: Literal["feasible", "infeasible"]
    k: int
    coloring: Optional[dict] = None
    nodes: int = 0
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in (FEASIBLE, INFEASIBLE):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == FEASIBLE) != (self.coloring is not None):
            raise ValueError("feasible results carry a coloring, infeasible ones do not")

    @property
    def feasible(self):
        return self.status == FEASIBLE

    @property
    def colored(self):
        """Number of colored vertices, ``math.inf`` when infeasible."""
        if self.coloring is None:
            return math.inf
        return sum(1 for c in self.coloring.values() if c >= 1)

    @property
    def colors_used(self):
        if self.coloring is None:
            return 0
        return len({c for c in self.coloring.values() if c >= 1})
