"""Feasible configuration lists with cascading deletions.

Every vertex keeps the set of its still feasible configurations, and every
directed edge ``(u, v)`` maps a configuration of ``u`` to the configurations
of ``v`` it is compatible with. A configuration stays listed only while it has
a partner on each incident edge; removing one drains the partner maps of its
neighbors and may remove further configurations in turn.
"""

import logging
from collections import deque
from typing import Callable, Optional

from cfc.graph.core import Graph
from cfc.outerplanar.configs import VertexConfig, compatible, enumerate_vertex_configs
from cfc.utils import settings

logger = logging.getLogger(__name__)


class FeasibleTable:
    def __init__(
        self,
        g: Graph,
        k: int,
        on_delete: Optional[Callable[[VertexConfig], None]] = None,
    ):
        self.g = g
        self.k = k
        self.on_delete = on_delete
        self.lists = {v: set(enumerate_vertex_configs(g, v, k)) for v in g.vertices}
        self.partners = {}
        self.costs = {}
        self.choices = {}
        self.deleted = 0
        for u, v in g.edges:
            forward = {cu: set() for cu in self.lists[u]}
            backward = {cv: set() for cv in self.lists[v]}
            for cu in self.lists[u]:
                for cv in self.lists[v]:
                    if compatible(cu, cv, g):
                        forward[cu].add(cv)
                        backward[cv].add(cu)
            self.partners[(u, v)] = forward
            self.partners[(v, u)] = backward
        logger.debug(
            f"table on n={g.n}, k={k}: {self.vertex_config_count()} vertex and "
            f"{self.edge_config_count()} edge configurations"
        )
        self._cascade(
            [c for v in g.vertices for c in self.lists[v] if self._unsupported(c)]
        )

    def _unsupported(self, config):
        v = config.vertex
        return any(not self.partners[(v, w)][config] for w in self.g.adjacency[v])

    def _cascade(self, queue):
        queue = deque(queue)
        while queue:
            config = queue.popleft()
            v = config.vertex
            if config not in self.lists[v]:
                continue
            self.lists[v].discard(config)
            self.deleted += 1
            if self.on_delete is not None:
                self.on_delete(config)
            for w in self.g.adjacency[v]:
                for other in self.partners[(v, w)].pop(config):
                    remaining = self.partners[(w, v)][other]
                    remaining.discard(config)
                    if not remaining:
                        queue.append(other)

    def delete(self, configs):
        """Remove vertex configurations and everything left without support."""
        self._cascade(configs)

    def delete_pair(self, cu: VertexConfig, cv: VertexConfig):
        """Forbid one configuration pair on the edge ``(cu.vertex, cv.vertex)``."""
        u, v = cu.vertex, cv.vertex
        if cu not in self.lists[u] or cv not in self.lists[v]:
            return
        self.partners[(u, v)][cu].discard(cv)
        self.partners[(v, u)][cv].discard(cu)
        orphans = []
        if not self.partners[(u, v)][cu]:
            orphans.append(cu)
        if not self.partners[(v, u)][cv]:
            orphans.append(cv)
        self._cascade(orphans)

    def allowed(self, u, v, cu):
        """Listed configurations of ``v`` compatible with ``cu`` on edge ``(u, v)``."""
        return self.partners[(u, v)].get(cu, ())

    def pairs(self, u, v):
        return [
            (cu, cv)
            for cu in sorted(self.lists[u])
            for cv in sorted(self.partners[(u, v)][cu])
        ]

    @property
    def infeasible(self):
        return any(not configs for configs in self.lists.values())

    def vertex_config_count(self):
        return sum(len(configs) for configs in self.lists.values())

    def edge_config_count(self):
        return sum(
            len(partners)
            for (u, v), by_config in self.partners.items()
            if u < v
            for partners in by_config.values()
        )

    def within_config_bound(self):
        """Every edge keeps at most ``8 * n^(2k)`` configuration pairs."""
        bound = settings.CONFIG_BOUND_FACTOR * self.g.n ** (2 * self.k)
        for u, v in self.g.edges:
            count = sum(len(p) for p in self.partners[(u, v)].values())
            if count > bound:
                logger.error(f"edge ({u}, {v}) holds {count} pairs, above {bound}")
                return False
        return True
