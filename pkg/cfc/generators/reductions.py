"""Gadget constructions that carry a hardness argument.

``gen_reduction_1color`` turns a positive 3-CNF formula into a graph that is
conflict-free 1-colorable exactly when the formula is 1-in-3 satisfiable.
``gen_coloring_reduction`` and ``gen_open_reduction`` turn a graph into one
whose conflict-free (resp. open conflict-free) chromatic number follows its
proper chromatic number.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from cfc.exact.sat import Formula
from cfc.exceptions import InvalidClauseOrdersError
from cfc.generators.families import gk_edge_list
from cfc.graph.core import Graph
from cfc.utils import settings

logger = logging.getLogger(__name__)

CYCLE_LENGTH = 12
CLAUSE_LENGTH = 4
TRUE_POSITIONS = (1, 4, 7, 10)
FALSE_COLORED_POSITIONS = (3, 6, 9, 12)
UPPER_TRUE = 1
LOWER_TRUE = 7
COLORED_CLAUSE_POSITION = 3

ORIGINAL = "original"
GADGET = "gadget"
PENDANT = "pendant"
SUBDIVISION = "subdivision"


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    roles: dict = field(default_factory=dict)

    def with_role(self, role):
        return sorted(v for v, r in self.roles.items() if r == role)


@dataclass(frozen=True)
class ClauseOrders:
    """Per variable, the clauses attached to its upper and to its lower true vertex."""

    upper: tuple[tuple[int, ...], ...]
    lower: tuple[tuple[int, ...], ...]

    def validate(self, formula: Formula):
        if len(self.upper) != formula.nvars or len(self.lower) != formula.nvars:
            raise InvalidClauseOrdersError(
                f"orders cover {len(self.upper)}/{len(self.lower)} variables, formula has {formula.nvars}"
            )
        for i in range(formula.nvars):
            listed = list(self.upper[i]) + list(self.lower[i])
            if sorted(listed) != formula.clauses_of(i):
                raise InvalidClauseOrdersError(
                    f"variable {i + 1}: orders list clauses {listed}, "
                    f"expected each of {formula.clauses_of(i)} exactly once"
                )
        return self


def default_clause_orders(formula: Formula) -> ClauseOrders:
    """Every clause on the upper side, in index order."""
    return ClauseOrders(
        upper=tuple(tuple(formula.clauses_of(i)) for i in range(formula.nvars)),
        lower=tuple(() for _ in range(formula.nvars)),
    )


def variable_vertex(i, position):
    """Id of z_{i,position} for 0-based variable ``i`` and 1-based position."""
    return CYCLE_LENGTH * i + position - 1


def clause_vertex(formula: Formula, j, position):
    """Id of c_{j,position} for 0-based clause ``j`` and 1-based position."""
    return CYCLE_LENGTH * formula.nvars + CLAUSE_LENGTH * j + position - 1


def gen_reduction_1color(
    formula: Formula, orders: Optional[ClauseOrders] = None
) -> LabeledGraph:
    """Variable 12-cycles and clause 4-cycles joined at true vertices.

    Roles look like ``z2.4-true``, ``z2.5-false`` and ``c1.3-clause`` with
    1-based variable, clause and position numbers.

    Raises:
        InvalidClauseOrdersError: if ``orders`` does not split each variable's
            clauses between its two sides.
    """
    orders = (orders or default_clause_orders(formula)).validate(formula)
    edges = []
    roles = {}
    for i in range(formula.nvars):
        for p in range(1, CYCLE_LENGTH + 1):
            q = p % CYCLE_LENGTH + 1
            edges.append((variable_vertex(i, p), variable_vertex(i, q)))
            kind = "true" if p in TRUE_POSITIONS else "false"
            roles[variable_vertex(i, p)] = f"z{i + 1}.{p}-{kind}"
    for j in range(len(formula.clauses)):
        for p in range(1, CLAUSE_LENGTH + 1):
            q = p % CLAUSE_LENGTH + 1
            edges.append((clause_vertex(formula, j, p), clause_vertex(formula, j, q)))
            roles[clause_vertex(formula, j, p)] = f"c{j + 1}.{p}-clause"
    for i in range(formula.nvars):
        for j in orders.upper[i]:
            edges.append((clause_vertex(formula, j, 1), variable_vertex(i, UPPER_TRUE)))
        for j in orders.lower[i]:
            edges.append((clause_vertex(formula, j, 1), variable_vertex(i, LOWER_TRUE)))
    n = CYCLE_LENGTH * formula.nvars + CLAUSE_LENGTH * len(formula.clauses)
    logger.debug(f"1-color reduction: {formula.nvars} variables, {len(formula.clauses)} clauses, n={n}")
    return LabeledGraph(Graph.from_edges(n, edges), roles)


def coloring_from_assignment(formula: Formula, assignment: Sequence[bool]):
    """The conflict-free 1-coloring a 1-in-3 satisfying assignment induces."""
    if len(assignment) != formula.nvars:
        raise ValueError(f"assignment has {len(assignment)} values for {formula.nvars} variables")
    n = CYCLE_LENGTH * formula.nvars + CLAUSE_LENGTH * len(formula.clauses)
    coloring = {v: 0 for v in range(n)}
    for i, value in enumerate(assignment):
        positions = TRUE_POSITIONS if value else FALSE_COLORED_POSITIONS
        for p in positions:
            coloring[variable_vertex(i, p)] = 1
    for j in range(len(formula.clauses)):
        coloring[clause_vertex(formula, j, COLORED_CLAUSE_POSITION)] = 1
    return coloring


def gen_coloring_reduction(g: Graph, k: int) -> LabeledGraph:
    """Hang G_k copies on vertices and G_{k-1} copies on edges of ``g``.

    Two copies of G_k are joined completely to every vertex and two copies of
    G_{k-1} to both ends of every edge. A proper k-coloring of ``g`` on the
    ``original`` vertices is then a conflict-free k-coloring of the result.
    """
    if not 2 <= k <= settings.MAX_GK:
        raise ValueError(f"the coloring reduction needs 2 <= k <= {settings.MAX_GK}, got {k}")
    edges = list(g.edges)
    roles = {v: ORIGINAL for v in g.vertices}
    size = g.n

    def attach(sub_k, anchors):
        nonlocal size
        sub_n, sub_edges = gk_edge_list(sub_k)
        edges.extend((u + size, v + size) for u, v in sub_edges)
        edges.extend((a, size + w) for a in anchors for w in range(sub_n))
        roles.update({size + w: GADGET for w in range(sub_n)})
        size += sub_n

    for v in g.vertices:
        for _ in range(2):
            attach(k, (v,))
    for u, v in g.edges:
        for _ in range(2):
            attach(k - 1, (u, v))
    return LabeledGraph(Graph.from_edges(size, edges), roles)


def gen_open_reduction(g: Graph) -> LabeledGraph:
    """Add a pendant to every vertex and subdivide every edge.

    Pendants take ids ``n..2n-1`` (pendant of ``v`` is ``n + v``) and the
    subdivision vertex of the ``e``-th edge is ``2n + e``. The open
    conflict-free chromatic number of the result equals the chromatic number
    of ``g``.
    """
    n = g.n
    edges = [(v, n + v) for v in g.vertices]
    roles = {v: ORIGINAL for v in g.vertices}
    roles.update({n + v: PENDANT for v in g.vertices})
    for e, (u, v) in enumerate(g.edges):
        middle = 2 * n + e
        edges.extend([(u, middle), (middle, v)])
        roles[middle] = SUBDIVISION
    return LabeledGraph(Graph.from_edges(2 * n + g.m, edges), roles)
