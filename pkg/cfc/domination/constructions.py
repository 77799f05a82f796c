"""Conflict-free colorings built from proper colorings of contracted minors.

Closed neighborhoods: contract every vertex outside a dominating set ``D``
into a neighbor in ``D`` and properly color the minor; the colors of ``D``
alone form a conflict-free coloring. Open neighborhoods: do the same once
per side of a split of the vertex set, so that each side serves the other.
"""

import logging
from typing import Iterable, Optional

from cfc.exact.dominating import min_dominating_set
from cfc.exact.limits import SearchLimits
from cfc.exact.proper import proper_coloring, smallest_last_coloring
from cfc.exceptions import (
    BudgetExceededError,
    InfeasibleColoringError,
    IsolatedVertexError,
    NotDominatingError,
)
from cfc.graph.core import (
    Graph,
    bipartition,
    contract_into,
    independent_dominating_set,
)
from cfc.utils import settings
from cfc.verify.checks import undominated

logger = logging.getLogger(__name__)


def _owners(g: Graph, keep, merged):
    """Each merged vertex goes to its smallest-id neighbor in ``keep``."""
    owner = {v: v for v in keep}
    for v in merged:
        candidates = g.adjacency[v] & keep
        if not candidates:
            raise NotDominatingError([v])
        owner[v] = min(candidates)
    return owner


def _color_minor(g: Graph, owner, k, limits, fallback):
    """Proper ``k``-coloring of the contraction, read back on the representatives."""
    minor, mapping = contract_into(g, owner)
    try:
        result = proper_coloring(minor, k, limits)
    except BudgetExceededError:
        if not fallback:
            raise
        logger.warning(
            f"exact proper {k}-coloring of a {minor.n}-vertex minor ran out of budget, "
            f"using the smallest-last greedy coloring"
        )
        minor_colors = smallest_last_coloring(minor)
        used = max(minor_colors.values(), default=0)
        if used > settings.GREEDY_PLANAR_BOUND:
            logger.warning(
                f"smallest-last used {used} colors, above the planar bound of "
                f"{settings.GREEDY_PLANAR_BOUND}; the input is not planar"
            )
    else:
        if not result.feasible:
            raise InfeasibleColoringError(
                f"the contracted minor on {minor.n} vertices has no proper {k}-coloring"
            )
        minor_colors = result.coloring
    return {v: minor_colors[mapping[v]] for v in g.vertices if owner.get(v) == v}


def cf_from_dominating_set(
    g: Graph,
    dominators: Iterable[int],
    k: int,
    limits: Optional[SearchLimits] = None,
    fallback=False,
):
    """Color exactly the vertices of ``dominators`` conflict-free.

    Args:
        g: Input graph.
        dominators: A dominating set of ``g``.
        k: Palette for the proper coloring of the minor.
        limits: Budget of the proper coloring search.
        fallback: On budget exhaustion, color the minor greedily instead of
            raising (the palette may then exceed ``k``).

    Raises:
        NotDominatingError: if some vertex has no member of ``dominators`` in
            its closed neighborhood.
        InfeasibleColoringError: if the minor is not properly ``k``-colorable.
    """
    dominators = frozenset(dominators)
    for v in dominators:
        g.check_vertex(v)
    missing = undominated(g, dominators)
    if missing:
        raise NotDominatingError(missing)
    owner = _owners(g, dominators, set(g.vertices) - dominators)
    colors = _color_minor(g, owner, k, limits, fallback)
    return {v: colors.get(v, 0) for v in g.vertices}


def planar_cf4(g: Graph, limits: Optional[SearchLimits] = None, fallback=True):
    """Conflict-free 4-coloring of a planar graph coloring a minimum dominating set."""
    dominators = min_dominating_set(g, limits)
    logger.info(f"minimum dominating set of size {len(dominators)}")
    return cf_from_dominating_set(g, dominators, settings.PLANAR_CF_COLORS, limits, fallback)


def outerplanar_cf3(g: Graph, limits: Optional[SearchLimits] = None, fallback=True):
    """Conflict-free 3-coloring of an outerplanar graph coloring a minimum dominating set."""
    dominators = min_dominating_set(g, limits)
    logger.info(f"minimum dominating set of size {len(dominators)}")
    return cf_from_dominating_set(
        g, dominators, settings.OUTERPLANAR_CF_COLORS, limits, fallback
    )


def _require_no_isolated(g: Graph):
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(isolated)


def open_cf_bipartite4(
    g: Graph,
    limits: Optional[SearchLimits] = None,
    k: int = settings.OPEN_BIPARTITE_COLORS,
    fallback=True,
):
    """Open conflict-free coloring of a bipartite planar graph with one shared palette.

    For each side, the other side is merged into smallest-id neighbors and the
    resulting minor is properly colored; the side keeps its minor colors. Every
    vertex ends up colored. ``k=3`` suffices for bipartite outerplanar graphs.

    Raises:
        IsolatedVertexError: if some vertex has no neighbor.
        NotBipartiteError: if the graph has an odd cycle.
        InfeasibleColoringError: if a minor is not properly ``k``-colorable.
    """
    _require_no_isolated(g)
    side_one, side_two = bipartition(g)
    coloring = {}
    for keep, merged in ((side_one, side_two), (side_two, side_one)):
        coloring.update(_color_minor(g, _owners(g, keep, merged), k, limits, fallback))
    return dict(sorted(coloring.items()))


def open_cf_planar8(g: Graph, limits: Optional[SearchLimits] = None, fallback=True):
    """Open conflict-free coloring of a planar graph with two disjoint 4-color palettes.

    An independent dominating set takes colors 1..4 from the minor where the
    rest is merged into it; the rest takes colors 5..8 from the minor where the
    independent set is merged into its neighbors.

    Raises:
        IsolatedVertexError: if some vertex has no neighbor.
    """
    _require_no_isolated(g)
    independent = independent_dominating_set(g)
    rest = frozenset(g.vertices) - independent
    side = settings.OPEN_PLANAR_SIDE_COLORS
    first = _color_minor(g, _owners(g, independent, rest), side, limits, fallback)
    second = _color_minor(g, _owners(g, rest, independent), side, limits, fallback)
    offset = max([side, *first.values()])
    coloring = dict(first)
    coloring.update({v: c + offset for v, c in second.items()})
    if offset > side:
        logger.warning(f"palettes widened to {offset} + {max(second.values())} colors")
    return dict(sorted(coloring.items()))
