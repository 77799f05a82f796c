"""Triangulations of the convex n-gon on vertices 0..n-1."""

import logging
from functools import lru_cache
from math import comb
from typing import Optional

from cfc.exact.limits import SearchLimits
from cfc.exact.search import exists_cf_k
from cfc.graph.core import Graph
from cfc.utils import settings

logger = logging.getLogger(__name__)


def catalan(x):
    return comb(2 * x, x) // (x + 1)


def triangulation_count(n):
    """Number of triangulations of an n-gon."""
    return catalan(n - 2) if n >= 3 else 1


@lru_cache(maxsize=None)
def _interval_triangulations(i, j):
    """Chord sets triangulating the polygon on consecutive vertices i..j."""
    if j - i < 2:
        return (frozenset(),)
    found = []
    for apex in range(i + 1, j):
        left = {(i, apex)} if apex > i + 1 else set()
        right = {(apex, j)} if j > apex + 1 else set()
        for lower in _interval_triangulations(i, apex):
            for upper in _interval_triangulations(apex, j):
                found.append(frozenset(left | right | lower | upper))
    return tuple(found)


def enumerate_polygon_triangulations(n):
    """All chord sets of n-gon triangulations, as sorted tuples in lexicographic order."""
    if n < 3:
        raise ValueError(f"a polygon needs at least three vertices, got {n}")
    return sorted(tuple(sorted(chords)) for chords in _interval_triangulations(0, n - 1))


def fan_triangulation(n):
    """Every chord from vertex 0."""
    return tuple((0, v) for v in range(2, n - 1))


def polygon_graph(n, chords) -> Graph:
    """Outer cycle 0..n-1 plus ``chords``."""
    cycle = [(v, (v + 1) % n) for v in range(n)]
    return Graph.from_edges(n, cycle + list(chords))


def find_outerplanar_requiring_2(
    n=settings.O9_SIZE, limits: Optional[SearchLimits] = None
) -> Optional[Graph]:
    """First maximal outerplanar graph on ``n`` vertices with no conflict-free 1-coloring.

    Triangulations are tried in lexicographic order of their chord sets.
    Returns ``None`` with a warning if every triangulation is 1-colorable.
    """
    for chords in enumerate_polygon_triangulations(n):
        g = polygon_graph(n, chords)
        if not exists_cf_k(g, 1, limits=limits).feasible:
            logger.info(f"n={n}: chords {chords} need two colors")
            return g
    logger.warning(
        f"all {triangulation_count(n)} maximal outerplanar graphs on {n} vertices are conflict-free 1-colorable"
    )
    return None
