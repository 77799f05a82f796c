"""Iterated elimination of distance-3 sets.

Each round picks, per residual component, the smallest vertex and then keeps
adding the smallest vertex at distance exactly 3 from the chosen set (and at
least 3 from all of it) until none is left. The set gets a fresh color, its
closed neighborhood leaves the residual graph, and components that are plain
paths are set aside. All set-aside paths share one last color, placed on the
middle vertex of every consecutive triple.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx
import pandas as pd

from cfc.exceptions import NotAPathError
from cfc.graph.core import Graph
from cfc.utils.utils import log_time

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EliminationRound:
    color: int
    dominators: tuple[int, ...]
    removed: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class EliminationTrace:
    initial_paths: tuple[tuple[int, ...], ...] = ()
    rounds: tuple[EliminationRound, ...] = ()
    final_path_color: Optional[int] = None

    @property
    def paths(self):
        collected = list(self.initial_paths)
        for elimination_round in self.rounds:
            collected.extend(elimination_round.paths)
        return collected

    def lines(self):
        """One audit line per round, then the path coloring line."""
        out = [f"paths-initial {_format_paths(self.initial_paths)}"]
        for r in self.rounds:
            out.append(
                f"round color={r.color} D={','.join(map(str, r.dominators))} "
                f"removed={len(r.removed)} paths={_format_paths(r.paths)}"
            )
        if self.final_path_color is not None:
            out.append(f"paths color={self.final_path_color} count={len(self.paths)}")
        return out

    def to_frame(self):
        return pd.DataFrame(
            [
                {
                    "color": r.color,
                    "dominators": len(r.dominators),
                    "removed": len(r.removed),
                    "paths": len(r.paths),
                }
                for r in self.rounds
            ],
            columns=["color", "dominators", "removed", "paths"],
        )


def _format_paths(paths):
    if not paths:
        return "-"
    return ";".join("-".join(map(str, p)) for p in paths)


def _strip_paths(residual: nx.Graph):
    """Remove and return components that are paths (acyclic, max degree 2)."""
    stripped = []
    for component in sorted(nx.connected_components(residual), key=min):
        sub = residual.subgraph(component)
        if any(d > 2 for _, d in sub.degree()):
            continue
        if sub.number_of_edges() != len(component) - 1:
            continue
        stripped.append(_path_order(sub))
    for path in stripped:
        residual.remove_nodes_from(path)
    return stripped


def _path_order(path_graph: nx.Graph):
    """Walk a path component from its smaller endpoint."""
    if path_graph.number_of_nodes() == 1:
        return tuple(path_graph.nodes)
    ends = sorted(v for v, d in path_graph.degree() if d == 1)
    order = [ends[0]]
    previous = None
    while len(order) < path_graph.number_of_nodes():
        step = next(w for w in path_graph.neighbors(order[-1]) if w != previous)
        previous = order[-1]
        order.append(step)
    return tuple(order)


def _distance_three_set(residual: nx.Graph):
    """Seed each component with its smallest vertex, then grow at distance 3."""
    dominators = [min(c) for c in sorted(nx.connected_components(residual), key=min)]
    reach = {}
    for seed in dominators:
        for v, d in nx.single_source_shortest_path_length(residual, seed, cutoff=3).items():
            reach[v] = min(d, reach.get(v, d))
    while True:
        candidates = [v for v, d in reach.items() if d == 3]
        if not candidates:
            return sorted(dominators)
        w = min(candidates)
        dominators.append(w)
        for v, d in nx.single_source_shortest_path_length(residual, w, cutoff=3).items():
            reach[v] = min(d, reach.get(v, d))


def color_isolated_paths(
    paths: Sequence[Sequence[int]], color: int, g: Optional[Graph] = None
):
    """Color the middle vertex of every consecutive triple of each path.

    A path on ``L`` vertices is read as part of a path on a multiple of three
    vertices; when ``L`` is one short a virtual vertex is trimmed at the start,
    when two short one at each end. Thus P3 -> {1}, P4 -> {0, 3}, P5 -> {0, 3},
    P1 -> {0}.

    Raises:
        NotAPathError: if a sequence is empty, repeats a vertex, or (when ``g``
            is given) has consecutive vertices that are not adjacent.
    """
    if color < 1:
        raise ValueError("path color must be at least 1")
    coloring = {}
    for path in paths:
        path = tuple(path)
        if not path or len(set(path)) != len(path):
            raise NotAPathError(f"{path} is not a simple path")
        if g is not None and any(
            not g.has_edge(a, b) for a, b in zip(path, path[1:])
        ):
            raise NotAPathError(f"{path} skips an edge of the graph")
        offset = 1 if len(path) % 3 == 0 else 0
        for i, v in enumerate(path):
            coloring[v] = color if i % 3 == offset else 0
    return coloring


@log_time
def iterated_elimination(g: Graph):
    """Run the elimination heuristic.

    Returns:
        (coloring, colors_used, trace) where coloring maps every vertex to a
        color (0 for uncolored).
    """
    residual = g.to_networkx()
    initial_paths = tuple(_strip_paths(residual))
    coloring = {v: 0 for v in g.vertices}
    rounds = []
    color = 0
    while residual.number_of_nodes():
        color += 1
        dominators = _distance_three_set(residual)
        removed = set(dominators)
        for v in dominators:
            coloring[v] = color
            removed.update(residual.neighbors(v))
        residual.remove_nodes_from(removed)
        paths = tuple(_strip_paths(residual))
        rounds.append(
            EliminationRound(
                color=color,
                dominators=tuple(dominators),
                removed=tuple(sorted(removed)),
                paths=paths,
            )
        )
        logger.debug(
            f"round {color}: |D|={len(dominators)}, removed {len(removed)}, stripped {len(paths)} paths"
        )
    trace = EliminationTrace(initial_paths=initial_paths, rounds=tuple(rounds))
    all_paths = trace.paths
    if all_paths:
        color += 1
        coloring.update(color_isolated_paths(all_paths, color))
        trace = EliminationTrace(
            initial_paths=initial_paths, rounds=tuple(rounds), final_path_color=color
        )
    colors_used = len({c for c in coloring.values() if c})
    logger.info(f"iterated elimination used {colors_used} colors on n={g.n}")
    return coloring, colors_used, trace
