"""Conflict-free k-coloring of outerplanar graphs for k in {1, 2}.

Atoms are processed children first. For every configuration of its incoming
separator an atom records the least number of colored vertices it and its
subtree own, plus the configurations realizing it; separator configurations
that cannot be completed inside the subtree are deleted from the table.
Every vertex is owned by the topmost atom containing it, except the root
separator vertex, which is charged when the root is finalized.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import pandas as pd

from cfc.exact.limits import FEASIBLE, INFEASIBLE
from cfc.exceptions import UnsupportedColorCountError
from cfc.graph.core import Graph, connected_components
from cfc.graph.embedding import outerplanar_embedding
from cfc.outerplanar.atoms import EDGE, Atom, AtomTree, build_atom_tree
from cfc.outerplanar.configs import VertexConfig, compatible
from cfc.outerplanar.table import FeasibleTable
from cfc.utils import settings
from cfc.utils.utils import log_time

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AtomProfile:
    component: int
    atom: int
    kind: str
    size: int
    separator: tuple[int, ...]
    anchors_before: int
    anchors_after: int
    min_cost: float
    seconds: float


@dataclass(frozen=True)
class OuterplanarSolution:
    status: str
    k: int
    minimized: bool
    coloring: Optional[dict] = None
    colored: float = math.inf
    profile: tuple[AtomProfile, ...] = field(default=())

    @property
    def feasible(self):
        return self.status == FEASIBLE

    def profile_frame(self):
        return profile_frame(self.profile)


def profile_frame(profile):
    """Per-atom separator list sizes as a DataFrame."""
    columns = [
        "component",
        "atom",
        "kind",
        "size",
        "separator",
        "anchors_before",
        "anchors_after",
        "min_cost",
        "seconds",
    ]
    rows = [
        {
            **{name: getattr(p, name) for name in columns},
            "separator": "-".join(map(str, p.separator)),
        }
        for p in profile
    ]
    return pd.DataFrame(rows, columns=columns)


def _key(x, y, cx, cy):
    return (cx, cy) if x < y else (cy, cx)


class _AtomWeights:
    """Vertex and edge weights of one atom given its processed children."""

    def __init__(self, tree: AtomTree, atom: Atom, table: FeasibleTable, minimize):
        self.atom = atom
        self.table = table
        self.minimize = minimize
        self.owned = set(atom.vertices) - set(atom.incoming_separator)
        self.vertex_children = {}
        self.edge_children = {}
        for child in atom.children:
            separator = tree.atoms[child].incoming_separator
            if len(separator) == 1:
                self.vertex_children.setdefault(separator[0], []).append(child)
            else:
                self.edge_children[separator] = child

    def vertex(self, v, config):
        """Children hanging at ``v``, plus ``v`` itself when owned and colored."""
        total = 1 if (self.minimize and v in self.owned and config.colored) else 0
        for child in self.vertex_children.get(v, ()):
            total += self.table.costs[child].get(config, math.inf)
        return total

    def edge(self, x, y, cx, cy):
        child = self.edge_children.get((min(x, y), max(x, y)))
        if child is None:
            return 0
        return self.table.costs[child].get(_key(x, y, cx, cy), math.inf)


class _FaceWalk:
    """Shortest walk around a face from a fixed first configuration.

    ``layers[i][c]`` is the least weight of positions ``i..m-1`` with
    position ``i`` set to ``c``; ``tail`` fixes the last layer.
    """

    def __init__(self, atom: Atom, weights: _AtomWeights, tail):
        self.vs = atom.vertices
        self.weights = weights
        table = weights.table
        m = len(self.vs)
        self.layers = [None] * m
        self.layers[m - 1] = tail
        for i in range(m - 2, 0, -1):
            following = self.layers[i + 1]
            layer = {}
            for c in table.lists[self.vs[i]]:
                own = weights.vertex(self.vs[i], c)
                if own == math.inf:
                    continue
                best = math.inf
                for nxt in table.allowed(self.vs[i], self.vs[i + 1], c):
                    if nxt in following:
                        best = min(
                            best,
                            weights.edge(self.vs[i], self.vs[i + 1], c, nxt) + following[nxt],
                        )
                if best < math.inf:
                    layer[c] = own + best
            self.layers[i] = layer

    def _step(self, i, previous, c):
        """Weight of moving from position ``i - 1`` to ``c`` at position ``i``."""
        return self.weights.edge(self.vs[i - 1], self.vs[i], previous, c) + self.layers[i][c]

    def start(self, first):
        """Least weight of positions ``1..m-1`` after ``first``."""
        best = math.inf
        for c in self.weights.table.allowed(self.vs[0], self.vs[1], first):
            if c in self.layers[1]:
                best = min(best, self._step(1, first, c))
        return best

    def sequence(self, first, remaining):
        """Lexicographically smallest configuration sequence of weight ``remaining``."""
        table = self.weights.table
        chosen = [first]
        for i in range(1, len(self.vs)):
            options = sorted(
                c
                for c in table.allowed(self.vs[i - 1], self.vs[i], chosen[-1])
                if c in self.layers[i]
            )
            c = next(c for c in options if self._step(i, chosen[-1], c) == remaining)
            remaining = self.layers[i][c] - self.weights.vertex(self.vs[i], c)
            chosen.append(c)
        return tuple(chosen)


def _face_vertex_separator(atom, weights, table):
    vs = atom.vertices
    last = vs[-1]
    costs, choices = {}, {}
    for first in sorted(table.lists[vs[0]]):
        base = weights.vertex(vs[0], first)
        if base == math.inf:
            costs[first] = math.inf
            continue
        tail = {}
        for c in table.allowed(vs[0], last, first):
            weight = weights.vertex(last, c) + weights.edge(last, vs[0], c, first)
            if weight < math.inf:
                tail[c] = weight
        walk = _FaceWalk(atom, weights, tail)
        best = walk.start(first)
        costs[first] = base + best
        if best < math.inf:
            choices[first] = walk.sequence(first, best)
    return costs, choices


def _face_edge_separator(atom, weights, table):
    """Separator edge is ``(vs[-1], vs[0])``; keys are ordered by vertex id."""
    vs = atom.vertices
    last = vs[-1]
    costs, choices = {}, {}
    for last_config in sorted(table.lists[last]):
        tail_weight = weights.vertex(last, last_config)
        walk = _FaceWalk(atom, weights, {last_config: tail_weight} if tail_weight < math.inf else {})
        for first in sorted(table.allowed(last, vs[0], last_config)):
            key = _key(vs[0], last, first, last_config)
            best = walk.start(first)
            costs[key] = weights.vertex(vs[0], first) + best
            if costs[key] < math.inf:
                choices[key] = walk.sequence(first, best)
    return costs, choices


def process_face_atom(tree: AtomTree, atom: Atom, table: FeasibleTable, minimize=True):
    """Record costs of a face atom and delete separator configurations it cannot complete."""
    weights = _AtomWeights(tree, atom, table, minimize)
    if atom.separator_is_edge:
        costs, choices = _face_edge_separator(atom, weights, table)
        table.costs[atom.index] = costs
        table.choices[atom.index] = choices
        for key, cost in costs.items():
            if cost == math.inf:
                table.delete_pair(*key)
    else:
        costs, choices = _face_vertex_separator(atom, weights, table)
        table.costs[atom.index] = costs
        table.choices[atom.index] = choices
        table.delete([c for c, cost in costs.items() if cost == math.inf])
    return table


def process_edge_atom(tree: AtomTree, atom: Atom, table: FeasibleTable, minimize=True):
    """Record, per configuration of the separator endpoint, the cheapest partner."""
    weights = _AtomWeights(tree, atom, table, minimize)
    u, v = atom.vertices
    costs, choices = {}, {}
    for cu in sorted(table.lists[u]):
        best, partner = math.inf, None
        for cv in sorted(table.allowed(u, v, cu)):
            weight = weights.vertex(v, cv)
            if weight < best:
                best, partner = weight, cv
        costs[cu] = weights.vertex(u, cu) + best
        if costs[cu] < math.inf:
            choices[cu] = (cu, partner)
    table.costs[atom.index] = costs
    table.choices[atom.index] = choices
    table.delete([c for c, cost in costs.items() if cost == math.inf])
    return table


def process_atom(tree: AtomTree, atom: Atom, table: FeasibleTable, minimize=True):
    if atom.kind == EDGE:
        return process_edge_atom(tree, atom, table, minimize)
    return process_face_atom(tree, atom, table, minimize)


def _anchor_count(atom: Atom, table: FeasibleTable):
    if atom.separator_is_edge:
        x, y = atom.incoming_separator
        return len(table.pairs(x, y))
    return len(table.lists[atom.incoming_separator[0]])


def _backtrack(tree: AtomTree, table: FeasibleTable, root_config: VertexConfig):
    assignment = {}
    stack = [(tree.root, root_config)]
    while stack:
        index, key = stack.pop()
        atom = tree.atoms[index]
        for v, config in zip(atom.vertices, table.choices[index][key]):
            if assignment.setdefault(v, config) != config:
                raise RuntimeError(f"atom {index} disagrees with its parent on vertex {v}")
        for child in reversed(atom.children):
            separator = tree.atoms[child].incoming_separator
            if len(separator) == 1:
                stack.append((child, assignment[separator[0]]))
            else:
                x, y = separator
                stack.append((child, (assignment[x], assignment[y])))
    return assignment


def _solve_connected(g: Graph, k, minimize, component, on_delete):
    """Returns (coloring or None, colored count, profile rows)."""
    if g.n == 1:
        return {0: 1}, 1, []
    tree = build_atom_tree(g, outerplanar_embedding(g))
    table = FeasibleTable(g, k, on_delete=on_delete)
    if not table.within_config_bound():
        logger.warning(f"component {component}: configuration lists exceed the polynomial bound")
    profile = []
    if table.infeasible:
        logger.info(f"component {component}: no configuration survives initialization")
        return None, math.inf, profile

    for index in tree.postorder():
        atom = tree.atoms[index]
        started = time.perf_counter()
        before = _anchor_count(atom, table)
        process_atom(tree, atom, table, minimize)
        finite = [c for c in table.costs[index].values() if c < math.inf]
        profile.append(
            AtomProfile(
                component=component,
                atom=index,
                kind=atom.kind,
                size=len(atom.vertices),
                separator=atom.incoming_separator,
                anchors_before=before,
                anchors_after=_anchor_count(atom, table),
                min_cost=min(finite, default=math.inf),
                seconds=time.perf_counter() - started,
            )
        )
        if table.infeasible:
            logger.info(f"component {component}: atom {index} emptied a configuration list")
            return None, math.inf, profile

    root = tree.atoms[tree.root]
    (r,) = root.incoming_separator
    costs = table.costs[tree.root]
    best, best_config = math.inf, None
    for config in sorted(table.lists[r]):
        total = costs.get(config, math.inf) + (1 if minimize and config.colored else 0)
        if total < best:
            best, best_config = total, config
    if best_config is None:
        return None, math.inf, profile

    assignment = _backtrack(tree, table, best_config)
    for u, v in g.edges:
        if not compatible(assignment[u], assignment[v], g):
            raise RuntimeError(f"backtracked configurations clash on edge ({u}, {v})")
    coloring = {v: assignment[v].chi for v in g.vertices}
    colored = sum(1 for c in coloring.values() if c)
    if minimize and colored != best:
        raise RuntimeError(f"colored {colored} vertices, expected {best}")
    logger.debug(
        f"component {component}: {len(tree)} atoms, {table.deleted} deletions, {colored} colored"
    )
    return coloring, colored, profile


@log_time
def solve_outerplanar(
    g: Graph,
    k: int,
    minimize: bool = True,
    on_delete: Optional[Callable[[VertexConfig], None]] = None,
) -> OuterplanarSolution:
    """Decide conflict-free k-colorability of an outerplanar graph.

    Components are solved independently. With ``minimize`` the returned
    coloring colors as few vertices as possible.

    Args:
        g: Outerplanar graph.
        k: 1 or 2.
        minimize: Minimize the number of colored vertices.
        on_delete: Called with every configuration the table deletes, in
            component-local vertex ids (equal to ``g``'s when connected).

    Raises:
        UnsupportedColorCountError: if ``k`` is not 1 or 2.
        NotOuterplanarError: if some component is not outerplanar.
    """
    if k not in range(1, settings.MAX_DP_COLORS + 1):
        raise UnsupportedColorCountError(
            f"the outerplanar dynamic program handles k in 1..{settings.MAX_DP_COLORS}, got {k}"
        )
    coloring = {}
    profile = []
    for component, vertices in enumerate(connected_components(g)):
        sub, mapping = g.induced_subgraph(vertices)
        local, _, rows = _solve_connected(sub, k, minimize, component, on_delete)
        profile.extend(rows)
        if local is None:
            logger.info(f"no conflict-free {k}-coloring: component {component} is infeasible")
            return OuterplanarSolution(INFEASIBLE, k, minimize, profile=tuple(profile))
        back = {new: old for old, new in mapping.items()}
        coloring.update({back[v]: c for v, c in local.items()})
    coloring = dict(sorted(coloring.items()))
    colored = sum(1 for c in coloring.values() if c)
    logger.info(f"conflict-free {k}-coloring with {colored} colored vertices on n={g.n}")
    return OuterplanarSolution(
        FEASIBLE, k, minimize, coloring=coloring, colored=colored, profile=tuple(profile)
    )
