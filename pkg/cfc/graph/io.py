"""Text formats for graphs, colorings and role labels, plus DOT export.

Graph file: a header line ``n m`` followed by ``m`` lines ``u v``.
Coloring file: lines ``v c`` with ``c >= 1``; unlisted vertices are uncolored.
Role file: lines ``v role``.
Lines starting with ``#`` are comments everywhere.
"""

from typing import Mapping

from networkx.drawing.nx_pydot import to_pydot

from cfc.exceptions import InputFormatError, InvalidGraphError
from cfc.graph.core import Graph
from cfc.utils.utils import iter_data_lines, read_text, write_text

# Fill colors for DOT export; index 0 is uncolored.
DOT_PALETTE = (
    "white",
    "tomato",
    "skyblue",
    "palegreen",
    "gold",
    "orchid",
    "sandybrown",
    "lightgray",
    "turquoise",
)


def _ints(tokens, number, expected):
    if len(tokens) != expected:
        raise InputFormatError(
            f"line {number}: expected {expected} integers, got {' '.join(tokens)!r}"
        )
    try:
        return [int(token) for token in tokens]
    except ValueError as exc:
        raise InputFormatError(f"line {number}: {exc}") from exc


def parse_graph(text) -> Graph:
    lines = iter_data_lines(text)
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise InputFormatError("graph file is empty") from None
    n, m = _ints(tokens, number, 2)
    if n < 0 or m < 0:
        raise InputFormatError(f"line {number}: negative size")
    edges = []
    for number, tokens in lines:
        u, v = _ints(tokens, number, 2)
        edges.append((u, v))
    if len(edges) != m:
        raise InputFormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except InvalidGraphError as exc:
        raise InputFormatError(str(exc)) from exc


def format_graph(g: Graph, comment=None):
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(read_text(path))


def write_graph(path, g: Graph, comment=None):
    return write_text(path, format_graph(g, comment))


def parse_coloring(text, n=None):
    colors = {}
    for number, tokens in iter_data_lines(text):
        v, c = _ints(tokens, number, 2)
        if v < 0 or (n is not None and v >= n):
            raise InputFormatError(f"line {number}: vertex {v} out of range")
        if c < 1:
            raise InputFormatError(f"line {number}: colors must be at least 1")
        if v in colors:
            raise InputFormatError(f"line {number}: vertex {v} colored twice")
        colors[v] = c
    return colors


def format_coloring(coloring: Mapping[int, int]):
    return "".join(f"{v} {c}\n" for v, c in sorted(coloring.items()) if c >= 1)


def read_coloring(path, n=None):
    return parse_coloring(read_text(path), n)


def write_coloring(path, coloring):
    return write_text(path, format_coloring(coloring))


def parse_roles(text):
    roles = {}
    for number, tokens in iter_data_lines(text):
        if len(tokens) != 2:
            raise InputFormatError(f"line {number}: expected 'v role'")
        try:
            roles[int(tokens[0])] = tokens[1]
        except ValueError as exc:
            raise InputFormatError(f"line {number}: {exc}") from exc
    return roles


def format_roles(roles: Mapping[int, str]):
    return "".join(f"{v} {role}\n" for v, role in sorted(roles.items()))


def to_dot(g: Graph, coloring=None, roles=None, name="G"):
    """Render ``g`` as DOT; colored vertices get a fill color and a label."""
    graph = g.to_networkx()
    graph.graph["name"] = name
    coloring = coloring or {}
    roles = roles or {}
    for v in g.vertices:
        color = coloring.get(v, 0)
        label = f"{v}" if not color else f"{v}:{color}"
        if v in roles:
            label = f"{label}\\n{roles[v]}"
        graph.nodes[v]["label"] = f'"{label}"'
        if color:
            graph.nodes[v]["style"] = "filled"
            graph.nodes[v]["fillcolor"] = DOT_PALETTE[color % len(DOT_PALETTE) or 1]
            graph.nodes[v]["cfc_color"] = color
    return to_pydot(graph).to_string()


def write_dot(path, g: Graph, coloring=None, roles=None):
    return write_text(path, to_dot(g, coloring, roles))
