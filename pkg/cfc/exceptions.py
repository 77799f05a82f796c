"""Exception hierarchy shared by every cfc subpackage."""


class CFCError(Exception):
    """Base class for all errors raised by cfc."""


class InputFormatError(CFCError, ValueError):
    """A graph, coloring, formula or role file could not be parsed."""


class InvalidGraphError(CFCError, ValueError):
    """Edges do not describe a simple graph on vertices 0..n-1."""


class InvalidVertexError(CFCError, ValueError):
    def __init__(self, vertex, n):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} is not in 0..{n - 1}")


class EdgeNotFoundError(CFCError, ValueError):
    def __init__(self, u, v):
        self.edge = (u, v)
        super().__init__(f"edge ({u}, {v}) is not in the graph")


class DisconnectedGraphError(CFCError, ValueError):
    """The operation needs a connected graph."""


class NotOuterplanarError(CFCError):
    """Some biconnected component has no outer cycle with non-crossing chords."""


class NotBipartiteError(CFCError):
    """The graph contains an odd cycle."""


class NotAPathError(CFCError, ValueError):
    """A sequence handed to the path colorer is not a path."""


class IsolatedVertexError(CFCError, ValueError):
    def __init__(self, vertices):
        self.vertices = tuple(sorted(vertices))
        super().__init__(
            f"open neighborhoods need a graph without isolated vertices, found {list(self.vertices)}"
        )


class NotDominatingError(CFCError, ValueError):
    def __init__(self, undominated):
        self.undominated = tuple(sorted(undominated))
        super().__init__(f"set does not dominate vertices {list(self.undominated)}")


class InfeasibleColoringError(CFCError):
    """A required proper coloring of a minor does not exist with the given palette."""


class UnsupportedColorCountError(CFCError, ValueError):
    """The number of colors is outside the range an algorithm is proven for."""


class InvalidFormulaError(CFCError, ValueError):
    """A formula is not a positive 3-CNF with three distinct variables per clause."""


class InvalidClauseOrdersError(CFCError, ValueError):
    """Clause orders do not list every clause of a variable exactly once."""


class BudgetExceededError(CFCError):
    """A search ran out of node or time budget before reaching a verdict."""

    def __init__(self, nodes, elapsed, reason="node budget"):
        self.nodes = nodes
        self.elapsed = elapsed
        self.reason = reason
        super().__init__(
            f"{reason} exhausted after {nodes} nodes and {elapsed:.2f} seconds"
        )


class UsageError(CFCError, ValueError):
    """A command was called without the options it needs."""
