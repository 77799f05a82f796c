from cfc.heuristic.elimination import (
    EliminationRound,
    EliminationTrace,
    color_isolated_paths,
    iterated_elimination,
)

__all__ = [
    "EliminationRound",
    "EliminationTrace",
    "color_isolated_paths",
    "iterated_elimination",
]
