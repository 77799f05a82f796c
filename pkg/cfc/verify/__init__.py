from cfc.verify.checks import (
    ISOLATED_OPEN,
    NO_UNIQUE_COLOR,
    PartialColoring,
    Verdict,
    cf_neighbors,
    colored_vertices,
    coloring_palette,
    count_colored,
    is_dominating,
    is_independent,
    undominated,
    verify_cf,
    verify_proper,
)

__all__ = [
    "ISOLATED_OPEN",
    "NO_UNIQUE_COLOR",
    "PartialColoring",
    "Verdict",
    "cf_neighbors",
    "colored_vertices",
    "coloring_palette",
    "count_colored",
    "is_dominating",
    "is_independent",
    "undominated",
    "verify_cf",
    "verify_proper",
]
