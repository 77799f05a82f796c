from cfc.exact.dominating import greedy_dominating_set, min_dominating_set
from cfc.exact.limits import (
    FEASIBLE,
    INFEASIBLE,
    SearchBudget,
    SearchLimits,
    SearchResult,
)
from cfc.exact.proper import chromatic_number, proper_coloring, smallest_last_coloring
from cfc.exact.sat import (
    Formula,
    format_formula,
    one_in_three_sat,
    parse_formula,
    read_formula,
    write_formula,
)
from cfc.exact.search import (
    MUST_COLOR,
    MUST_DIFFER,
    ConflictFreeSearch,
    chi_cf,
    exists_cf_k,
    gamma_cf_k,
)

__all__ = [
    "FEASIBLE",
    "INFEASIBLE",
    "MUST_COLOR",
    "MUST_DIFFER",
    "ConflictFreeSearch",
    "Formula",
    "SearchBudget",
    "SearchLimits",
    "SearchResult",
    "chi_cf",
    "chromatic_number",
    "exists_cf_k",
    "format_formula",
    "gamma_cf_k",
    "greedy_dominating_set",
    "min_dominating_set",
    "one_in_three_sat",
    "parse_formula",
    "proper_coloring",
    "read_formula",
    "smallest_last_coloring",
    "write_formula",
]
