from cfc.domination.constraints import ForcedFact, open_degree_constraints
from cfc.domination.constructions import (
    cf_from_dominating_set,
    open_cf_bipartite4,
    open_cf_planar8,
    outerplanar_cf3,
    planar_cf4,
)

__all__ = [
    "ForcedFact",
    "cf_from_dominating_set",
    "open_cf_bipartite4",
    "open_cf_planar8",
    "open_degree_constraints",
    "outerplanar_cf3",
    "planar_cf4",
]
