# Exact search budgets
DEFAULT_NODE_BUDGET = 50_000_000
DEFAULT_TIME_BUDGET = 600.0
TIME_CHECK_INTERVAL = 1024

# Outerplanar dynamic program
MAX_DP_COLORS = 2
CONFIG_BOUND_FACTOR = 8

# Generators
MAX_GK = 4
O9_SIZE = 9
DEFAULT_EDGE_KEEP_PROB = 0.7
DEFAULT_OUTER_DROP_PROB = 0.0
DEFAULT_PLANAR_DELETE_PROB = 0.2

# Oracles
SAT_MAX_VARS = 25

# Palettes
PLANAR_CF_COLORS = 4
OUTERPLANAR_CF_COLORS = 3
OPEN_BIPARTITE_COLORS = 4
OPEN_PLANAR_SIDE_COLORS = 4
GREEDY_PLANAR_BOUND = 6

# Logging
LOG_FORMAT = "%(levelname)s: %(message)s"

MODES = ("closed", "open")

EXIT_CODES = {
    "ok": 0,
    "invalid": 1,
    "usage": 2,
    "budget": 3,
}
