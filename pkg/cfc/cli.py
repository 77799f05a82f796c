"""Command-line entry point: ``cfc <command> ...``.

Every command ends by printing ``RESULT <status> colors=<c> colored=<m>`` on
standard output. Exit codes: 0 success, 1 invalid or infeasible, 2 bad input
or usage, 3 search budget exhausted.
"""

import argparse
import logging
import sys

from cfc.domination import (
    open_cf_bipartite4,
    open_cf_planar8,
    outerplanar_cf3,
    planar_cf4,
)
from cfc.exact import (
    SearchLimits,
    chi_cf,
    exists_cf_k,
    gamma_cf_k,
    min_dominating_set,
    proper_coloring,
    read_formula,
)
from cfc.exceptions import (
    BudgetExceededError,
    CFCError,
    InfeasibleColoringError,
    UsageError,
)
from cfc.generators import (
    find_outerplanar_requiring_2,
    gen_complete,
    gen_coloring_reduction,
    gen_cycle,
    gen_gk,
    gen_kn_minus_triangle,
    gen_open_reduction,
    gen_path,
    gen_random_bipartite_planar,
    gen_random_outerplanar,
    gen_random_planar,
    gen_reduction_1color,
    gen_star,
)
from cfc.graph import (
    format_coloring,
    format_graph,
    format_roles,
    read_coloring,
    read_graph,
    write_coloring,
    write_dot,
)
from cfc.heuristic import iterated_elimination
from cfc.logging import LoggerManager
from cfc.outerplanar import solve_outerplanar
from cfc.utils import settings
from cfc.utils.utils import write_text
from cfc.verify import coloring_palette, count_colored, verify_cf

logger = logging.getLogger(__name__)

OK = "ok"
VALID = "valid"
INVALID = "invalid"
FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
BUDGET = "budget-exceeded"
ERROR = "error"

EXACT_TASKS = ("chi", "gamma", "proper", "domset")
DOMINATE_TASKS = ("cf4", "cf3", "open3", "open4", "open8")
GEN_FAMILIES = (
    "gk",
    "knm3",
    "path",
    "cycle",
    "star",
    "complete",
    "reduction1",
    "random-outerplanar",
    "random-planar",
    "random-bipartite-planar",
    "o9",
    "gk-reduction",
    "open-reduction",
)


def _add_budget_arguments(parser):
    parser.add_argument(
        "--node-budget", type=int, default=settings.DEFAULT_NODE_BUDGET,
        help="Maximum number of search-tree nodes",
    )
    parser.add_argument(
        "--time-budget", type=float, default=settings.DEFAULT_TIME_BUDGET,
        help="Maximum wall-clock seconds",
    )


def _add_output_arguments(parser):
    parser.add_argument("--out", help="Write the result here instead of standard output")
    parser.add_argument("--dot", help="Also write a DOT rendering to this path")


def parse_args(argv=None):
    parser = argparse.ArgumentParser(
        prog="cfc", description="Conflict-free graph coloring toolkit."
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="Log info (-v) or debug (-vv) messages to standard error",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Check a coloring")
    verify.add_argument("--graph", required=True)
    verify.add_argument("--coloring", required=True)
    verify.add_argument("--mode", choices=settings.MODES, default="closed")
    verify.add_argument("--dot", help="Write a DOT rendering to this path")

    exact = commands.add_parser("exact", help="Exact searches")
    exact.add_argument("task", choices=EXACT_TASKS)
    exact.add_argument("--graph", required=True)
    exact.add_argument("--k", type=int)
    exact.add_argument("--mode", choices=settings.MODES, default="closed")
    _add_budget_arguments(exact)
    _add_output_arguments(exact)

    heuristic = commands.add_parser("heuristic", help="Iterated elimination of distance-3 sets")
    heuristic.add_argument("--graph", required=True)
    heuristic.add_argument("--trace", action="store_true", help="Print one line per round")
    _add_output_arguments(heuristic)

    dp = commands.add_parser("dp", help="Outerplanar dynamic program")
    dp.add_argument("--graph", required=True)
    dp.add_argument("--k", type=int, required=True, choices=range(1, settings.MAX_DP_COLORS + 1))
    dp.add_argument("--minimize", action="store_true")
    dp.add_argument("--profile", action="store_true", help="Print per-atom list sizes")
    _add_output_arguments(dp)

    dominate = commands.add_parser("dominate-color", help="Colorings from dominating sets and minors")
    dominate.add_argument("construction", choices=DOMINATE_TASKS)
    dominate.add_argument("--graph", required=True)
    _add_budget_arguments(dominate)
    _add_output_arguments(dominate)

    gen = commands.add_parser("gen", help="Generate graphs")
    gen.add_argument("family", choices=GEN_FAMILIES)
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--formula", help="Formula file for reduction1")
    gen.add_argument("--graph", help="Input graph for gk-reduction and open-reduction")
    gen.add_argument("--roles", help="Write vertex roles to this path")
    gen.add_argument("--keep-prob", type=float, default=settings.DEFAULT_EDGE_KEEP_PROB)
    gen.add_argument("--delete-prob", type=float, default=settings.DEFAULT_PLANAR_DELETE_PROB)
    _add_budget_arguments(gen)
    _add_output_arguments(gen)

    return parser.parse_args(argv)


def _limits(args):
    return SearchLimits(node_budget=args.node_budget, time_budget=args.time_budget)


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{args.command} needs --{name} here")
    return value


def _emit(text, path):
    if path:
        write_text(path, text)
    else:
        sys.stdout.write(text)


def _result_line(status, coloring=None):
    coloring = coloring or {}
    return (
        f"RESULT {status} colors={len(coloring_palette(coloring))} "
        f"colored={count_colored(coloring)}"
    )


def _finish(args, g, status, coloring=None):
    if coloring is not None and status in (FEASIBLE, OK, VALID):
        if getattr(args, "out", None):
            write_coloring(args.out, coloring)
        else:
            sys.stdout.write(format_coloring(coloring))
    if getattr(args, "dot", None):
        write_dot(args.dot, g, coloring)
    return status, coloring


def run_verify(args):
    g = read_graph(args.graph)
    coloring = read_coloring(args.coloring, g.n)
    verdict = verify_cf(g, coloring, args.mode)
    for v, reason in verdict.violations:
        logger.info(f"vertex {v}: {reason}")
    if args.dot:
        write_dot(args.dot, g, coloring)
    return (VALID if verdict.valid else INVALID), coloring


def run_exact(args):
    g = read_graph(args.graph)
    limits = _limits(args)
    if args.task == "domset":
        dominators = min_dominating_set(g, limits)
        return _finish(args, g, FEASIBLE, {v: 1 for v in sorted(dominators)})
    if args.task == "chi" and args.k is None:
        result = chi_cf(g, args.mode, limits)
    elif args.task == "chi":
        result = exists_cf_k(g, args.k, args.mode, limits)
    elif args.task == "gamma":
        result = gamma_cf_k(g, _need(args, "k"), args.mode, limits)
    else:
        result = proper_coloring(g, _need(args, "k"), limits)
    logger.info(f"{args.task}: {result.status} after {result.nodes} nodes")
    if not result.feasible:
        return INFEASIBLE, None
    return _finish(args, g, FEASIBLE, result.coloring)


def run_heuristic(args):
    g = read_graph(args.graph)
    coloring, _, trace = iterated_elimination(g)
    if args.trace:
        sys.stdout.write("".join(f"# {line}\n" for line in trace.lines()))
    return _finish(args, g, FEASIBLE, coloring)


def run_dp(args):
    g = read_graph(args.graph)
    solution = solve_outerplanar(g, args.k, minimize=args.minimize)
    if args.profile:
        table = solution.profile_frame().to_string(index=False)
        sys.stdout.write("".join(f"# {line}\n" for line in table.splitlines()))
    if not solution.feasible:
        return INFEASIBLE, None
    return _finish(args, g, FEASIBLE, solution.coloring)


def run_dominate(args):
    g = read_graph(args.graph)
    limits = _limits(args)
    try:
        if args.construction == "cf4":
            coloring, mode = planar_cf4(g, limits), "closed"
        elif args.construction == "cf3":
            coloring, mode = outerplanar_cf3(g, limits), "closed"
        elif args.construction == "open3":
            coloring, mode = open_cf_bipartite4(g, limits, k=3), "open"
        elif args.construction == "open4":
            coloring, mode = open_cf_bipartite4(g, limits), "open"
        else:
            coloring, mode = open_cf_planar8(g, limits), "open"
    except InfeasibleColoringError as exc:
        logger.info(str(exc))
        return INFEASIBLE, None
    if not verify_cf(g, coloring, mode).valid:
        logger.error(f"{args.construction} produced an invalid {mode} coloring")
        return INVALID, coloring
    return _finish(args, g, FEASIBLE, coloring)


def _generate(args):
    """Returns (graph, roles or None) for ``args.family``."""
    family = args.family
    if family == "gk":
        return gen_gk(_need(args, "k")), None
    simple = {
        "knm3": gen_kn_minus_triangle,
        "path": gen_path,
        "cycle": gen_cycle,
        "star": gen_star,
        "complete": gen_complete,
    }
    if family in simple:
        return simple[family](_need(args, "n")), None
    if family == "reduction1":
        labeled = gen_reduction_1color(read_formula(_need(args, "formula")))
        return labeled.graph, labeled.roles
    if family == "random-outerplanar":
        return gen_random_outerplanar(_need(args, "n"), args.keep_prob, args.seed), None
    if family == "random-planar":
        return gen_random_planar(_need(args, "n"), args.seed, args.delete_prob), None
    if family == "random-bipartite-planar":
        return gen_random_bipartite_planar(_need(args, "n"), args.seed, args.delete_prob), None
    if family == "o9":
        n = args.n if args.n is not None else settings.O9_SIZE
        return find_outerplanar_requiring_2(n, _limits(args)), None
    source = read_graph(_need(args, "graph"))
    if family == "gk-reduction":
        labeled = gen_coloring_reduction(source, _need(args, "k"))
    else:
        labeled = gen_open_reduction(source)
    return labeled.graph, labeled.roles


def run_gen(args):
    g, roles = _generate(args)
    if g is None:
        return INFEASIBLE, None
    _emit(format_graph(g, comment=f"cfc gen {args.family}"), args.out)
    if roles is not None and args.roles:
        write_text(args.roles, format_roles(roles))
    if args.dot:
        write_dot(args.dot, g, None, roles)
    return OK, None


COMMANDS = {
    "verify": run_verify,
    "exact": run_exact,
    "heuristic": run_heuristic,
    "dp": run_dp,
    "dominate-color": run_dominate,
    "gen": run_gen,
}

EXIT_BY_STATUS = {
    OK: settings.EXIT_CODES["ok"],
    VALID: settings.EXIT_CODES["ok"],
    FEASIBLE: settings.EXIT_CODES["ok"],
    INVALID: settings.EXIT_CODES["invalid"],
    INFEASIBLE: settings.EXIT_CODES["invalid"],
    BUDGET: settings.EXIT_CODES["budget"],
    ERROR: settings.EXIT_CODES["usage"],
}


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format=settings.LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else settings.EXIT_CODES["usage"]
    _configure_logging(args.verbose)
    manager = LoggerManager(args.command, __file__)
    manager.log_exceptions()
    manager.start_timer()
    coloring = None
    try:
        status, coloring = COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        manager.log("warning", str(exc))
        status = BUDGET
    except (CFCError, ValueError, OSError) as exc:
        manager.log("error", f"{type(exc).__name__}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        status = ERROR
    line = _result_line(status, coloring if status != ERROR else None)
    manager.log("data", line)
    manager.end_timer()
    print(line)
    return EXIT_BY_STATUS[status]


if __name__ == "__main__":
    sys.exit(main())
