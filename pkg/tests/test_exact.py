import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfc.domination import open_degree_constraints
from cfc.exact import (
    Formula,
    SearchLimits,
    SearchResult,
    chi_cf,
    chromatic_number,
    exists_cf_k,
    gamma_cf_k,
    greedy_dominating_set,
    min_dominating_set,
    one_in_three_sat,
    proper_coloring,
    smallest_last_coloring,
)
from cfc.exceptions import BudgetExceededError, IsolatedVertexError
from cfc.generators import (
    gen_complete,
    gen_cycle,
    gen_gk,
    gen_path,
    gen_random_planar,
    gen_star,
    polygon_graph,
)
from cfc.graph import Graph
from cfc.verify import count_colored, is_dominating, verify_cf, verify_proper
from tests.strategies import graphs, graphs_without_isolated

UNSAT_FORMULA = Formula.from_clauses(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


class TestLimits:
    def test_positive_budgets(self):
        with pytest.raises(ValueError):
            SearchLimits(node_budget=0)
        with pytest.raises(ValueError):
            SearchLimits(time_budget=-1.0)

    def test_result_shape(self):
        with pytest.raises(ValueError):
            SearchResult("feasible", 1, None)
        assert SearchResult("infeasible", 2).colors_used == 0


class TestExistsCfK:
    def test_c4_one_color(self, c4, limits):
        assert not exists_cf_k(c4, 1, "closed", limits).feasible

    def test_g2(self, limits):
        g2 = gen_gk(2)
        assert not exists_cf_k(g2, 1, limits=limits).feasible
        result = exists_cf_k(g2, 2, limits=limits)
        assert result.feasible
        assert verify_cf(g2, result.coloring).valid

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_complete_graph(self, n, limits):
        result = exists_cf_k(gen_complete(n), 1, limits=limits)
        assert result.feasible
        assert result.colored == 1

    def test_witness_is_total(self, p9, limits):
        result = exists_cf_k(p9, 1, limits=limits)
        assert set(result.coloring) == set(p9.vertices)

    def test_require_all_on_chorded_c5(self, limits):
        g = polygon_graph(5, [(0, 2)])
        assert not exists_cf_k(g, 2, limits=limits, require_all=True).feasible
        result = exists_cf_k(g, 3, limits=limits, require_all=True)
        assert result.feasible
        assert all(c >= 1 for c in result.coloring.values())

    def test_open_isolated_vertex(self, limits):
        g = Graph.from_edges(3, [(0, 1)])
        assert not exists_cf_k(g, 3, "open", limits).feasible

    def test_budget_is_raised(self, tiny_limits):
        with pytest.raises(BudgetExceededError) as info:
            exists_cf_k(gen_cycle(8), 1, limits=tiny_limits)
        assert info.value.nodes > tiny_limits.node_budget

    @given(graphs(max_n=6), st.sampled_from(["closed", "open"]), st.integers(1, 3))
    def test_witnesses_verify(self, g, mode, k):
        result = exists_cf_k(g, k, mode)
        if result.feasible:
            assert verify_cf(g, result.coloring, mode).valid
            assert result.colors_used <= k

    @given(graphs_without_isolated(max_n=6), st.integers(1, 2))
    def test_open_hints_keep_the_answer(self, g, k):
        plain = exists_cf_k(g, k, "open")
        hinted = exists_cf_k(g, k, "open", hints=open_degree_constraints(g))
        assert plain.feasible == hinted.feasible


class TestChiCf:
    def test_p9(self, p9, limits):
        assert chi_cf(p9, "closed", limits).k == 1

    def test_c4(self, c4, limits):
        result = chi_cf(c4, "closed", limits)
        assert result.k == 2
        assert verify_cf(c4, result.coloring).valid

    def test_k2_open(self, limits):
        assert chi_cf(gen_complete(2), "open", limits).k == 1

    def test_open_rejects_isolated_vertices(self):
        with pytest.raises(IsolatedVertexError):
            chi_cf(Graph.from_edges(3, [(0, 1)]), "open")

    def test_empty_graph(self):
        with pytest.raises(ValueError):
            chi_cf(Graph.from_edges(0, []))

    @pytest.mark.slow
    def test_g3_is_not_2_colorable(self):
        limits = SearchLimits(node_budget=2_000_000_000, time_budget=3600.0)
        try:
            result = exists_cf_k(gen_gk(3), 2, limits=limits)
        except BudgetExceededError as exc:
            pytest.xfail(f"G_3 search ran out of budget after {exc.nodes} nodes")
        assert not result.feasible


class TestGammaCfK:
    def test_star(self, limits):
        result = gamma_cf_k(gen_star(6), 1, "closed", limits)
        assert result.colored == 1
        assert result.coloring[0] == 1

    def test_c6(self, limits):
        result = gamma_cf_k(gen_cycle(6), 1, "closed", limits)
        assert result.colored == 2
        assert verify_cf(gen_cycle(6), result.coloring).valid

    def test_c4_infeasible(self, c4, limits):
        assert not gamma_cf_k(c4, 1, "closed", limits).feasible

    @given(graphs(max_n=6), st.integers(1, 2))
    def test_not_below_domination_number(self, g, k):
        result = gamma_cf_k(g, k)
        if result.feasible:
            assert result.colored >= len(min_dominating_set(g))
            assert result.colored <= count_colored(exists_cf_k(g, k).coloring)


class TestDominatingSet:
    def test_star(self, claw, limits):
        assert min_dominating_set(claw, limits) == {0}

    def test_c6(self, limits):
        assert len(min_dominating_set(gen_cycle(6), limits)) == 2

    def test_p4(self, limits):
        assert len(min_dominating_set(gen_path(4), limits)) == 2

    @given(graphs())
    def test_exact_is_dominating_and_not_above_greedy(self, g):
        exact = min_dominating_set(g)
        assert is_dominating(g, exact)
        assert is_dominating(g, greedy_dominating_set(g))
        assert len(exact) <= len(greedy_dominating_set(g))


class TestProperColoring:
    def test_c5(self, limits):
        assert not proper_coloring(gen_cycle(5), 2, limits).feasible
        result = proper_coloring(gen_cycle(5), 3, limits)
        assert verify_proper(gen_cycle(5), result.coloring)

    def test_k4(self, limits):
        assert proper_coloring(gen_complete(4), 4, limits).feasible

    def test_tree(self, limits):
        tree = Graph.from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])
        assert verify_proper(tree, proper_coloring(tree, 2, limits).coloring)

    def test_chromatic_number(self, limits):
        assert chromatic_number(gen_cycle(7), limits).k == 3
        assert chromatic_number(Graph.from_edges(0, [])).k == 0

    @settings(max_examples=15)
    @given(st.integers(4, 30), st.integers(0, 1000))
    def test_smallest_last_uses_at_most_six_on_planar(self, n, seed):
        g = gen_random_planar(n, seed=seed)
        coloring = smallest_last_coloring(g)
        assert verify_proper(g, coloring)
        assert max(coloring.values()) <= 6


class TestOneInThreeSat:
    def test_single_clause(self):
        formula = Formula.from_clauses(3, [(0, 1, 2)])
        assignment = one_in_three_sat(formula)
        assert sum(assignment) == 1

    def test_unsatisfiable(self):
        assert one_in_three_sat(UNSAT_FORMULA) is None

    def test_no_clauses(self):
        assert one_in_three_sat(Formula.from_clauses(3, [])) == (False, False, False)


class TestOracleRelations:
    @settings(max_examples=60)
    @given(graphs(max_n=7))
    def test_conflict_free_never_needs_more_colors_than_proper(self, g):
        assert chi_cf(g).k <= chromatic_number(g).k

    @settings(max_examples=30)
    @given(graphs(max_n=10))
    def test_fewest_colored_over_small_palettes_is_the_domination_number(self, g):
        gamma = len(min_dominating_set(g))
        results = [gamma_cf_k(g, k) for k in range(1, gamma + 1)]
        assert results[-1].feasible
        assert min(r.colored for r in results if r.feasible) == gamma

    @given(graphs(max_n=7), st.integers(1, 3), st.sampled_from(["closed", "open"]))
    def test_same_input_gives_same_witness(self, g, k, mode):
        limits = SearchLimits(node_budget=5_000_000, time_budget=120.0)
        first = exists_cf_k(g, k, mode, limits)
        second = exists_cf_k(g, k, mode, limits)
        assert (first.status, first.coloring) == (second.status, second.coloring)

    @given(graphs(max_n=6))
    def test_chi_cf_is_deterministic(self, g):
        first, second = chi_cf(g), chi_cf(g)
        assert (first.k, first.coloring) == (second.k, second.coloring)
