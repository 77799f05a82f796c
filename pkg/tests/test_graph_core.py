import math

import pytest
from hypothesis import given

from cfc.exceptions import (
    EdgeNotFoundError,
    InvalidGraphError,
    InvalidVertexError,
    NotBipartiteError,
)
from cfc.generators import gen_complete, gen_cycle, gen_path, gen_star
from cfc.graph import (
    Graph,
    Mode,
    as_mode,
    biconnected_components,
    bipartition,
    connected_components,
    contract_edge,
    contract_into,
    distance,
    independent_dominating_set,
    is_connected,
    neighborhood,
)
from cfc.verify import is_dominating, is_independent
from tests.strategies import graphs


class TestGraph:
    def test_from_edges_canonicalizes(self):
        g = Graph.from_edges(3, [(2, 1), (0, 1)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.neighbors(1) == frozenset({0, 2})
        assert g.m == 2

    def test_rejects_loop(self):
        with pytest.raises(InvalidGraphError):
            Graph.from_edges(2, [(1, 1)])

    def test_rejects_parallel_edge(self):
        with pytest.raises(InvalidGraphError):
            Graph.from_edges(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidGraphError):
            Graph.from_edges(2, [(0, 2)])

    def test_unknown_vertex(self):
        with pytest.raises(InvalidVertexError):
            gen_path(3).neighbors(7)

    def test_induced_subgraph_mapping(self):
        sub, mapping = gen_cycle(5).induced_subgraph([4, 0, 1])
        assert mapping == {0: 0, 1: 1, 4: 2}
        assert sub.edges == ((0, 1), (0, 2))

    def test_networkx_roundtrip_relabels(self):
        g = gen_star(4)
        assert Graph.from_networkx(g.to_networkx()) == g

    def test_isolated_vertices(self):
        assert Graph.from_edges(4, [(1, 2)]).isolated_vertices() == [0, 3]


class TestNeighborhood:
    def test_triangle_closed(self, triangle):
        assert neighborhood(triangle, 0, "closed").members == {0, 1, 2}

    def test_path_open(self):
        assert neighborhood(gen_path(3), 0, Mode.OPEN).members == {1}

    def test_star_center_closed(self, claw):
        assert neighborhood(claw, 0).members == {0, 1, 2, 3}

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            as_mode("half-open")


class TestDistance:
    def test_path_ends(self):
        assert distance(gen_path(4), 0, 3) == 3

    def test_across_components(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert distance(g, 0, 3) == math.inf

    def test_same_vertex(self, c4):
        assert distance(c4, 2, 2) == 0


class TestBiconnected:
    def test_bowtie(self, bowtie):
        decomposition = biconnected_components(bowtie)
        assert len(decomposition.components) == 2
        assert decomposition.articulation_points == {2}

    def test_cycle(self):
        decomposition = biconnected_components(gen_cycle(6))
        assert len(decomposition.components) == 1
        assert not decomposition.articulation_points

    def test_path(self):
        decomposition = biconnected_components(gen_path(4))
        assert len(decomposition.components) == 3
        assert decomposition.articulation_points == {1, 2}
        assert decomposition.bridge_edges == {(0, 1), (1, 2), (2, 3)}


class TestContraction:
    def test_c4_edge_gives_triangle(self, c4):
        minor, mapping = contract_edge(c4, 0, 1)
        assert minor == gen_complete(3)
        assert mapping[1] == mapping[0]

    def test_k2_gives_single_vertex(self):
        minor, _ = contract_edge(gen_complete(2), 0, 1)
        assert minor.n == 1 and minor.m == 0

    def test_path_tail(self):
        minor, mapping = contract_edge(gen_path(3), 1, 2)
        assert minor.edges == ((0, 1),)
        assert mapping == {0: 0, 1: 1, 2: 1}

    def test_missing_edge(self, c4):
        with pytest.raises(EdgeNotFoundError):
            contract_edge(c4, 0, 2)

    def test_contract_into_matches_sequential(self):
        g = gen_cycle(6)
        minor, mapping = contract_into(g, {1: 0, 3: 2, 5: 4})
        assert minor == gen_complete(3)
        assert mapping == {0: 0, 1: 0, 2: 1, 3: 1, 4: 2, 5: 2}

    def test_contract_into_rejects_chains(self):
        with pytest.raises(ValueError):
            contract_into(gen_path(3), {0: 1, 1: 2})


class TestBipartition:
    def test_c4(self, c4):
        assert bipartition(c4) == ({0, 2}, {1, 3})

    def test_c5(self):
        with pytest.raises(NotBipartiteError):
            bipartition(gen_cycle(5))

    def test_star(self, claw):
        assert bipartition(claw) == ({0}, {1, 2, 3})


class TestIndependentDominatingSet:
    def test_triangle(self, triangle):
        assert independent_dominating_set(triangle) == {0}

    def test_c4(self, c4):
        assert independent_dominating_set(c4) == {0, 2}

    def test_edgeless(self):
        assert independent_dominating_set(Graph.from_edges(4, [])) == {0, 1, 2, 3}

    @given(graphs())
    def test_is_independent_and_dominating(self, g):
        chosen = independent_dominating_set(g)
        assert is_independent(g, chosen)
        assert is_dominating(g, chosen)


@given(graphs())
def test_components_partition_vertices(g):
    components = connected_components(g)
    assert sorted(v for c in components for v in c) == list(g.vertices)
    assert is_connected(g) == (len(components) == 1)
