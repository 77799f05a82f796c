import pytest

from cfc.exceptions import EdgeNotFoundError
from cfc.generators import gen_path, gen_star
from cfc.graph import Graph
from cfc.outerplanar import (
    VertexConfig,
    compatible,
    config_of,
    enumerate_vertex_configs,
)


def config(v, chi, *named):
    return VertexConfig(v, chi, tuple(sorted(named)))


class TestVertexConfig:
    def test_needs_a_named_neighbor(self):
        with pytest.raises(ValueError):
            VertexConfig(0, 1, ())

    def test_rho_injective(self):
        with pytest.raises(ValueError):
            config(0, 0, (1, 1), (2, 1))

    def test_self_named_with_own_color(self):
        with pytest.raises(ValueError):
            config(0, 1, (0, 2))

    def test_views(self):
        c = config(3, 0, (1, 2), (4, 1))
        assert c.S == {1, 4}
        assert c.rho == {1: 2, 4: 1}
        assert not c.colored
        assert str(c) == "[3|0|1:2,4:1]"


class TestEnumerate:
    def test_lonely_vertex(self):
        configs = enumerate_vertex_configs(Graph.from_edges(1, []), 0, 1)
        assert configs == [config(0, 1, (0, 1))]

    def test_degree_one_vertex(self):
        configs = enumerate_vertex_configs(gen_path(2), 0, 1)
        assert configs == [config(0, 0, (1, 1)), config(0, 1, (0, 1)), config(0, 1, (1, 1))]

    def test_named_set_capped_at_k(self):
        configs = enumerate_vertex_configs(gen_star(6), 0, 2)
        assert max(len(c.S) for c in configs) == 2

    def test_counts_for_k2(self):
        configs = enumerate_vertex_configs(gen_path(2), 0, 2)
        assert len(configs) == 10
        assert configs == sorted(configs)


class TestCompatible:
    def test_both_colored_and_self_named(self):
        assert not compatible(config(0, 1, (0, 1)), config(1, 1, (1, 1)), gen_path(2))

    def test_named_color_disagrees_with_chi(self):
        g = gen_path(2)
        assert not compatible(config(0, 0, (1, 2)), config(1, 1, (1, 1)), g)

    def test_p2_served_by_one_endpoint(self):
        assert compatible(config(0, 1, (0, 1)), config(1, 0, (0, 1)), gen_path(2))

    def test_shared_named_vertex_colors_agree(self):
        g = gen_path(3)
        assert not compatible(config(0, 0, (1, 1)), config(1, 2, (1, 2)), g)

    def test_middle_edge_of_p4(self):
        g = gen_path(4)
        assert compatible(config(1, 0, (2, 1)), config(2, 1, (2, 1)), g)

    def test_non_edge(self):
        with pytest.raises(EdgeNotFoundError):
            compatible(config(0, 1, (0, 1)), config(2, 1, (2, 1)), gen_path(3))


def test_config_of_reads_the_coloring():
    g = gen_path(4)
    coloring = {0: 0, 1: 1, 2: 0, 3: 2}
    assert config_of(g, coloring, 0) == config(0, 0, (1, 1))
    assert config_of(g, coloring, 2) == config(2, 0, (1, 1), (3, 2))
