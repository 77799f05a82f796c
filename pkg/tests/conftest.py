import pytest
from hypothesis import HealthCheck, settings

from cfc.exact import SearchLimits
from cfc.generators import gen_complete, gen_cycle, gen_path, gen_star
from cfc.graph import Graph

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("fast", max_examples=8, deadline=None)
settings.load_profile("default")


@pytest.fixture
def limits():
    return SearchLimits(node_budget=5_000_000, time_budget=120.0)


@pytest.fixture
def tiny_limits():
    return SearchLimits(node_budget=3, time_budget=60.0)


@pytest.fixture
def triangle():
    return gen_complete(3)


@pytest.fixture
def c4():
    return gen_cycle(4)


@pytest.fixture
def p9():
    return gen_path(9)


@pytest.fixture
def claw():
    return gen_star(4)


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 2."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def diamond():
    """Two triangles sharing the edge (1, 2)."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def write_file(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
