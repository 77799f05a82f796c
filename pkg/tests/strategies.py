from itertools import combinations

from hypothesis import strategies as st

from cfc.generators import gen_random_outerplanar, gen_random_planar
from cfc.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@st.composite
def graphs_without_isolated(draw, max_n=7):
    g = draw(graphs(min_n=2, max_n=max_n))
    edges = list(g.edges)
    for v in g.isolated_vertices():
        edges.append((v, (v + 1) % g.n) if v + 1 < g.n else (v - 1, v))
    return Graph.from_edges(g.n, set(tuple(sorted(e)) for e in edges))


def outerplanar_graphs(min_n=3, max_n=12):
    return st.builds(
        gen_random_outerplanar,
        n=st.integers(min_value=min_n, max_value=max_n),
        edge_keep_prob=st.sampled_from([0.0, 0.4, 0.7, 1.0]),
        seed=st.integers(min_value=0, max_value=10_000),
        outer_drop_prob=st.sampled_from([0.0, 0.3]),
        shuffle=st.booleans(),
    )


def planar_graphs(min_n=3, max_n=14):
    return st.builds(
        gen_random_planar,
        n=st.integers(min_value=min_n, max_value=max_n),
        seed=st.integers(min_value=0, max_value=10_000),
        delete_prob=st.sampled_from([0.0, 0.2, 0.5]),
    )
