import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from designiso import Graph, fano, line_graph, scramble, strongly_regular_check, sts


def naive_line_graph_edges(design):
    return {(i, j) for i, j in itertools.combinations(range(design.b), 2)
            if set(design.blocks[i]) & set(design.blocks[j])}


def naive_srg(graph):
    n = graph.n
    adj = [set(graph.neighbors(i)) for i in range(n)]
    degs = {len(a) for a in adj}
    if len(degs) != 1:
        return None
    lam = {len(adj[i] & adj[j]) for i, j in itertools.combinations(range(n), 2) if j in adj[i]}
    mu = {len(adj[i] & adj[j]) for i, j in itertools.combinations(range(n), 2) if j not in adj[i]}
    if len(lam) > 1 or len(mu) > 1 or not lam or not mu:
        return None
    return degs.pop(), lam.pop(), mu.pop()


def test_fano_line_graph_is_k7():
    G = line_graph(fano())
    assert G.n == 7 and G.num_edges == 21
    assert all(G.has_edge(i, j) for i, j in itertools.combinations(range(7), 2))


def test_line_graph_matches_naive(designs):
    for D in designs.values():
        G = line_graph(D)
        assert set(G.edges()) == naive_line_graph_edges(D)


def test_line_graph_is_label_invariant_up_to_vertex_order(designs):
    D = designs["sts13"]
    S = scramble(D, 5)
    deg = sorted(line_graph(D).degree(i) for i in range(D.b))
    assert deg == sorted(line_graph(S).degree(i) for i in range(S.b))


def test_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 5)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))


def test_to_numpy_symmetric(designs):
    A = line_graph(designs["sts9"]).to_numpy()
    assert A.shape == (12, 12)
    assert np.array_equal(A, A.T) and not A.diagonal().any()


@pytest.mark.parametrize("v", [9, 13, 15, 19])
def test_sts_line_graph_srg_parameters(v):
    # STS(v) block graph: k = 3(v-3)/2, lambda = (v+3)/2, mu = 9
    G = line_graph(sts(v))
    expected = (3 * (v - 3) // 2, (v + 3) // 2, 9)
    assert strongly_regular_check(G) == expected == naive_srg(G)


def test_srg_edge_cases():
    cycle5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert strongly_regular_check(cycle5) == (2, 0, 1)
    assert strongly_regular_check(line_graph(fano())) is None  # complete
    assert strongly_regular_check(Graph.from_edges(4, [])) is None
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert strongly_regular_check(path) is None
    with pytest.raises(ValueError):
        strongly_regular_check(Graph.from_edges(2, [(0, 1)]))


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                                            .filter(lambda e: e[0] < e[1])))))
def test_srg_check_against_naive(case):
    n, edges = case
    G = Graph.from_edges(n, edges)
    got = strongly_regular_check(G)
    want = naive_srg(G)
    assert got == want
