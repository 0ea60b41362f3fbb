import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eftspan.generators import complete_graph, cycle_graph, path_graph, petersen_graph
from eftspan.graph import (INF, GraphError, WeightedGraph, cycle_nodes, enumerate_cycles,
                           format_graph, girth, hop_distance, parse_graph, weighted_distance)

from oracles import brute_cycles, floyd, hop_floyd
from strategies import graph_with_pair, graphs

TRIANGLE = WeightedGraph(3, [(0, 1), (1, 2), (0, 2)])


def test_canonical_order_sorts_by_weight_then_endpoints():
    g = WeightedGraph(4, [(3, 2, 1.0), (1, 0, 2.0), (0, 3, 1.0), (2, 1, 1.0)])
    assert g.edges == ((0, 3, 1.0), (1, 2, 1.0), (2, 3, 1.0), (0, 1, 2.0))
    assert g.edge_id(3, 0) == 0
    assert g.edge_id(0, 2) is None


def test_canonical_order_is_input_order_independent():
    es = [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (0, 3, 1.0)]
    assert WeightedGraph(4, es) == WeightedGraph(4, es[::-1])


@pytest.mark.parametrize("edges", [
    [(0, 0, 1.0)],
    [(0, 1, 1.0), (1, 0, 2.0)],
    [(0, 1, -1.0)],
    [(0, 5, 1.0)],
])
def test_rejects_bad_graphs(edges):
    with pytest.raises(GraphError):
        WeightedGraph(3, edges)


def test_weighted_distance_examples():
    assert weighted_distance(TRIANGLE, 0, 1) == 1
    assert weighted_distance(TRIANGLE, 0, 1, {TRIANGLE.edge_id(0, 1)}) == 2
    p = path_graph(3)
    assert weighted_distance(p, 0, 2, {p.edge_id(0, 1)}) == INF
    assert weighted_distance(p, 1, 1) == 0


def test_hop_distance_examples():
    p = path_graph(4, [5.0, 1.0, 2.0])
    assert hop_distance(p, 0, 3) == 3
    assert hop_distance(p, 2, 2) == 0
    assert hop_distance(WeightedGraph(3, [(0, 1)]), 0, 2) == INF


def test_invalid_ids_raise():
    with pytest.raises(GraphError):
        weighted_distance(TRIANGLE, 0, 7)
    with pytest.raises(GraphError):
        hop_distance(TRIANGLE, 0, 1, {9})


def test_infinite_is_a_sentinel():
    assert math.isinf(weighted_distance(WeightedGraph(2), 0, 1))


@settings(max_examples=60, deadline=None)
@given(graph_with_pair(max_nodes=7), st.data())
def test_distances_match_floyd(gp, data):
    g, u, v = gp
    removed = frozenset(data.draw(st.sets(st.integers(0, max(g.m - 1, 0)), max_size=3))) if g.m else frozenset()
    assert weighted_distance(g, u, v, removed) == floyd(g.n, g.edges, removed)[u][v]
    assert hop_distance(g, u, v, removed) == hop_floyd(g.n, g.edges, removed)[u][v]


@settings(max_examples=40, deadline=None)
@given(graph_with_pair(max_nodes=7), st.integers(0, 20))
def test_adding_faults_never_shortens(gp, extra):
    g, u, v = gp
    if not g.m:
        return
    e = extra % g.m
    assert weighted_distance(g, u, v, {e}) >= weighted_distance(g, u, v)


@settings(max_examples=40, deadline=None)
@given(graphs(min_nodes=3, max_nodes=7), st.data())
def test_triangle_inequality(g, data):
    a, b, c = (data.draw(st.integers(0, g.n - 1)) for _ in range(3))
    assert weighted_distance(g, a, c) <= weighted_distance(g, a, b) + weighted_distance(g, b, c)


def test_girth_examples():
    assert girth(TRIANGLE) == 3
    assert girth(petersen_graph()) == 5
    assert girth(path_graph(6)) == INF
    assert girth(cycle_graph(7)) == 7


def test_enumerate_cycles_examples():
    assert len(list(enumerate_cycles(TRIANGLE, 3))) == 1
    assert list(enumerate_cycles(cycle_graph(5), 4)) == []
    # 4 triangles + 3 quadrilaterals, counted by brute force
    assert len(list(enumerate_cycles(complete_graph(4), 4))) == 7


@settings(max_examples=50, deadline=None)
@given(graphs(max_nodes=7), st.integers(3, 7))
def test_enumerate_cycles_matches_brute_force(g, L):
    got = [frozenset(c) for c in enumerate_cycles(g, L)]
    assert len(got) == len(set(got))
    assert set(got) == brute_cycles(g, L)


@settings(max_examples=50, deadline=None)
@given(graphs(max_nodes=8), st.integers(3, 8))
def test_girth_vs_enumeration(g, L):
    assert (girth(g) > L) == (not any(True for _ in enumerate_cycles(g, L)))


def test_cycles_are_closed_walks():
    g = complete_graph(5)
    for cyc in enumerate_cycles(g, 5):
        nodes = cycle_nodes(g, cyc)
        assert len(nodes) == len(cyc) == len(set(nodes))
        for i, e in enumerate(cyc):
            assert set(g.endpoints(e)) == {nodes[i], nodes[(i + 1) % len(nodes)]}


def test_file_round_trip():
    text = "# a comment\n3 2\n0 1 2.5\n1 2  # unweighted\n"
    g = parse_graph(text)
    assert g.edges == ((1, 2, 1.0), (0, 1, 2.5))
    assert parse_graph(format_graph(g)) == g


def test_bipartite_header():
    g = parse_graph("4 2\nL 2\n0 2\n1 3\n")
    assert g.left == 2
    assert "L 2" in format_graph(g)


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n", "2 1\n0 x\n", "2 1\n0 1 2 3\n", "2 1\nL\n0 1\n"])
def test_parse_errors(text):
    with pytest.raises(GraphError):
        parse_graph(text)


def test_subgraph_keeps_order():
    g = complete_graph(4)
    h = g.subgraph([5, 1, 3])
    assert h.edges == tuple(g.edges[e] for e in (1, 3, 5))
    assert h.is_subgraph_of(g)
