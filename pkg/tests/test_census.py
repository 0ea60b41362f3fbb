import io
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eftspan.blocking import StrongBlockingSet, extract_blocking_set, reduce_block_frequency, verify_strong_blocking
from eftspan.census import (CENSUS_SCHEMA, PathRecord, _peel, all_choke_sets, alternating_trails,
                            build_choke_set, check_dispersion, count_paths, dispersion_bound,
                            find_alternating_kpath, is_alternating, is_blocked, random_edge_subsample,
                            split_high_degree, unblocked_alternating_counts)
from eftspan.faults import BudgetExceeded
from eftspan.generators import complete_graph, cycle_graph, gen_random, gen_regular, path_graph, star_graph
from eftspan.graph import WeightedGraph, enumerate_cycles, girth
from eftspan.greedy import ft_greedy, ft_greedy_exact

from oracles import alternating, brute_counts, brute_simple_paths
from strategies import graphs

EMPTY = frozenset()


def blocking(h, pairs=()):
    return StrongBlockingSet.of(h, pairs)


# -- single paths -----------------------------------------------------------

@pytest.mark.parametrize("seq,expected", [
    ([], True), ([4], True), ([1, 2], True), ([2, 1], False),
    ([1, 3, 2], True), ([1, 3, 4], False), ([0, 5, 1, 4], True), ([0, 5, 1, 0], False),
])
def test_is_alternating(seq, expected):
    assert is_alternating(seq) == expected == alternating(seq)


def test_is_blocked_examples():
    g = path_graph(5)
    p = PathRecord.from_nodes(g, [0, 1, 2, 3])
    assert not is_blocked(p, blocking(g))
    assert is_blocked(p, blocking(g, [(0, 2)]))
    assert not is_blocked(p, blocking(g, [(0, 3), (1, 3), (2, 3)]))


def test_path_record_flags():
    g = complete_graph(4)
    p = PathRecord.from_nodes(g, [0, 1, 2, 0, 3], blocking(g))
    assert not p.simple and p.edge_simple and p.unblocked
    with pytest.raises(ValueError):
        PathRecord.from_nodes(path_graph(3), [0, 2])


# -- weak counting ------------------------------------------------------------

def test_find_single_edge():
    g = WeightedGraph(2, [(0, 1)])
    p = find_alternating_kpath(g, 1)
    assert p.edges == (0,)


def test_find_triangle_2path():
    tri = WeightedGraph(3, [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)])
    p = find_alternating_kpath(tri, 2)
    assert p.edge_simple and p.alternating and len(p) == 2
    assert p.edges[1] > p.edges[0]
    # brute force: exactly three oriented alternating 2-trails exist
    assert len(list(alternating_trails(tri, 2))) == 3
    assert (0, 2) in {t.edges for t in alternating_trails(tri, 2)}


def test_find_none():
    assert find_alternating_kpath(path_graph(3), 3) is None
    assert find_alternating_kpath(WeightedGraph(0), 0) is None
    assert find_alternating_kpath(WeightedGraph(1), 0).nodes == (0,)
    # a 3-path needs a heavier middle edge: the star has alternating 3-trails only if it has 3 edges
    assert find_alternating_kpath(star_graph(2), 3) is None


@settings(max_examples=80, deadline=None)
@given(graphs(max_nodes=9), st.integers(1, 4))
def test_find_matches_exhaustive_existence(g, k):
    p = find_alternating_kpath(g, k)
    exists = any(True for _ in alternating_trails(g, k))
    assert (p is not None) == exists
    if p is not None:
        assert len(p) == k and p.edge_simple and p.alternating


@settings(max_examples=80, deadline=None)
@given(st.integers(4, 14), st.integers(1, 4), st.integers(0, 10**6), st.booleans())
def test_peeling_alone_succeeds_above_threshold(n, k, seed, weighted):
    m_max = n * (n - 1) // 2
    if k * n > m_max:
        return
    rng = random.Random(seed)
    g = gen_random(n, rng.randint(k * n, m_max), "uniform" if weighted else "unit", seed)
    found = _peel(g, set(range(g.m)), k)
    assert found is not None
    rec = PathRecord.from_nodes(g, found[0])
    assert rec.edge_simple and rec.alternating and len(rec) == k


# -- census -------------------------------------------------------------------

def test_census_empty_graph():
    rep = count_paths(WeightedGraph(5), None, 2)
    assert rep.counts == {}
    assert rep.totals().simple == 0


def test_census_path_u_x_v():
    g = path_graph(3, [1.0, 2.0])
    rep = count_paths(g, blocking(g), 2)
    assert rep.get(0, 2, 2).alternating == 1
    assert rep.get(2, 0, 2).alternating == 0
    assert rep.get(2, 0, 2).simple == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_nodes=6), st.integers(1, 4), st.data())
def test_census_matches_brute_force(g, j, data):
    pairs = []
    if g.m >= 2:
        pairs = data.draw(st.lists(st.tuples(st.integers(0, g.m - 1), st.integers(0, g.m - 1))
                                   .filter(lambda p: p[0] != p[1]), max_size=6))
    b = blocking(g, pairs)
    rep = count_paths(g, b, j, classes=("simple", "alternating", "unblocked_alternating",
                                        "edge_simple_alternating"))
    ref = brute_counts(g, b.blocks, j)
    for (s, t), (simple, alt, unb, trail) in ref.items():
        c = rep.get(s, t, j)
        assert (c.simple, c.alternating, c.unblocked_alternating, c.edge_simple_alternating) == \
            (simple, alt, unb, trail)
    assert rep.totals().simple == sum(v[0] for v in ref.values())


def test_intermediate_counting_n10():
    g = gen_random(10, 40, "uniform", 5)
    rep = count_paths(g, None, 2, classes=("edge_simple_alternating",))
    assert rep.totals().edge_simple_alternating >= 2 * 10


def test_census_budget():
    with pytest.raises(BudgetExceeded):
        count_paths(complete_graph(12), None, 5, budget=1000)
    count_paths(complete_graph(5), None, 2, budget=10, force=True)


def test_census_csv():
    g = path_graph(3, [1.0, 2.0])
    buf = io.StringIO()
    count_paths(g, blocking(g), 2).write_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == CENSUS_SCHEMA
    assert lines[1] == "s,t,j,simple,alternating,unblocked_alternating"
    assert "0,2,2,1,1,1" in lines


def test_report_degree():
    g = complete_graph(4)
    assert count_paths(g, None, 1).average_degree == 3


@settings(max_examples=30, deadline=None)
@given(graphs(max_nodes=8), st.integers(1, 3))
def test_nonsimple_trails_are_blocked(g, k):
    res = ft_greedy_exact(g, 1, k)
    h = res.spanner
    b = extract_blocking_set(res)
    for j in range(1, k + 1):
        for trail in alternating_trails(h, j):
            if not trail.simple:
                assert is_blocked(trail, b)


# -- choke sets and dispersion -------------------------------------------------

def test_choke_no_path():
    g = WeightedGraph(4, [(0, 1), (2, 3)])
    assert len(build_choke_set(g, blocking(g), 0, 3, 3, 1)) == 0


def test_choke_unique_path():
    g = path_graph(4, [3.0, 1.0, 2.0])
    cs = build_choke_set(g, blocking(g), 0, 3, 3, 1)
    assert cs.edges == {g.edge_id(0, 1)}


def test_choke_precondition():
    g = path_graph(4)
    with pytest.raises(ValueError):
        build_choke_set(g, blocking(g, [(0, 1), (0, 2)]), 0, 3, 3, 1)


def _greedy_reduced(g, f, k, alg="exact"):
    res = ft_greedy(g, f, k, alg)
    b = extract_blocking_set(res)
    if f == 0:
        return res.spanner, b
    cap = f if alg == "exact" else (2 * k - 1) * f
    return reduce_block_frequency(res.spanner, b, cap)


@pytest.mark.parametrize("seed", range(6))
def test_choke_sets_on_greedy_n12(seed):
    k, f = 2, 1
    h, b = _greedy_reduced(gen_random(12, 36, "uniform", seed), f, k)
    freq = max(b.max_frequency(), f)
    chokes = all_choke_sets(h, b, k, freq)
    partners = b.partners()
    for (s, t), cs in chokes.items():
        assert len(cs) <= k * f + 1
        assert cs == build_choke_set(h, b, s, t, k, freq)
        for p in brute_simple_paths(h, s, t, k):
            if not any(x in partners.get(y, ()) for x in p for y in p):
                assert max(p) in cs.edges


def test_dispersion_base_cases():
    g = complete_graph(5)
    counts = unblocked_alternating_counts(g, blocking(g), 3)
    assert all(counts[(s, s, 0)] == 1 for s in range(5))
    assert all(counts.get((s, t, 0), 0) == 0 for s in range(5) for t in range(5) if s != t)
    assert all(c <= 1 for (s, t, j), c in counts.items() if j == 1)
    assert dispersion_bound(1, 3, 2, 8) == 1
    assert dispersion_bound(3, 3, 2, 8) == 8 * 9 * 2
    assert dispersion_bound(4, 3, 2, 8) == (8 * 9 * 2) ** 2


def test_dispersion_counts_match_census():
    g = gen_random(8, 16, "uniform", 4)
    b = blocking(g, [(0, 5), (2, 9)])
    counts = unblocked_alternating_counts(g, b, 3)
    for j in (1, 2, 3):
        rep = count_paths(g, b, j)
        for (s, t, jj), c in rep.counts.items():
            assert counts.get((s, t, j), 0) == c.unblocked_alternating


@pytest.mark.parametrize("seed", range(6))
def test_dispersion_on_greedy_outputs(seed):
    rng = random.Random(seed)
    n = rng.randint(8, 15)
    f, k = rng.choice([1, 2]), rng.choice([2, 3])
    h, b = _greedy_reduced(gen_random(n, 3 * n, "uniform", seed), f, k)
    rep = check_dispersion(h, b, k, f, 8)
    assert rep.ok, rep.summary()
    assert rep.max_count[0] == 1 and rep.max_count[1] <= 1


def test_dispersion_reports_failures():
    # K5 with no blocks: many 2-paths between a pair, bound (c k^2 f)^1 tiny
    g = complete_graph(5)
    rep = check_dispersion(g, blocking(g), 2, 1, 0.1)
    assert not rep.ok
    assert rep.empirical_c > 0.1
    assert check_dispersion(g, blocking(g), 2, 1, rep.empirical_c + 1e-9).ok


# -- surgery ------------------------------------------------------------------

def test_split_regular_unchanged():
    g = gen_regular(10, 3, 1)
    h2, b2, node_map = split_high_degree(g, blocking(g))
    assert h2 == g and node_map == list(range(10))


def test_split_star():
    g = star_graph(9)
    h2, _, node_map = split_high_degree(g, blocking(g))
    assert h2.n == 11 and h2.m == 9
    assert max(h2.degree(v) for v in range(h2.n)) == 5
    assert node_map[10] == 0


@settings(max_examples=60, deadline=None)
@given(graphs(max_nodes=9))
def test_split_properties(g):
    res = ft_greedy_exact(g, 1, 2)
    h, b = res.spanner, extract_blocking_set(res)
    h2, b2, node_map = split_high_degree(h, b)
    d = h.average_degree()
    assert h2.m == h.m
    assert [w for *_, w in h2.edges] == [w for *_, w in h.edges]
    for e in range(h.m):
        u, v = h2.endpoints(e)
        assert {node_map[u], node_map[v]} == set(h.endpoints(e))
    assert all(h2.degree(v) < 4 * d or h2.degree(v) <= 1 for v in range(h2.n))
    assert h2.n <= h.n + (h.m / (2 * d) if d else 0)
    assert girth(h2) >= girth(h)
    old_cycles = {frozenset(c) for c in enumerate_cycles(h, 6)}
    assert {frozenset(c) for c in enumerate_cycles(h2, 6)} <= old_cycles
    assert verify_strong_blocking(h2, b2, 4) is None


def test_subsample_extremes():
    g = gen_random(10, 20, "uniform", 1)
    b = blocking(g, [(0, 1), (3, 7)])
    h1, b1 = random_edge_subsample(g, b, 1.0, 3)
    assert h1 == g and b1.blocks == b.blocks
    h0, b0 = random_edge_subsample(g, b, 0.0, 3)
    assert h0.m == 0 and len(b0) == 0
    with pytest.raises(ValueError):
        random_edge_subsample(g, b, 1.5, 0)


def test_subsample_statistics():
    g = gen_random(60, 1000, "uniform", 0)
    rng = random.Random(1)
    b = blocking(g, {tuple(sorted(rng.sample(range(1000), 2))) for _ in range(400)})
    sigma = math.sqrt(1000 * 0.25)
    sizes = []
    for seed in range(30):
        h2, b2 = random_edge_subsample(g, b, 0.5, seed)
        assert abs(h2.m - 500) <= 3 * sigma
        sizes.append(h2.m)
        kept = {g.edge_id(*h2.endpoints(e)) for e in range(h2.m)}
        expect = {(x, y) for x, y in b.blocks if x in kept and y in kept}
        got = {(g.edge_id(*h2.endpoints(x)), g.edge_id(*h2.endpoints(y))) for x, y in b2.blocks}
        assert got == expect
    assert abs(sum(sizes) / len(sizes) - 500) <= 3 * sigma / math.sqrt(len(sizes))
    assert random_edge_subsample(g, b, 0.5, 7)[0] == random_edge_subsample(g, b, 0.5, 7)[0]
