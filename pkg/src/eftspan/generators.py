"""Input families: random graphs, random regular graphs, bipartite blow-ups."""

from __future__ import annotations

import itertools
import random

from .graph import GraphError, WeightedGraph


def _weights(rng: random.Random, count: int, weight_mode) -> list[float]:
    if weight_mode == "unit":
        return [1.0] * count
    if isinstance(weight_mode, str) and weight_mode == "uniform":
        weight_mode = ("uniform", 1.0, 10.0)
    kind, lo, hi = weight_mode
    if kind != "uniform" or not 0 <= lo <= hi:
        raise ValueError(f"bad weight mode {weight_mode!r}")
    return [rng.uniform(lo, hi) for _ in range(count)]


def gen_random(n: int, m: int, weight_mode="unit", seed: int = 0) -> WeightedGraph:
    """Uniform random simple graph with exactly ``m`` edges.

    ``weight_mode`` is ``"unit"``, ``"uniform"`` (on [1, 10]) or
    ``("uniform", lo, hi)``.
    """
    pairs = list(itertools.combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise ValueError(f"cannot place {m} edges on {n} nodes")
    rng = random.Random(seed)
    chosen = rng.sample(pairs, m)
    ws = _weights(rng, m, weight_mode)
    return WeightedGraph(n, [(u, v, w) for (u, v), w in zip(chosen, ws)])


def gen_regular(n: int, r: int, seed: int = 0, max_tries: int = 100_000) -> WeightedGraph:
    """Random simple r-regular graph, unit weights.

    Pairing model: shuffle ``n*r`` stubs, pair neighbours, and start over on
    any loop or repeated pair.
    """
    if r < 0 or r >= n or (n * r) % 2:
        raise ValueError(f"no simple {r}-regular graph on {n} nodes")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(r)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        seen = set()
        for a, b in zip(stubs[::2], stubs[1::2]):
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                break
            seen.add(key)
        else:
            return WeightedGraph(n, sorted(seen))
    raise RuntimeError(f"pairing model failed {max_tries} times for n={n}, r={r}")


def is_bipartition(g: WeightedGraph, left: int) -> bool:
    return all((u < left) != (v < left) for u, v, _ in g.edges)


def blow_up(g: WeightedGraph, copies_left: int, copies_right: int,
            left: int | None = None) -> WeightedGraph:
    """Replace each left node by ``copies_left`` copies and each right node
    by ``copies_right`` copies; every edge (u, v) becomes all edges
    (u_i, v_j) with the original weight.

    Left nodes are ``0..left-1`` (default ``g.left``). Copy ``i`` of left node
    ``u`` is ``u*copies_left + i``; right copies follow all left copies.
    """
    if copies_left < 1 or copies_right < 1:
        raise ValueError("copy counts must be positive")
    if left is None:
        left = g.left
    if left is None or not is_bipartition(g, left):
        raise GraphError("blow_up needs a bipartite graph with a declared left side")
    right = g.n - left
    new_left = left * copies_left

    def lcopy(u, i):
        return u * copies_left + i

    def rcopy(v, j):
        return new_left + (v - left) * copies_right + j

    edges = []
    for u, v, w in g.edges:
        if u >= left:
            u, v = v, u
        for i in range(copies_left):
            for j in range(copies_right):
                edges.append((lcopy(u, i), rcopy(v, j), w))
    return WeightedGraph(new_left + right * copies_right, edges, left=new_left)


def blow_up_origin(g: WeightedGraph, copies_left: int, copies_right: int,
                   left: int | None = None) -> list[int]:
    """``origin[x]``: the node of ``g`` that blown-up node ``x`` copies."""
    if left is None:
        left = g.left
    return ([u for u in range(left) for _ in range(copies_left)]
            + [v for v in range(left, g.n) for _ in range(copies_right)])


# small named graphs used by tests and examples

def cycle_graph(n: int, weights=None) -> WeightedGraph:
    ws = weights or [1.0] * n
    return WeightedGraph(n, [(i, (i + 1) % n, ws[i]) for i in range(n)])


def complete_graph(n: int) -> WeightedGraph:
    return WeightedGraph(n, itertools.combinations(range(n), 2))


def petersen_graph() -> WeightedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return WeightedGraph(10, outer + spokes + inner)


def path_graph(n: int, weights=None) -> WeightedGraph:
    ws = weights or [1.0] * (n - 1)
    return WeightedGraph(n, [(i, i + 1, ws[i]) for i in range(n - 1)])


def star_graph(leaves: int) -> WeightedGraph:
    return WeightedGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def even_cycle_bipartite(n: int) -> WeightedGraph:
    """C_n (n even) relabelled so that nodes ``0..n/2-1`` form the left side."""
    if n % 2:
        raise ValueError("need an even cycle")
    half = n // 2
    # walk 0, h, 1, h+1, ... alternating sides
    walk = [x for i in range(half) for x in (i, half + i)]
    edges = [(walk[i], walk[(i + 1) % n]) for i in range(n)]
    return WeightedGraph(n, edges, left=half)
