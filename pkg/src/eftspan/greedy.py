"""Fault-tolerant greedy spanners (exact and polynomial-time variants)."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Literal

from .faults import approx_fault_decision, exact_fault_decision
from .graph import WeightedGraph

Algorithm = Literal["exact", "approx"]


@dataclass
class GreedyTrace:
    """Why each spanner edge was kept.

    Ids are edge ids of the output spanner. ``forcing[e]`` is the fault set
    that made the algorithm keep ``e``; all of it precedes ``e``.
    """

    kept: list[int] = field(default_factory=list)
    forcing: dict[int, frozenset] = field(default_factory=dict)


@dataclass
class SpannerResult:
    spanner: WeightedGraph
    trace: GreedyTrace
    f: int
    k: int
    algorithm: Algorithm
    # spanner edge id -> input edge id
    source_ids: list[int] = field(default_factory=list)

    @property
    def stretch(self) -> int:
        return 2 * self.k - 1


class _PartialSpanner:
    """Growing subgraph that shares edge ids with its host graph."""

    def __init__(self, g: WeightedGraph):
        self.n = g.n
        self.edges = g.edges
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]

    def add(self, eid: int) -> None:
        u, v, _ = self.edges[eid]
        bisect.insort(self.adj[u], (v, eid))
        bisect.insort(self.adj[v], (u, eid))


def _run(g: WeightedGraph, f: int, k: int, algorithm: Algorithm,
         max_nodes: int | None) -> SpannerResult:
    if f < 0:
        raise ValueError("f must be non-negative")
    if k < 1:
        raise ValueError("k must be at least 1")
    t = 2 * k - 1
    h = _PartialSpanner(g)
    kept: list[int] = []
    forcing: dict[int, frozenset] = {}
    for eid, (u, v, w) in enumerate(g.edges):
        if algorithm == "exact":
            dec = exact_fault_decision(h, u, v, f, t * w, max_nodes=max_nodes)
        else:
            dec = approx_fault_decision(h, u, v, f, k)
        if dec:
            h.add(eid)
            kept.append(eid)
            forcing[eid] = dec.faults
    # kept is increasing, so position == spanner edge id
    pos = {e: i for i, e in enumerate(kept)}
    trace = GreedyTrace(
        kept=list(range(len(kept))),
        forcing={pos[e]: frozenset(pos[x] for x in fs) for e, fs in forcing.items()},
    )
    return SpannerResult(g.subgraph(kept), trace, f, k, algorithm, kept)


def ft_greedy_exact(g: WeightedGraph, f: int, k: int,
                    max_nodes: int | None = None) -> SpannerResult:
    """Greedy f-EFT (2k-1)-spanner with an exact fault decision per edge.

    Exponential in ``f`` in the worst case. ``max_nodes`` bounds the
    branch-and-bound tree of each single decision.
    """
    return _run(g, f, k, "exact", max_nodes)


def ft_greedy_approx(g: WeightedGraph, f: int, k: int) -> SpannerResult:
    """Polynomial-time variant: weights only fix the scan order, after which
    decisions use hop counts and the covering approximation."""
    return _run(g, f, k, "approx", None)


def ft_greedy(g: WeightedGraph, f: int, k: int, algorithm: Algorithm = "exact",
              **kw) -> SpannerResult:
    if algorithm == "exact":
        return ft_greedy_exact(g, f, k, **kw)
    if algorithm == "approx":
        return ft_greedy_approx(g, f, k)
    raise ValueError(f"unknown algorithm {algorithm!r}")
