"""Can at most ``f`` edge faults push ``u`` and ``v`` far apart?

Both greedy builders ask this once per input edge. The exact version is a
length-bounded cut decision (NP-hard) solved by branch and bound; the
approximate one is the frequency-style covering heuristic on hop counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import GraphError, hop_path, shortest_path


@dataclass(frozen=True)
class Decision:
    """Outcome of a fault decision.

    ``faults`` is the witness on YES: the branch-and-bound cut for the exact
    decision, or the whole covering set for the approximate one. ``work``
    counts search nodes (exact) or covering iterations (approximate).
    """

    yes: bool
    faults: frozenset = field(default_factory=frozenset)
    work: int = 0

    def __bool__(self) -> bool:
        return self.yes


class BudgetExceeded(RuntimeError):
    """Search exceeded a caller-supplied work limit."""


def _check_pair(h, u: int, v: int) -> None:
    if not (0 <= u < h.n and 0 <= v < h.n):
        raise GraphError(f"invalid node pair ({u}, {v})")
    if u == v:
        raise GraphError("fault decision needs two distinct nodes")


def _direct_edge(h, u: int, v: int):
    for y, e in h.adj[u]:
        if y == v:
            return e
    return None


def exact_fault_decision(h, u: int, v: int, f: int, threshold: float,
                         max_nodes: int | None = None) -> Decision:
    """YES iff some ``F`` with ``|F| <= f`` leaves ``d(u, v) > threshold``.

    ``F`` never contains the direct ``u``-``v`` edge. Branch and bound: find a
    min-weight path of weight ``<= threshold``; if there is none the current
    ``F`` is a witness, otherwise one of that path's edges must be faulted.
    Siblings are made disjoint by forbidding the edges earlier branches chose.
    """
    _check_pair(h, u, v)
    if f < 0:
        raise ValueError("fault budget must be non-negative")
    direct = _direct_edge(h, u, v)
    counter = [0]

    def search(faults: frozenset, forbidden: frozenset) -> frozenset | None:
        counter[0] += 1
        if max_nodes is not None and counter[0] > max_nodes:
            raise BudgetExceeded(f"branch and bound exceeded {max_nodes} nodes")
        found = shortest_path(h, u, v, faults, threshold)
        if found is None:
            return faults
        if len(faults) >= f:
            return None
        choices = [e for e in found[1] if e != direct and e not in forbidden]
        for i, e in enumerate(choices):
            hit = search(faults | {e}, forbidden.union(choices[:i]))
            if hit is not None:
                return hit
        return None

    witness = search(frozenset(), frozenset())
    if witness is None:
        return Decision(False, work=counter[0])
    return Decision(True, witness, counter[0])


def approx_fault_decision(h, u: int, v: int, f: int, k: int) -> Decision:
    """Covering approximation on the unweighted view of ``h``.

    Up to ``f`` times, take the BFS-shortest ``u``-``v`` path with at most
    ``2k-1`` hops and fault all of its edges. YES iff no such path is left.
    If a cut of size ``<= f`` exists the answer is YES; a YES always comes
    with a cut of size ``<= (2k-1)f``.
    """
    _check_pair(h, u, v)
    if k < 1:
        raise ValueError("k must be positive")
    hops = 2 * k - 1
    direct = _direct_edge(h, u, v)
    faults: set[int] = set()
    for it in range(f + 1):
        path = hop_path(h, u, v, faults, hops)
        if path is None:
            return Decision(True, frozenset(faults), it)
        if it == f or path == [direct]:
            return Decision(False, frozenset(faults), it)
        faults.update(path)
    raise AssertionError("unreachable")
