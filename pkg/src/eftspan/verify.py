"""Certify or refute that a subgraph is an f-EFT (2k-1)-spanner."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Literal

from .faults import BudgetExceeded
from .graph import GraphError, WeightedGraph, distances_from

# fault sets * node pairs
DEFAULT_BUDGET = 50_000_000
REL_TOL = 1e-9


@dataclass(frozen=True)
class Violation:
    """``d_{H-F}(u, v) > t * d_{G-F}(u, v)``; ``faults`` are ids in G."""

    faults: tuple[int, ...]
    u: int
    v: int
    dh: float
    dg: float

    def to_line(self) -> str:
        fl = ",".join(map(str, self.faults))
        return f"FAULTS={fl} PAIR={self.u},{self.v} DH={_fmt(self.dh)} DG={_fmt(self.dg)}"

    @classmethod
    def from_line(cls, line: str) -> Violation:
        parts = dict(tok.split("=", 1) for tok in line.split())
        faults = tuple(int(x) for x in parts["FAULTS"].split(",") if x)
        u, v = (int(x) for x in parts["PAIR"].split(","))
        return cls(faults, u, v, float(parts["DH"]), float(parts["DG"]))


def _fmt(x: float) -> str:
    return "inf" if math.isinf(x) else repr(x)


def stretch_ok(dh: float, dg: float, t: float) -> bool:
    if math.isinf(dg):
        return True
    if math.isinf(dh):
        return False
    # slack for float sums taken along different paths
    return dh <= t * dg * (1 + REL_TOL) + REL_TOL


def fault_set_count(m: int, f: int) -> int:
    return sum(math.comb(m, i) for i in range(min(f, m) + 1))


def _host_ids(g: WeightedGraph, h: WeightedGraph) -> list[int]:
    if h.n != g.n:
        raise GraphError("spanner and graph have different node counts")
    ids = []
    for u, v, w in h.edges:
        e = g.edge_id(u, v)
        if e is None or g.weight(e) != w:
            raise GraphError(f"spanner edge ({u}, {v}, {w}) is not an edge of the graph")
        ids.append(e)
    return ids


def check_fault_set(g: WeightedGraph, h: WeightedGraph, faults, t: float,
                    host_ids: list[int] | None = None) -> Violation | None:
    """Check every node pair under one fault set (ids in ``g``)."""
    if host_ids is None:
        host_ids = _host_ids(g, h)
    fset = frozenset(faults)
    hf = frozenset(i for i, e in enumerate(host_ids) if e in fset)
    for s in range(g.n):
        dg = distances_from(g, s, fset)
        dh = distances_from(h, s, hf)
        for x in range(s + 1, g.n):
            if not stretch_ok(dh[x], dg[x], t):
                return Violation(tuple(sorted(fset)), s, x, dh[x], dg[x])
    return None


def verify_eft(g: WeightedGraph, h: WeightedGraph, f: int, k: int,
               mode: Literal["exhaustive", "sampled"] = "exhaustive",
               trials: int = 1000, seed: int = 0, budget: int = DEFAULT_BUDGET,
               force: bool = False) -> Violation | None:
    """None if ``h`` is an f-EFT (2k-1)-spanner of ``g``, else a witness.

    Exhaustive mode tries every fault set of at most ``f`` edges of ``g``.
    Sampled mode draws ``trials`` fault sets (size uniform in ``0..f``, then a
    uniform subset) and certifies nothing on success. Two infinite distances
    count as satisfied.
    """
    if f < 0 or k < 1:
        raise ValueError("need f >= 0 and k >= 1")
    host_ids = _host_ids(g, h)
    t = 2 * k - 1
    if mode == "exhaustive":
        work = fault_set_count(g.m, f) * g.n * g.n
        if work > budget and not force:
            raise BudgetExceeded(f"exhaustive verification needs ~{work} pair checks (budget {budget})")
        for size in range(min(f, g.m) + 1):
            for faults in itertools.combinations(range(g.m), size):
                bad = check_fault_set(g, h, faults, t, host_ids)
                if bad is not None:
                    return bad
        return None
    if mode == "sampled":
        rng = random.Random(seed)
        for _ in range(trials):
            size = rng.randint(0, min(f, g.m))
            faults = rng.sample(range(g.m), size)
            bad = check_fault_set(g, h, faults, t, host_ids)
            if bad is not None:
                return bad
        return None
    raise ValueError(f"unknown mode {mode!r}")


def replay(g: WeightedGraph, h: WeightedGraph, v: Violation, k: int) -> bool:
    """True if the witness really violates the stretch bound."""
    host_ids = _host_ids(g, h)
    fset = frozenset(v.faults)
    hf = frozenset(i for i, e in enumerate(host_ids) if e in fset)
    dg = distances_from(g, v.u, fset)[v.v]
    dh = distances_from(h, v.u, hf)[v.v]
    return not stretch_ok(dh, dg, 2 * k - 1)
