"""Strong blocking sets: extraction from greedy traces, verification, and
the block-frequency reduction."""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterable
from dataclasses import dataclass

from .graph import GraphError, WeightedGraph, enumerate_cycles
from .greedy import SpannerResult


class CorruptTrace(ValueError):
    pass


def block(e1: int, e2: int) -> tuple[int, int]:
    """Canonical block: the lighter (smaller id) edge first."""
    if e1 == e2:
        raise ValueError(f"a block needs two distinct edges, got ({e1}, {e2})")
    return (e1, e2) if e1 < e2 else (e2, e1)


@dataclass(frozen=True)
class StrongBlockingSet:
    blocks: frozenset[tuple[int, int]]
    host: WeightedGraph

    def __post_init__(self):
        m = self.host.m
        for a, b in self.blocks:
            if not (0 <= a < b < m):
                raise GraphError(f"bad block ({a}, {b}) for a graph with {m} edges")

    @classmethod
    def of(cls, host: WeightedGraph, pairs: Iterable[tuple[int, int]]) -> StrongBlockingSet:
        return cls(frozenset(block(a, b) for a, b in pairs), host)

    def __len__(self) -> int:
        return len(self.blocks)

    def partners(self) -> dict[int, set[int]]:
        out: dict[int, set[int]] = defaultdict(set)
        for a, b in self.blocks:
            out[a].add(b)
            out[b].add(a)
        return out

    def frequency(self) -> Counter:
        c: Counter = Counter()
        for a, b in self.blocks:
            c[a] += 1
            c[b] += 1
        return c

    def max_frequency(self) -> int:
        return max(self.frequency().values(), default=0)


def extract_blocking_set(result: SpannerResult) -> StrongBlockingSet:
    """``{(x, e) : e kept, x in F_e}`` over the greedy trace."""
    tr = result.trace
    pairs = []
    for e in tr.kept:
        if e not in tr.forcing:
            raise CorruptTrace(f"no forcing set recorded for kept edge {e}")
        for x in tr.forcing[e]:
            if x >= e:
                raise CorruptTrace(f"forcing edge {x} is not older than {e}")
            pairs.append((x, e))
    return StrongBlockingSet.of(result.spanner, pairs)


def blocks_cycle(cycle: list[int], partners: dict[int, set[int]]) -> bool:
    top = max(cycle)
    mates = partners.get(top)
    return bool(mates) and any(e in mates for e in cycle)


def verify_strong_blocking(h: WeightedGraph, b: StrongBlockingSet, t: int) -> list[int] | None:
    """Exhaustively check every cycle of at most ``t`` edges.

    Returns None if every such cycle contains a block that includes the
    cycle's heaviest edge, else the first offending cycle. Practical up to
    about ``t <= 10`` and a few hundred edges. ``t < 3`` is vacuous.
    """
    if t < 1:
        raise ValueError("t must be positive")
    partners = b.partners()
    for cyc in enumerate_cycles(h, t):
        if not blocks_cycle(cyc, partners):
            return cyc
    return None


def reduce_block_frequency(h: WeightedGraph, b: StrongBlockingSet, f: int):
    """Delete edges lying in ``>= 4f`` blocks until none is left.

    Highest-frequency edge first (smallest id on ties), recounting after each
    deletion. Returns ``(h', b')`` with ``b'`` re-indexed to ``h'``; edge ``i``
    of ``h'`` is the ``i``-th smallest surviving id of ``h``.
    """
    if f < 1:
        raise ValueError("f must be positive")
    if len(b) > f * h.m:
        raise ValueError(f"|B| = {len(b)} exceeds f*|E| = {f * h.m}")
    blocks = set(b.blocks)
    freq = b.frequency()
    by_edge = b.partners()
    dead: set[int] = set()
    while freq:
        e, c = min(freq.items(), key=lambda kv: (-kv[1], kv[0]))
        if c < 4 * f:
            break
        dead.add(e)
        for x in by_edge.pop(e):
            blocks.discard(block(x, e))
            by_edge[x].discard(e)
            freq[x] -= 1
            if freq[x] == 0:
                del freq[x]
        del freq[e]
    alive = [e for e in range(h.m) if e not in dead]
    pos = {e: i for i, e in enumerate(alive)}
    h2 = h.subgraph(alive)
    return h2, StrongBlockingSet.of(h2, ((pos[a], pos[c]) for a, c in blocks))


def parse_blocking(text: str, host: WeightedGraph) -> StrongBlockingSet:
    pairs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) != 2:
            raise GraphError(f"bad block line {line!r}")
        try:
            pairs.append((int(tok[0]), int(tok[1])))
        except ValueError:
            raise GraphError(f"bad block line {line!r}") from None
    return StrongBlockingSet.of(host, pairs)


def format_blocking(b: StrongBlockingSet) -> str:
    return "".join(f"{x} {y}\n" for x, y in sorted(b.blocks))


def read_blocking(path, host: WeightedGraph) -> StrongBlockingSet:
    with open(path) as fh:
        return parse_blocking(fh.read(), host)


def write_blocking(b: StrongBlockingSet, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_blocking(b))
