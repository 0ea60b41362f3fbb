"""Alternating and unblocked paths: counting, choke sets, dispersion,
degree splitting and random edge subsampling.

Paths are oriented. A path and its reversal are different paths, and the
alternating property is checked along the stored orientation with 1-based
positions: every even-position edge must be heavier (larger id) than its
odd-position neighbours.
"""

from __future__ import annotations

import csv
import math
import random
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass, field

from .blocking import StrongBlockingSet
from .faults import BudgetExceeded
from .graph import WeightedGraph

DEFAULT_BUDGET = 5_000_000
CENSUS_SCHEMA = "# schema: eftspan.census/v1"
CLASSES = ("simple", "alternating", "unblocked_alternating", "edge_simple_alternating")


# ---------------------------------------------------------------------------
# single paths

def is_alternating(edges: Sequence[int]) -> bool:
    for i in range(1, len(edges)):
        # i is the 0-based index of position i + 1
        if i % 2 == 1:
            if not edges[i] > edges[i - 1]:
                return False
        elif not edges[i - 1] > edges[i]:
            return False
    return True


def is_blocked(path, b: StrongBlockingSet) -> bool:
    """True if both edges of some block lie on the path (heaviness ignored)."""
    edges = set(path.edges if isinstance(path, PathRecord) else path)
    return any(x in edges and y in edges for x, y in b.blocks)


@dataclass(frozen=True)
class PathRecord:
    nodes: tuple[int, ...]
    edges: tuple[int, ...]
    simple: bool
    edge_simple: bool
    alternating: bool
    unblocked: bool | None = None

    def __len__(self) -> int:
        return len(self.edges)

    @classmethod
    def from_nodes(cls, g: WeightedGraph, nodes: Sequence[int],
                   b: StrongBlockingSet | None = None) -> PathRecord:
        edges = []
        for x, y in zip(nodes, nodes[1:]):
            e = g.edge_id(x, y)
            if e is None:
                raise ValueError(f"no edge between {x} and {y}")
            edges.append(e)
        return cls(
            nodes=tuple(nodes),
            edges=tuple(edges),
            simple=len(set(nodes)) == len(nodes),
            edge_simple=len(set(edges)) == len(edges),
            alternating=is_alternating(edges),
            unblocked=None if b is None else not is_blocked(edges, b),
        )


def _alt_ok(prev: int, e: int, pos: int) -> bool:
    """Can ``e`` sit at 1-based position ``pos`` after ``prev``?"""
    return e > prev if pos % 2 == 0 else prev > e


def _alternating_trail(g: WeightedGraph, active: set[int], k: int):
    """Exhaustive search for an edge-simple alternating k-path in ``active``."""
    used: set[int] = set()
    nodes: list[int] = []
    edges: list[int] = []

    def dfs(x: int) -> bool:
        if len(edges) == k:
            return True
        pos = len(edges) + 1
        for y, e in g.adj[x]:
            if e not in active or e in used:
                continue
            if edges and not _alt_ok(edges[-1], e, pos):
                continue
            used.add(e)
            edges.append(e)
            nodes.append(y)
            if dfs(y):
                return True
            used.discard(e)
            edges.pop()
            nodes.pop()
        return False

    for s in range(g.n):
        nodes[:] = [s]
        if dfs(s):
            return list(nodes), list(edges)
    return None


def _peel(g: WeightedGraph, active: set[int], k: int):
    """Constructive route: strip every node's lightest (k odd) or heaviest
    (k even) edge, solve for k-1 on the rest, and extend with the stripped
    edge at the path's end. Always succeeds when ``|active| >= k * n``."""
    if not active:
        return None
    if k == 1:
        e = min(active)
        u, v = g.endpoints(e)
        return [u, v], [e]
    pick = min if k % 2 == 1 else max
    stripped: dict[int, int] = {}
    for v in range(g.n):
        inc = [e for _, e in g.adj[v] if e in active]
        if inc:
            stripped[v] = pick(inc)
    sub = _peel(g, active - set(stripped.values()), k - 1)
    if sub is None:
        return None
    nodes, edges = sub
    end = nodes[-1]
    e = stripped[end]
    u, v = g.endpoints(e)
    return nodes + [v if u == end else u], edges + [e]


def find_alternating_kpath(g: WeightedGraph, k: int) -> PathRecord | None:
    """An edge-simple alternating k-path, or None if there is none.

    Tries the peeling construction first and falls back to exhaustive search,
    so None is a proof of absence.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return PathRecord((0,), (), True, True, True) if g.n else None
    active = set(range(g.m))
    found = _peel(g, active, k) or _alternating_trail(g, active, k)
    if found is None:
        return None
    return PathRecord.from_nodes(g, found[0])


# ---------------------------------------------------------------------------
# census

@dataclass
class PathCounts:
    simple: int = 0
    alternating: int = 0
    unblocked_alternating: int = 0
    edge_simple_alternating: int = 0

    def add(self, other: PathCounts) -> None:
        for c in CLASSES:
            setattr(self, c, getattr(self, c) + getattr(other, c))


@dataclass
class CensusReport:
    """Exact oriented path counts keyed by ``(s, t, j)``.

    ``simple``: simple j-paths. ``alternating``: simple alternating ones.
    ``unblocked_alternating``: simple, alternating and unblocked.
    ``edge_simple_alternating``: alternating trails (nodes may repeat);
    only filled when requested.
    """

    n: int
    m: int
    counts: dict[tuple[int, int, int], PathCounts] = field(default_factory=dict)
    classes: tuple[str, ...] = CLASSES

    @property
    def average_degree(self) -> float:
        return 2 * self.m / self.n if self.n else 0.0

    def totals(self, j: int | None = None) -> PathCounts:
        tot = PathCounts()
        for (_, _, jj), c in self.counts.items():
            if j is None or jj == j:
                tot.add(c)
        return tot

    def get(self, s: int, t: int, j: int) -> PathCounts:
        return self.counts.get((s, t, j), PathCounts())

    def write_csv(self, path_or_file) -> None:
        own = isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__")
        fh = open(path_or_file, "w", newline="") if own else path_or_file
        try:
            fh.write(CENSUS_SCHEMA + "\n")
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["s", "t", "j", "simple", "alternating", "unblocked_alternating"])
            for (s, t, j) in sorted(self.counts):
                c = self.counts[(s, t, j)]
                w.writerow([s, t, j, c.simple, c.alternating, c.unblocked_alternating])
        finally:
            if own:
                fh.close()


def estimate_paths(g: WeightedGraph, j: int) -> int:
    dmax = max((g.degree(v) for v in range(g.n)), default=0)
    return g.n * dmax * max(dmax - 1, 1) ** max(j - 1, 0)


def count_paths(g: WeightedGraph, b: StrongBlockingSet | None, j: int,
                classes: Sequence[str] = CLASSES[:3], budget: int = DEFAULT_BUDGET,
                force: bool = False) -> CensusReport:
    """Enumerate all oriented j-paths and count them by class.

    Refuses (``BudgetExceeded``) when the rough path estimate ``n * D^j``
    exceeds ``budget``, unless ``force``.
    """
    if j < 1:
        raise ValueError("j must be positive")
    unknown = set(classes) - set(CLASSES)
    if unknown:
        raise ValueError(f"unknown path classes {sorted(unknown)}")
    if not force and estimate_paths(g, j) > budget:
        raise BudgetExceeded(f"~{estimate_paths(g, j)} paths of length {j} (budget {budget})")
    partners = b.partners() if b is not None else {}
    report = CensusReport(g.n, g.m, classes=tuple(classes))
    counts = report.counts
    want_simple = "simple" in classes
    want_trails = "edge_simple_alternating" in classes

    def bump(s, t, attr):
        c = counts.get((s, t, j))
        if c is None:
            c = counts[(s, t, j)] = PathCounts()
        setattr(c, attr, getattr(c, attr) + 1)

    # simple paths; alternation and blocking tracked along the way
    for s in range(g.n):
        on_path = {s}
        used: list[int] = []

        def dfs(x, alt, blocked):
            depth = len(used)
            if depth == j:
                if want_simple:
                    bump(s, x, "simple")
                if alt:
                    bump(s, x, "alternating")
                    if not blocked:
                        bump(s, x, "unblocked_alternating")
                return
            for y, e in g.adj[x]:
                if y in on_path:
                    continue
                a = alt and (not used or _alt_ok(used[-1], e, depth + 1))
                if not a and not want_simple:
                    continue
                mates = partners.get(e)
                bl = blocked or bool(mates and any(u in mates for u in used))
                on_path.add(y)
                used.append(e)
                dfs(y, a, bl)
                used.pop()
                on_path.discard(y)

        dfs(s, True, False)

    if want_trails:
        for s in range(g.n):
            used_set: set[int] = set()
            seq: list[int] = []

            def trail(x):
                if len(seq) == j:
                    bump(s, x, "edge_simple_alternating")
                    return
                for y, e in g.adj[x]:
                    if e in used_set or (seq and not _alt_ok(seq[-1], e, len(seq) + 1)):
                        continue
                    used_set.add(e)
                    seq.append(e)
                    trail(y)
                    seq.pop()
                    used_set.discard(e)

            trail(s)
    return report


def alternating_trails(g: WeightedGraph, j: int):
    """Yield every oriented edge-simple alternating j-path as a PathRecord."""
    for s in range(g.n):
        nodes = [s]
        seq: list[int] = []
        used: set[int] = set()

        def walk(x):
            if len(seq) == j:
                yield PathRecord(tuple(nodes), tuple(seq), len(set(nodes)) == len(nodes), True, True)
                return
            for y, e in g.adj[x]:
                if e in used or (seq and not _alt_ok(seq[-1], e, len(seq) + 1)):
                    continue
                used.add(e)
                seq.append(e)
                nodes.append(y)
                yield from walk(y)
                nodes.pop()
                seq.pop()
                used.discard(e)

        yield from walk(s)


# ---------------------------------------------------------------------------
# choke sets and dispersion

@dataclass(frozen=True)
class ChokeSet:
    s: int
    t: int
    edges: frozenset[int]

    def __len__(self) -> int:
        return len(self.edges)


def _unblocked_simple_paths(g: WeightedGraph, partners, s: int, max_len: int,
                            alternating: bool = False):
    """Yield ``(t, edges)`` for simple unblocked paths from ``s`` of length 1..max_len."""
    on_path = {s}
    used: list[int] = []

    def dfs(x):
        for y, e in g.adj[x]:
            if y in on_path:
                continue
            if alternating and used and not _alt_ok(used[-1], e, len(used) + 1):
                continue
            mates = partners.get(e)
            if mates and any(u in mates for u in used):
                continue
            used.append(e)
            yield y, used
            if len(used) < max_len:
                on_path.add(y)
                yield from dfs(y)
                on_path.discard(y)
            used.pop()

    yield from dfs(s)


def _check_frequency(b: StrongBlockingSet, f: int) -> None:
    top = b.max_frequency()
    if top > f:
        raise ValueError(f"an edge lies in {top} blocks, more than f={f}; reduce the blocking set first")


def _choke_from_heaviest(s: int, t: int, heaviest_edges: set[int]) -> ChokeSet:
    chosen: set[int] = set()
    pending = set(heaviest_edges)
    # each round: heaviest edge over the paths whose heaviest edge is still uncovered
    while pending:
        top = max(pending)
        chosen.add(top)
        pending.discard(top)
    return ChokeSet(s, t, frozenset(chosen))


def build_choke_set(h: WeightedGraph, b: StrongBlockingSet, s: int, t: int,
                    k: int, f: int) -> ChokeSet:
    """Edges covering the heaviest edge of every simple unblocked s-t path
    of length ``<= k``. Needs every edge in at most ``f`` blocks; then the
    result has at most ``k*f + 1`` edges when ``b`` strongly 2k-blocks ``h``."""
    _check_frequency(b, f)
    heavy = set()
    if s != t:
        for x, edges in _unblocked_simple_paths(h, b.partners(), s, k):
            if x == t:
                heavy.add(max(edges))
    return _choke_from_heaviest(s, t, heavy)


def all_choke_sets(h: WeightedGraph, b: StrongBlockingSet, k: int, f: int) -> dict[tuple[int, int], ChokeSet]:
    """``build_choke_set`` for every ordered pair ``s != t``, one DFS per source."""
    _check_frequency(b, f)
    partners = b.partners()
    out = {}
    for s in range(h.n):
        heavy: dict[int, set[int]] = defaultdict(set)
        for x, edges in _unblocked_simple_paths(h, partners, s, k):
            heavy[x].add(max(edges))
        for t in range(h.n):
            if t != s:
                out[(s, t)] = _choke_from_heaviest(s, t, heavy.get(t, set()))
    return out


def dispersion_bound(j: int, k: int, f: int, c: float) -> float:
    """``(c k^2 f)^floor(j/2)``: exponent (j-1)/2 for odd j, j/2 for even j.

    ``f = 0`` is treated as 1 so that the base stays positive.
    """
    return (c * k * k * max(f, 1)) ** (j // 2)


@dataclass
class DispersionReport:
    k: int
    f: int
    c: float
    ok: bool
    max_count: dict[int, int]
    worst_ratio: float
    worst: tuple[int, int, int] | None
    empirical_c: float

    def summary(self) -> str:
        counts = " ".join(f"j={j}:{self.max_count[j]}" for j in sorted(self.max_count))
        return (f"dispersion k={self.k} f={self.f} c={self.c} ok={self.ok} "
                f"max_counts[{counts}] worst_ratio={self.worst_ratio:.4g} "
                f"empirical_c={self.empirical_c:.4g}")


def unblocked_alternating_counts(h: WeightedGraph, b: StrongBlockingSet, k: int):
    """``{(s, t, j): count}`` of simple unblocked alternating paths, ``0 <= j <= k``."""
    partners = b.partners()
    counts: dict[tuple[int, int, int], int] = defaultdict(int)
    for s in range(h.n):
        counts[(s, s, 0)] = 1
        if k >= 1:
            for t, edges in _unblocked_simple_paths(h, partners, s, k, alternating=True):
                counts[(s, t, len(edges))] += 1
    return dict(counts)


def check_dispersion(h: WeightedGraph, b: StrongBlockingSet, k: int, f: int, c: float) -> DispersionReport:
    """Compare every per-pair count of simple unblocked alternating j-paths
    (``j <= k``) against ``dispersion_bound``. ``empirical_c`` is the
    smallest ``c`` that would have passed."""
    counts = unblocked_alternating_counts(h, b, k)
    max_count = {j: 0 for j in range(k + 1)}
    ok = True
    worst_ratio = 0.0
    worst = None
    emp = 0.0
    base = k * k * max(f, 1)
    for (s, t, j), cnt in counts.items():
        max_count[j] = max(max_count[j], cnt)
        bound = dispersion_bound(j, k, f, c)
        ratio = cnt / bound
        if ratio > worst_ratio:
            worst_ratio, worst = ratio, (s, t, j)
        if cnt > bound:
            ok = False
        e = j // 2
        if e:
            emp = max(emp, cnt ** (1 / e) / base)
        elif cnt > 1:
            emp = math.inf
    return DispersionReport(k, f, c, ok, max_count, worst_ratio, worst, emp)


# ---------------------------------------------------------------------------
# graph surgery

def split_high_degree(h: WeightedGraph, b: StrongBlockingSet):
    """Split nodes of degree ``>= 4d`` (``d`` = average degree of ``h``) in two.

    A split node keeps the lighter half of its edges and a fresh node takes
    the rest. Edge ids are unchanged, so ``b`` carries over as is. Nodes of
    degree 1 are never split. Returns ``(h', b', node_map)`` where
    ``node_map[x]`` is the original node of ``x``.
    """
    d = h.average_degree()
    limit = 4 * d
    ends = [[u, v] for u, v, _ in h.edges]
    inc: list[list[int]] = [[e for _, e in h.adj[v]] for v in range(h.n)]
    node_map = list(range(h.n))
    if d > 0:
        v = 0
        while v < len(inc):
            deg = len(inc[v])
            if deg >= limit and deg >= 2:
                mine = sorted(inc[v])
                keep, move = mine[: (deg + 1) // 2], mine[(deg + 1) // 2:]
                new = len(inc)
                inc[v] = keep
                inc.append(move)
                node_map.append(node_map[v])
                for e in move:
                    ends[e] = [new if x == v else x for x in ends[e]]
                continue
            v += 1
    h2 = WeightedGraph(len(inc), [(a, c, w) for (a, c), (_, _, w) in zip(ends, h.edges)],
                       presorted=True)
    return h2, StrongBlockingSet(b.blocks, h2), node_map


def random_edge_subsample(h: WeightedGraph, b: StrongBlockingSet, p: float, seed: int):
    """Keep each edge independently with probability ``p``; keep the blocks
    whose two edges both survive. Returns ``(h', b')`` re-indexed to ``h'``."""
    if not 0 <= p <= 1:
        raise ValueError("p must be a probability")
    rng = random.Random(seed)
    kept = [e for e in range(h.m) if rng.random() < p]
    pos = {e: i for i, e in enumerate(kept)}
    h2 = h.subgraph(kept)
    blocks = [(pos[x], pos[y]) for x, y in b.blocks if x in pos and y in pos]
    return h2, StrongBlockingSet.of(h2, blocks)
