"""Weighted undirected graphs with a canonical edge order.

Edge ids are positions in the canonical order, so "heavier" always means
"larger id". Every other module relies on that.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from collections.abc import Iterable, Iterator

INF = math.inf


class GraphError(ValueError):
    """Malformed graph, or a query with an invalid node or edge id."""


class WeightedGraph:
    """Immutable simple undirected graph with non-negative weights.

    Edges are sorted by ``(weight, min endpoint, max endpoint)`` at
    construction and edge ``i`` is the ``i``-th edge in that order.

    ``presorted=True`` keeps the given edge order as the canonical one
    (weights must be nondecreasing). Derived graphs whose endpoints were
    renamed use it so that edge identities survive the renaming.
    """

    __slots__ = ("n", "edges", "adj", "left", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]] = (),
                 *, left: int | None = None, presorted: bool = False):
        if n < 0:
            raise GraphError(f"negative node count {n}")
        norm = []
        for u, v, *rest in edges:
            w = float(rest[0]) if rest else 1.0
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if not w >= 0 or math.isinf(w):
                raise GraphError(f"bad weight {w} on edge ({u}, {v})")
            norm.append((min(u, v), max(u, v), w))
        if presorted:
            for a, b in zip(norm, norm[1:]):
                if b[2] < a[2]:
                    raise GraphError("presorted edges must have nondecreasing weight")
        else:
            norm.sort(key=lambda e: (e[2], e[0], e[1]))
        index = {}
        for eid, (u, v, _) in enumerate(norm):
            if (u, v) in index:
                raise GraphError(f"duplicate edge ({u}, {v})")
            index[(u, v)] = eid
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v, _) in enumerate(norm):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        for lst in adj:
            lst.sort()
        if left is not None and not 0 <= left <= n:
            raise GraphError(f"left side size {left} out of range")
        self.n = n
        self.edges: tuple[tuple[int, int, float], ...] = tuple(norm)
        self.adj: tuple[tuple[tuple[int, int], ...], ...] = tuple(tuple(a) for a in adj)
        self.left = left
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def weight(self, eid: int) -> float:
        return self.edges[eid][2]

    def endpoints(self, eid: int) -> tuple[int, int]:
        u, v, _ = self.edges[eid]
        return u, v

    def edge_id(self, u: int, v: int) -> int | None:
        """Id of the edge joining ``u`` and ``v``, or None."""
        return self._index.get((min(u, v), max(u, v)))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def average_degree(self) -> float:
        return 2 * self.m / self.n if self.n else 0.0

    def subgraph(self, edge_ids: Iterable[int]) -> WeightedGraph:
        """Spanning subgraph on the given edges.

        Edge ``i`` of the result is the ``i``-th smallest kept id, since
        the canonical order restricted to a subset is unchanged.
        """
        kept = sorted(set(edge_ids))
        self._check_edges(kept)
        return WeightedGraph(self.n, [self.edges[e] for e in kept],
                             left=self.left, presorted=True)

    def is_subgraph_of(self, other: WeightedGraph) -> bool:
        if self.n != other.n:
            return False
        for u, v, w in self.edges:
            eid = other.edge_id(u, v)
            if eid is None or other.weight(eid) != w:
                return False
        return True

    def _check_nodes(self, *nodes: int) -> None:
        for x in nodes:
            if not 0 <= x < self.n:
                raise GraphError(f"invalid node id {x}")

    def _check_edges(self, eids: Iterable[int]) -> None:
        for e in eids:
            if not 0 <= e < self.m:
                raise GraphError(f"invalid edge id {e}")


def heaviest(edge_ids: Iterable[int]) -> int:
    """Canonically heaviest edge of a nonempty edge set."""
    return max(edge_ids)


def shortest_path(g, s: int, t: int, excluded=frozenset(), bound: float = INF):
    """Min-weight ``s``-``t`` path avoiding ``excluded``, fewest edges among ties.

    ``g`` only needs an ``adj`` list of ``(neighbor, edge id)`` pairs and an
    ``edges`` sequence of ``(u, v, w)``. Returns ``(weight, [edge ids])`` or
    None if no path of weight ``<= bound`` exists.
    """
    if s == t:
        return 0.0, []
    edges = g.edges
    best = {s: (0.0, 0)}
    parent: dict[int, tuple[int, int]] = {}
    heap = [(0.0, 0, s)]
    done = set()
    while heap:
        d, h, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        if x == t:
            path = []
            while x != s:
                x, e = parent[x]
                path.append(e)
            path.reverse()
            return d, path
        for y, e in g.adj[x]:
            if e in excluded or y in done:
                continue
            nd = d + edges[e][2]
            if nd > bound:
                continue
            key = (nd, h + 1)
            if y not in best or key < best[y]:
                best[y] = key
                parent[y] = (x, e)
                heapq.heappush(heap, (nd, h + 1, y))
    return None


def hop_path(g, s: int, t: int, excluded=frozenset(), max_hops: float = INF):
    """Fewest-hop ``s``-``t`` path avoiding ``excluded`` as a list of edge ids.

    BFS visits neighbors in increasing node id, so the returned path is the
    lexicographically-first shortest one. None if it would exceed ``max_hops``.
    """
    if s == t:
        return []
    parent = {s: None}
    frontier = deque([(s, 0)])
    while frontier:
        x, h = frontier.popleft()
        if h >= max_hops:
            continue
        for y, e in g.adj[x]:
            if e in excluded or y in parent:
                continue
            parent[y] = (x, e)
            if y == t:
                path = []
                while y != s:
                    y, e2 = parent[y]
                    path.append(e2)
                path.reverse()
                return path
            frontier.append((y, h + 1))
    return None


def weighted_distance(g: WeightedGraph, s: int, t: int, excluded=frozenset()) -> float:
    """Shortest-path weight from ``s`` to ``t`` in ``g`` minus ``excluded``; INF if cut off."""
    g._check_nodes(s, t)
    g._check_edges(excluded)
    res = shortest_path(g, s, t, excluded)
    return INF if res is None else res[0]


def hop_distance(g: WeightedGraph, s: int, t: int, excluded=frozenset()) -> float:
    """Unweighted distance (edge count); INF if disconnected."""
    g._check_nodes(s, t)
    g._check_edges(excluded)
    path = hop_path(g, s, t, excluded)
    return INF if path is None else len(path)


def distances_from(g, s: int, excluded=frozenset()) -> list[float]:
    """Single-source weighted distances (Dijkstra)."""
    dist = [INF] * g.n
    dist[s] = 0.0
    heap = [(0.0, s)]
    edges = g.edges
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist[x]:
            continue
        for y, e in g.adj[x]:
            if e in excluded:
                continue
            nd = d + edges[e][2]
            if nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


def girth(g: WeightedGraph) -> float:
    """Length in edges of a shortest cycle; INF for forests.

    BFS from every root; a non-tree edge (x, y) closes a walk of length
    d[x] + d[y] + 1, and the minimum over all roots is exactly the girth.
    """
    best = INF
    for root in range(g.n):
        dist = {root: 0}
        via = {root: -1}
        frontier = deque([root])
        while frontier:
            x = frontier.popleft()
            if 2 * dist[x] >= best:
                break
            for y, e in g.adj[x]:
                if e == via[x]:
                    continue
                if y in dist:
                    best = min(best, dist[x] + dist[y] + 1)
                else:
                    dist[y] = dist[x] + 1
                    via[y] = e
                    frontier.append(y)
    return best


def enumerate_cycles(g: WeightedGraph, max_len: int) -> Iterator[list[int]]:
    """Yield every simple cycle with at most ``max_len`` edges, once each.

    A cycle is rooted at its smallest node and walked in the direction whose
    second node is smaller than its last, which removes rotations and
    reflections. Each cycle is yielded as a list of edge ids in walk order.
    """
    if max_len < 3:
        return
    adj = g.adj
    for s in range(g.n):
        nodes = [s]
        path: list[int] = []
        on_path = {s}
        stack = [iter(adj[s])]
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                if path:
                    path.pop()
                    on_path.discard(nodes.pop())
                continue
            y, e = step
            if y == s:
                if len(path) >= 2 and nodes[1] < nodes[-1]:
                    yield path + [e]
                continue
            if y < s or y in on_path or len(path) + 1 >= max_len:
                continue
            nodes.append(y)
            path.append(e)
            on_path.add(y)
            stack.append(iter(adj[y]))


def cycle_nodes(g: WeightedGraph, cycle: list[int]) -> list[int]:
    """Node sequence of a cycle given as consecutive edge ids."""
    if len(cycle) == 1:
        return list(g.endpoints(cycle[0]))
    a, b = g.endpoints(cycle[0])
    c, d = g.endpoints(cycle[1])
    start = a if a not in (c, d) else b
    seq = [start]
    cur = start
    for e in cycle:
        u, v = g.endpoints(e)
        cur = v if u == cur else u
        seq.append(cur)
    return seq[:-1]


# ---------------------------------------------------------------------------
# text format

def parse_graph(text: str) -> WeightedGraph:
    """Parse the ``n m`` / ``[L count]`` / ``u v [w]`` text format."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line.split())
    if not lines:
        raise GraphError("empty graph file")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except (ValueError, IndexError):
        raise GraphError(f"bad header: {' '.join(lines[0])!r}") from None
    if len(lines[0]) != 2:
        raise GraphError("header must be 'n m'")
    body = lines[1:]
    left = None
    if body and body[0][0] == "L":
        if len(body[0]) != 2:
            raise GraphError("bad bipartite line, expected 'L <count>'")
        try:
            left = int(body[0][1])
        except ValueError:
            raise GraphError(f"bad left count {body[0][1]!r}") from None
        body = body[1:]
    if len(body) != m:
        raise GraphError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for tok in body:
        if len(tok) not in (2, 3):
            raise GraphError(f"bad edge line {' '.join(tok)!r}")
        try:
            u, v = int(tok[0]), int(tok[1])
            w = float(tok[2]) if len(tok) == 3 else 1.0
        except ValueError:
            raise GraphError(f"bad edge line {' '.join(tok)!r}") from None
        edges.append((u, v, w))
    return WeightedGraph(n, edges, left=left)


def format_graph(g: WeightedGraph) -> str:
    out = [f"{g.n} {g.m}"]
    if g.left is not None:
        out.append(f"L {g.left}")
    out.extend(f"{u} {v} {w!r}" for u, v, w in g.edges)
    return "\n".join(out) + "\n"


def read_graph(path) -> WeightedGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: WeightedGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))
