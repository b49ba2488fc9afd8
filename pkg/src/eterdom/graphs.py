"""Graph and tree primitives: parsing, distances, graph powers, leaf ranks.

Vertices are dense 0-based indices. Graphs and trees are immutable after
construction, so every function here is pure and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import GraphFormatError, NotATreeError

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            lists[u].append(v)
            lists[v].append(u)
        adj = []
        for u, nbrs in enumerate(lists):
            nbrs.sort()
            for i in range(1, len(nbrs)):
                if nbrs[i] == nbrs[i - 1]:
                    raise GraphFormatError(f"duplicate edge ({min(u, nbrs[i])}, {max(u, nbrs[i])})")
            adj.append(tuple(nbrs))
        return cls(n, tuple(adj))

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)


@dataclass(frozen=True)
class Tree:
    """Validated connected acyclic Graph, optionally rooted.

    When rooted, ``parent[root] == -1``, ``depth[root] == 0`` and the children
    tuples partition the non-root vertices.
    """

    graph: Graph
    root: Optional[int] = None
    parent: Optional[tuple[int, ...]] = field(default=None, compare=False)
    children: Optional[tuple[tuple[int, ...], ...]] = field(default=None, compare=False)
    depth: Optional[tuple[int, ...]] = field(default=None, compare=False)

    @classmethod
    def from_graph(cls, g: Graph) -> "Tree":
        if g.n < 1:
            raise NotATreeError("a tree needs at least one vertex")
        if g.edge_count != g.n - 1:
            raise NotATreeError(f"edge count {g.edge_count} != n-1 = {g.n - 1}")
        if not is_connected(g):
            raise NotATreeError("graph is not connected")
        return cls(g)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tree":
        return cls.from_graph(Graph.from_edges(n, edges))

    @property
    def n(self) -> int:
        return self.graph.n

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.graph.degree(v) <= 1]

    def rooted(self, root: int) -> "Tree":
        g = self.graph
        if not 0 <= root < g.n:
            raise ValueError(f"root {root} out of range")
        parent = [-2] * g.n
        parent[root] = -1
        depth = [0] * g.n
        order = [root]
        for u in order:
            for w in g.adj[u]:
                if parent[w] == -2:
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    order.append(w)
        children: list[list[int]] = [[] for _ in range(g.n)]
        for v in range(g.n):
            if parent[v] >= 0:
                children[parent[v]].append(v)
        return Tree(
            g,
            root=root,
            parent=tuple(parent),
            children=tuple(tuple(c) for c in children),
            depth=tuple(depth),
        )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return bfs_distances(g, 0).count(UNREACHABLE) == 0


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get UNREACHABLE."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = [source]
    for u in queue:
        du = dist[u] + 1
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; math.inf when the graph is disconnected.

    The infinite marker compares greater than any integer, which is what the
    closure-peeling logic relies on when a vertex set induces a disconnected
    subgraph.
    """
    if g.n < 1:
        raise ValueError("diameter needs at least one vertex")
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        far = max(dist)
        if UNREACHABLE in dist:
            return math.inf
        best = max(best, far)
    return best


def tree_diameter(t: Tree) -> int:
    """Diameter by double BFS; valid because trees are connected and acyclic."""
    d0 = bfs_distances(t.graph, 0)
    far = d0.index(max(d0))
    d1 = bfs_distances(t.graph, far)
    return max(d1)


@lru_cache(maxsize=256)
def distance_matrix(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs BFS distances, cached per graph (meant for small instances)."""
    return tuple(tuple(bfs_distances(g, v)) for v in range(g.n))


def power_graph(g: Graph, k: int) -> Graph:
    """Graph with an edge {u,v} whenever 1 <= dist_g(u,v) <= k."""
    if k < 1:
        raise ValueError("power requires k >= 1")
    edges = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if 0 < dist[v] <= k:
                edges.append((u, v))
    return Graph.from_edges(g.n, edges)


# ---------------------------------------------------------------------------
# Leaf ranks and closures
# ---------------------------------------------------------------------------
#
# Rank 0 marks leaves. A vertex has rank t > 0 when it is adjacent to some
# vertex satisfying the rank-(t-1) predicate and all but at most one of its
# neighbours already carry a rank below t. classify reports the minimum such
# t per vertex (None when no level ever applies).


def leaf_ranks(t: Tree) -> list[Optional[int]]:
    g = t.graph
    return _leaf_ranks(g.adj, range(g.n))


def _leaf_ranks(adj, vertices) -> dict | list:
    """Shared rank computation; works on Graph.adj or an adjacency dict."""
    verts = list(vertices)
    is_dict = isinstance(adj, dict)
    nbrs = adj.__getitem__
    level = {v: len(nbrs(v)) <= 1 for v in verts}
    rank: dict = {v: (0 if level[v] else None) for v in verts}
    cap = len(verts) + 1
    for t_idx in range(1, cap):
        if not any(level.values()):
            break
        if all(r is not None for r in rank.values()):
            break
        nxt = {}
        for v in verts:
            has_prev = any(level[u] for u in nbrs(v))
            if not has_prev:
                nxt[v] = False
                continue
            exceptions = 0
            for u in nbrs(v):
                r = rank[u]
                if r is None or r >= t_idx:
                    exceptions += 1
                    if exceptions > 1:
                        break
            nxt[v] = exceptions <= 1
        for v in verts:
            if nxt[v] and rank[v] is None:
                rank[v] = t_idx
        level = nxt
    if is_dict:
        return rank
    return [rank[v] for v in verts]


@dataclass(frozen=True)
class LeafClosure:
    """The open/closed vertex closure hanging below a ranked vertex."""

    center: int
    rank: int
    open_set: frozenset[int]
    closed_set: frozenset[int]


def leaf_closure(t: Tree, v: int) -> LeafClosure:
    g = t.graph
    ranks = leaf_ranks(t)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if ranks[v] is None:
        raise ValueError(f"vertex {v} has no leaf rank")
    closed = _closures_up_to(g.adj, {u: r for u, r in enumerate(ranks)}, ranks[v])
    open_set = frozenset(closed[v] - {v})
    return LeafClosure(v, ranks[v], open_set, frozenset(closed[v]))


def _closures_up_to(adj, rank: dict, top: int) -> dict[int, set[int]]:
    """Closed closures for every vertex of rank <= top, built by rank layer."""
    nbrs = adj.__getitem__
    closed: dict[int, set[int]] = {}
    for layer in range(top + 1):
        for v, r in rank.items():
            if r != layer:
                continue
            if layer == 0:
                closed[v] = {v}
            elif layer == 1:
                closed[v] = {v} | {u for u in nbrs(v) if rank[u] == 0}
            else:
                acc = {v}
                for u in nbrs(v):
                    ru = rank[u]
                    if ru is not None and ru < layer:
                        acc |= closed[u]
                closed[v] = acc
    return closed


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain ``u v`` edge-list format.

    Lines that are empty or start with ``#`` are skipped. The first
    non-comment line may be ``n <count>`` to declare the vertex count
    (needed for isolated vertices); otherwise the count is one past the
    largest index seen.
    """
    declared: Optional[int] = None
    edges: list[tuple[int, int]] = []
    edge_line: dict[tuple[int, int], int] = {}
    max_seen = -1
    first_data = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first_data and parts[0] == "n":
            if len(parts) != 2:
                raise GraphFormatError("vertex-count line must be 'n <count>'", lineno)
            try:
                declared = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[1]!r}", lineno) from None
            if declared < 0:
                raise GraphFormatError(f"negative vertex count {declared}", lineno)
            first_data = False
            continue
        first_data = False
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative vertex index in {line!r}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in edge_line:
            raise GraphFormatError(
                f"duplicate edge ({key[0]}, {key[1]}) first seen on line {edge_line[key]}",
                lineno,
            )
        edge_line[key] = lineno
        edges.append(key)
        max_seen = max(max_seen, u, v)
    n = declared if declared is not None else max_seen + 1
    if n < 0:
        n = 0
    if max_seen >= n:
        raise GraphFormatError(f"vertex {max_seen} exceeds declared count {n}")
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6 format (bit-exact, standard 6-bit big-endian upper triangle)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    for i, b in enumerate(data):
        if not 0 <= b <= 63:
            raise GraphFormatError(f"graph6 byte {i} out of range: {s[i]!r}")
    n, pos = _g6_read_n(data)
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = data[pos:]
    if len(body) < need_bytes:
        raise GraphFormatError("truncated graph6 bit stream")
    if len(body) > need_bytes:
        raise GraphFormatError("trailing bytes after graph6 bit stream")
    bits = []
    for b in body:
        for shift in range(5, -1, -1):
            bits.append((b >> shift) & 1)
    if any(bits[need_bits:]):
        raise GraphFormatError("nonzero padding bits in graph6 stream")
    edges = []
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                edges.append((row, col))
            i += 1
    return Graph.from_edges(n, edges)


def _g6_read_n(data: list[int]) -> tuple[int, int]:
    if data[0] != 63:
        return data[0], 1
    if len(data) < 4:
        raise GraphFormatError("truncated graph6 vertex count")
    if data[1] == 63:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 vertex count")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        return n, 8
    n = (data[1] << 12) | (data[2] << 6) | data[3]
    return n, 4


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in range(30, -1, -6)]
    bits = []
    adj_sets = [set(nbrs) for nbrs in g.adj]
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if col in adj_sets[row] else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        b = 0
        for bit in bits[i:i + 6]:
            b = (b << 1) | bit
        body.append(b)
    return "".join(chr(63 + b) for b in head + body)
