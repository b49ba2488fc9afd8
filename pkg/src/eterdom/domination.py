"""Exact domination and distance-k domination solvers.

Trees get a linear greedy sweep (place a guard only at the last vertex that
can still cover the deepest unserved vertex); general small graphs get a
brute-force subset search used as the independent oracle in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import GuardRailError
from .graphs import Graph, Tree, bfs_distances

_BIG = 1 << 30


@dataclass(frozen=True)
class DominationResult:
    value: int
    witness: tuple[int, ...]
    k: int


def is_distance_dominating(g: Graph, k: int, vertices: Iterable[int]) -> bool:
    """True when every vertex of g is within distance k of the given set."""
    sources = list(vertices)
    if not sources:
        return g.n == 0
    dist = [-1] * g.n
    queue = []
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    for u in queue:
        du = dist[u] + 1
        if du > k:
            continue
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return all(d >= 0 for d in dist)


def distance_domination(t: Tree, k: int) -> DominationResult:
    """Exact minimum distance-k dominating set of a tree, with witness."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _greedy_tree_domination(t, k, required=())


def domination_with_required(t: Tree, required: Iterable[int]) -> DominationResult:
    """Minimum dominating set (k = 1) among sets containing ``required``.

    Vertices already served by the required set are marked covered up front,
    then the same greedy sweep covers the remainder; always feasible.
    """
    req = tuple(sorted(set(required)))
    for v in req:
        if not 0 <= v < t.n:
            raise ValueError(f"required vertex {v} out of range")
    return _greedy_tree_domination(t, 1, required=req)


def _greedy_tree_domination(t: Tree, k: int, required: tuple[int, ...]) -> DominationResult:
    g = t.graph
    n = g.n
    rooted = t.rooted(0)
    parent = rooted.parent
    order = sorted(range(n), key=lambda v: rooted.depth[v])

    pre_covered = [False] * n
    req_set = set(required)
    if required:
        dist = [-1] * n
        queue = []
        for s in required:
            dist[s] = 0
            queue.append(s)
        for u in queue:
            pre_covered[u] = True
            du = dist[u] + 1
            if du > k:
                continue
            for v in g.adj[u]:
                if dist[v] < 0:
                    dist[v] = du
                    queue.append(v)

    need = [-1] * n   # deepest unserved vertex distance in subtree, -1 = none
    have = [_BIG] * n  # nearest selected vertex in subtree that can still reach up
    chosen: list[int] = []
    for v in reversed(order):
        nd, hv = -1, _BIG
        for c in g.adj[v]:
            if c == parent[v]:
                continue
            if have[c] + 1 <= k:
                hv = min(hv, have[c] + 1)
            if need[c] >= 0:
                nd = max(nd, need[c] + 1)
        if v in req_set:
            hv = 0
        if nd >= 0 and hv + nd <= k:
            nd = -1
        if nd < 0 and hv > k and not pre_covered[v]:
            nd = 0
        if nd == k:
            chosen.append(v)
            hv, nd = 0, -1
        need[v], have[v] = nd, hv
    if need[0] >= 0:
        chosen.append(0)
    witness = tuple(sorted(set(chosen) | req_set))
    return DominationResult(len(witness), witness, k)


def distance_domination_brute(g: Graph, k: int, *, max_n: int = 25) -> DominationResult:
    """Exact gamma_k by increasing-cardinality lexicographic subset search."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n > max_n:
        raise GuardRailError(f"brute-force solver limited to n <= {max_n}, got {g.n}")
    if g.n == 0:
        return DominationResult(0, (), k)
    balls = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        mask = 0
        for u in range(g.n):
            if 0 <= dist[u] <= k:
                mask |= 1 << u
        balls.append(mask)
    full = (1 << g.n) - 1
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= balls[v]
            if mask == full:
                return DominationResult(size, combo, k)
    raise AssertionError("unreachable: the full vertex set dominates")


def in_some_min_dominating_set(t: Tree, v: int) -> bool:
    """Whether some minimum dominating set of the tree contains v."""
    if not 0 <= v < t.n:
        raise ValueError(f"vertex {v} out of range")
    return domination_with_required(t, (v,)).value == distance_domination(t, 1).value


def leaf_removal_lowers_domination(t: Tree, v: int) -> bool:
    """True when deleting the leaf v drops the domination number by one."""
    if t.n == 1:
        # removing the only vertex leaves the empty graph, gamma = 0
        return distance_domination(t, 1).value == 1
    if t.graph.degree(v) != 1:
        raise ValueError(f"vertex {v} is not a leaf")
    before = distance_domination(t, 1).value
    after = distance_domination(delete_leaf(t, v), 1).value
    return after == before - 1


def delete_leaf(t: Tree, v: int) -> Tree:
    """Tree with leaf v removed, remaining vertices relabelled densely."""
    remap = {}
    nxt = 0
    for u in range(t.n):
        if u != v:
            remap[u] = nxt
            nxt += 1
    edges = [
        (remap[a], remap[b])
        for a, b in t.graph.edges()
        if a != v and b != v
    ]
    return Tree.from_edges(t.n - 1, edges)
