"""Tree families: exhaustive enumeration, generators, structural recognizers.

The enumerator walks rooted level sequences in canonical order and keeps one
representative per free-tree isomorphism class (centre-rooted AHU string).
The recognizers peel pendant units off a tree and certify membership with a
replayable construction trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .domination import in_some_min_dominating_set, leaf_removal_lowers_domination, distance_domination
from .errors import GuardRailError
from .graphs import Graph, Tree, _closures_up_to, _leaf_ranks


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


def canonical_form(t: Tree) -> str:
    """Isomorphism-invariant string: centre tag, order, nested AHU encoding."""
    g = t.graph
    if g.n == 1:
        return "C1:()"
    centers = _centers(g)
    if len(centers) == 1:
        return f"C{g.n}:{_ahu(g, centers[0], -1)}"
    c1, c2 = centers
    halves = sorted([_ahu(g, c1, c2), _ahu(g, c2, c1)])
    return f"B{g.n}:({halves[0]}{halves[1]})"


def _centers(g: Graph) -> list[int]:
    n = g.n
    if n <= 2:
        return list(range(n))
    deg = [g.degree(v) for v in range(n)]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in g.adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _ahu(g: Graph, root: int, banned: int) -> str:
    enc: dict[int, str] = {}
    stack: list[tuple[int, int, bool]] = [(root, banned, False)]
    while stack:
        v, parent, done = stack.pop()
        if done:
            kids = sorted(enc[w] for w in g.adj[v] if w != parent)
            enc[v] = "(" + "".join(kids) + ")"
        else:
            stack.append((v, parent, True))
            for w in g.adj[v]:
                if w != parent:
                    stack.append((w, v, False))
    return enc[root]


def tree_from_canonical(form: str) -> Tree:
    """Rebuild a tree (fresh dense labels) from a canonical_form string."""
    tag, enc = form[0], form[form.index(":") + 1:]
    n = int(form[1:form.index(":")])
    edges: list[tuple[int, int]] = []
    counter = [0]

    def build(s: str, lo: int, hi: int) -> int:
        # s[lo:hi] == "(...)" for one subtree; returns its root label
        me = counter[0]
        counter[0] += 1
        i = lo + 1
        while i < hi - 1:
            depth = 0
            j = i
            while True:
                if s[j] == "(":
                    depth += 1
                elif s[j] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            child = build(s, i, j + 1)
            edges.append((me, child))
            i = j + 1
        return me

    if tag == "C":
        build(enc, 0, len(enc))
    elif tag == "B":
        inner = enc[1:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    split = i + 1
                    break
        r1 = build(inner, 0, split)
        r2 = build(inner, split, len(inner))
        edges.append((r1, r2))
    else:
        raise ValueError(f"bad canonical form {form!r}")
    if counter[0] != n:
        raise ValueError(f"canonical form size mismatch: parsed {counter[0]}, header {n}")
    return Tree.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Exhaustive enumeration of free trees
# ---------------------------------------------------------------------------


def enumerate_trees(n: int, *, max_n: int = 12) -> Iterator[Tree]:
    """One representative per isomorphism class of free trees on n vertices."""
    if not 1 <= n <= max_n:
        raise GuardRailError(f"enumeration limited to 1 <= n <= {max_n}, got {n}")
    seen: set[str] = set()
    for levels in _rooted_level_sequences(n):
        t = _tree_from_levels(levels)
        key = canonical_form(t)
        if key not in seen:
            seen.add(key)
            yield t


def _rooted_level_sequences(n: int) -> Iterator[list[int]]:
    # Canonical level sequences of rooted trees, lexicographically decreasing,
    # from the path down to the star.
    levels = list(range(1, n + 1))
    while True:
        yield levels[:]
        if all(x == 2 for x in levels[1:]):
            return
        p = max(i for i in range(n) if levels[i] > 2)
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        span = p - q
        for i in range(p, n):
            levels[i] = levels[i - span]


def _tree_from_levels(levels: list[int]) -> Tree:
    n = len(levels)
    edges = []
    latest: dict[int, int] = {1: 0}
    for i in range(1, n):
        lev = levels[i]
        edges.append((latest[lev - 1], i))
        latest[lev] = i
    return Tree.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def gen_spider(n: int) -> Tree:
    """Star on n middles with two extra leaves per middle (3n + 1 vertices)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = []
    for i in range(1, n + 1):
        edges.append((0, i))
        base = n + 2 * (i - 1)
        edges.append((i, base + 1))
        edges.append((i, base + 2))
    return Tree.from_edges(3 * n + 1, edges)


def gen_pendant_paths(base: Tree, k: int) -> Tree:
    """Attach a pendant path of k new vertices to every vertex of the base."""
    if k < 1:
        raise ValueError("k must be >= 1")
    b = base.n
    edges = list(base.graph.edges())
    for v in range(b):
        prev = v
        for j in range(k):
            nxt = b + v * k + j
            edges.append((prev, nxt))
            prev = nxt
    return Tree.from_edges(b * (k + 1), edges)


def regular_ball_size(k: int, delta: int) -> int:
    """Vertices in one unit: a radius-floor(k/2) ball of the delta-regular tree."""
    size = 1
    width = delta
    for _ in range(k // 2):
        size += width
        width *= delta - 1
    return size


def gen_regular_balls(
    k: int, delta: int, joins: tuple[tuple[int, int, int, int], ...] = ()
) -> Tree:
    """Disjoint radius-floor(k/2) balls of the delta-regular tree, joined by edges.

    Each join (unit_a, vertex_a, unit_b, vertex_b) adds one edge; join
    endpoints must keep degree below delta and the joins must connect the
    units into a tree. Unit vertices are labelled in breadth-first order
    inside consecutive blocks.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be odd and >= 1")
    if delta < 2:
        raise ValueError("delta must be >= 2")
    size = regular_ball_size(k, delta)
    units = 1 + max((max(j[0], j[2]) for j in joins), default=0)

    unit_edges: list[tuple[int, int]] = []
    frontier = [0]
    nxt = 1
    for depth in range(k // 2):
        new_frontier = []
        for v in frontier:
            fan = delta if depth == 0 and v == 0 else delta - 1
            for _ in range(fan):
                unit_edges.append((v, nxt))
                new_frontier.append(nxt)
                nxt += 1
        frontier = new_frontier
    assert nxt == size

    edges: list[tuple[int, int]] = []
    deg = [0] * (units * size)
    for u in range(units):
        off = u * size
        for a, b in unit_edges:
            edges.append((off + a, off + b))
            deg[off + a] += 1
            deg[off + b] += 1

    joined_pairs = []
    for ua, va, ub, vb in joins:
        for unit, vert in ((ua, va), (ub, vb)):
            if not 0 <= unit < units:
                raise ValueError(f"unit index {unit} out of range")
            if not 0 <= vert < size:
                raise ValueError(f"unit vertex {vert} out of range")
        x, y = ua * size + va, ub * size + vb
        if deg[x] >= delta or deg[y] >= delta:
            raise ValueError(f"join ({ua},{va})-({ub},{vb}) exceeds degree {delta}")
        edges.append((x, y))
        deg[x] += 1
        deg[y] += 1
        joined_pairs.append((ua, ub))
    if len(joins) != units - 1:
        raise ValueError(f"{units} units need {units - 1} joins, got {len(joins)}")
    if units > 1:
        comp = list(range(units))

        def find(a: int) -> int:
            while comp[a] != a:
                comp[a] = comp[comp[a]]
                a = comp[a]
            return a

        for a, b in joined_pairs:
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ValueError("joins contain a cycle over the units")
            comp[ra] = rb
    return Tree.from_edges(units * size, edges)


# ---------------------------------------------------------------------------
# Recognizers with construction traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    op: str
    attach: int
    unit_edges: tuple[tuple[int, int], ...]
    params: tuple[int, ...] = ()


@dataclass(frozen=True)
class FamilyTrace:
    family: str
    base_vertices: tuple[int, ...]
    base_edges: tuple[tuple[int, int], ...]
    steps: tuple[TraceStep, ...]


def replay_trace(trace: FamilyTrace) -> Tree:
    """Rebuild the recognized tree from its base plus appended units."""
    edges = list(trace.base_edges)
    vertices = set(trace.base_vertices)
    for step in trace.steps:
        edges.extend(step.unit_edges)
        for a, b in step.unit_edges:
            vertices.update((a, b))
    remap = {v: i for i, v in enumerate(sorted(vertices))}
    return Tree.from_edges(len(vertices), [(remap[a], remap[b]) for a, b in edges])


def _adj_of(t: Tree) -> dict[int, set[int]]:
    return {v: set(t.graph.adj[v]) for v in range(t.n)}


def _adj_canon(adj: dict[int, set[int]]) -> str:
    labels = sorted(adj)
    remap = {v: i for i, v in enumerate(labels)}
    edges = [(remap[a], remap[b]) for a in labels for b in adj[a] if a < b]
    return canonical_form(Tree.from_edges(len(labels), edges))


def _tree_of(adj: dict[int, set[int]]) -> tuple[Tree, dict[int, int]]:
    labels = sorted(adj)
    remap = {v: i for i, v in enumerate(labels)}
    edges = [(remap[a], remap[b]) for a in labels for b in adj[a] if a < b]
    return Tree.from_edges(len(labels), edges), remap


def _adj_diameter_dict(adj: dict[int, set[int]]) -> int:
    start = next(iter(adj))
    dist = {start: 0}
    queue = [start]
    far = start
    for u in queue:
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
                far = w
    dist = {far: 0}
    queue = [far]
    best = 0
    for u in queue:
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                best = max(best, dist[w])
                queue.append(w)
    return best


def _remove(adj: dict[int, set[int]], gone: set[int]) -> dict[int, set[int]]:
    out = {v: set(nbrs) - gone for v, nbrs in adj.items() if v not in gone}
    return out


def recognize_domination_tight(t: Tree) -> tuple[bool, Optional[FamilyTrace]]:
    """Structural test for: eternal distance-2 number equals domination number.

    Peels one pendant unit at a time. A rank-2 vertex with a single
    lower-rank neighbour sheds its closed closure unconditionally. Otherwise
    the open closure goes and the vertex stays as a leaf, subject to a side
    condition on the residual: a one-stem-plus-leaves unit needs the peeled
    vertex inside some minimum dominating set, a two-stem unit needs the
    domination number to drop when the vertex is deleted. First try the
    lowest-index candidates; back off to the other candidates before
    rejecting.
    """
    adj = _adj_of(t)
    known_false: set[str] = set()

    def search(adj: dict[int, set[int]]):
        if _adj_diameter_dict(adj) <= 3:
            return [], sorted(adj)
        key = _adj_canon(adj)
        if key in known_false:
            return None
        ranks = _leaf_ranks(adj, adj.keys())
        twos = sorted(v for v, r in ranks.items() if r == 2)
        closures = _closures_up_to(adj, ranks, 1)
        singles, multis = [], []
        for v in twos:
            lower = [u for u in adj[v] if ranks[u] is not None and ranks[u] < 2]
            if len(lower) == 1:
                singles.append((v, lower))
            else:
                multis.append((v, lower))
        for v, lower in singles:
            u = lower[0]
            removed = closures[u] | {v}
            parent = next(iter(adj[v] - removed))
            rest = _remove(adj, removed)
            sub = search(rest)
            if sub is not None:
                steps, base = sub
                unit = tuple(sorted((min(a, b), max(a, b))
                             for a, b in _unit_edges(adj, removed, extra=(parent, v))))
                steps = steps + [TraceStep("star-at-vertex", parent, unit, (len(closures[u]),))]
                return steps, base
        for v, lower in multis:
            stems = [u for u in lower if ranks[u] == 1]
            plain = [u for u in lower if ranks[u] == 0]
            if len(stems) == 1 and plain:
                condition = "one-stem"
            elif len(stems) == 2 and not plain:
                condition = "two-stems"
            else:
                continue  # no construction step matches this unit shape
            removed = set()
            for u in lower:
                removed |= closures[u]
            rest = _remove(adj, removed)
            sub_tree, remap = _tree_of(rest)
            if condition == "one-stem":
                ok = in_some_min_dominating_set(sub_tree, remap[v])
                op, params = "star-and-leaves-at-leaf", (len(closures[stems[0]]) - 1, len(plain))
            else:
                ok = leaf_removal_lowers_domination(sub_tree, remap[v])
                op, params = "two-stars-at-leaf", tuple(len(closures[u]) - 1 for u in stems)
            if not ok:
                continue
            sub = search(rest)
            if sub is not None:
                steps, base = sub
                unit = tuple(sorted((min(a, b), max(a, b))
                             for a, b in _unit_edges(adj, removed, extra=None)))
                steps = steps + [TraceStep(op, v, unit, params)]
                return steps, base
        known_false.add(key)
        return None

    found = search(adj)
    if found is None:
        return False, None
    steps, base_labels = found
    base_set = set(base_labels)
    base_edges = tuple(
        (a, b) for a in base_labels for b in sorted(adj[a] & base_set) if a < b
    )
    return True, FamilyTrace("domination-tight", tuple(base_labels), base_edges, tuple(steps))


def _unit_edges(adj, removed: set[int], extra):
    edges = []
    for a in removed:
        for b in adj[a]:
            if b in removed and a < b:
                edges.append((a, b))
            elif b not in removed and extra is None:
                edges.append((a, b))
    if extra is not None:
        edges.append(extra)
    return edges


def recognize_distance2_tight(t: Tree) -> bool:
    """Whether the domination number equals the distance-2 domination number."""
    return distance_domination(t, 1).value == distance_domination(t, 2).value


def recognize_critical(t: Tree) -> tuple[bool, Optional[FamilyTrace]]:
    """Whether the tree is an iterated leaf 1-sum of 4-vertex paths.

    Every growth step glues a 4-vertex path onto a leaf, either by an end
    (pendant 3-chain) or by an inner vertex (pendant leaf plus pendant
    2-chain). Recognition peels such units while insisting the attachment
    point becomes a leaf again, backtracking over candidate units.
    """
    if t.n == 1:
        return True, FamilyTrace("critical", (0,), (), ())
    if t.n % 3 != 1:
        return False, None
    adj = _adj_of(t)
    known_false: set[str] = set()

    def search(adj: dict[int, set[int]]):
        if len(adj) == 1:
            return [], sorted(adj)
        key = _adj_canon(adj)
        if key in known_false:
            return None
        for x in sorted(adj):
            deg_x = len(adj[x])
            # pendant 3-chain hanging from x (end-glued unit)
            if deg_x <= 2:
                for c1 in sorted(adj[x]):
                    if len(adj[c1]) != 2:
                        continue
                    (c2,) = adj[c1] - {x}
                    if len(adj[c2]) != 2:
                        continue
                    (c3,) = adj[c2] - {c1}
                    if len(adj[c3]) != 1:
                        continue
                    rest = _remove(adj, {c1, c2, c3})
                    sub = search(rest)
                    if sub is not None:
                        steps, base = sub
                        unit = ((x, c1), (c1, c2), (c2, c3))
                        return steps + [TraceStep("path3-at-leaf", x, unit)], base
            # pendant leaf + pendant 2-chain at x (inner-glued unit)
            if deg_x <= 3:
                leaves = sorted(u for u in adj[x] if len(adj[u]) == 1)
                chains = []
                for q in sorted(adj[x]):
                    if len(adj[q]) == 2:
                        (r,) = adj[q] - {x}
                        if len(adj[r]) == 1:
                            chains.append((q, r))
                if leaves and chains:
                    p = leaves[0]
                    q, r = chains[0]
                    rest = _remove(adj, {p, q, r})
                    sub = search(rest)
                    if sub is not None:
                        steps, base = sub
                        unit = ((x, p), (x, q), (q, r))
                        return steps + [TraceStep("leaf-and-path2-at-leaf", x, unit)], base
        known_false.add(key)
        return None

    found = search(adj)
    if found is None:
        return False, None
    steps, base_labels = found
    return True, FamilyTrace("critical", tuple(base_labels), (), tuple(steps))
