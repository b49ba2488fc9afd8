import heapq
import itertools

from eterdom import Graph, Tree


def path_tree(n: int) -> Tree:
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(m: int) -> Tree:
    return Tree.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def path_graph(n: int) -> Graph:
    return path_tree(n).graph


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def tree_from_pruefer(seq: tuple[int, ...], n: int) -> Tree:
    """Classic inverse of the labelled-tree bijection; test-side oracle."""
    if n == 1:
        return Tree.from_edges(1, [])
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return Tree.from_edges(n, edges)


def all_labelled_trees(n: int):
    """Every labelled tree on n vertices via exhaustive sequence decoding."""
    if n <= 2:
        yield tree_from_pruefer((), n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_pruefer(seq, n)
