import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eterdom import (
    Graph,
    GraphFormatError,
    NotATreeError,
    Tree,
    UNREACHABLE,
    bfs_distances,
    diameter,
    emit_edge_list,
    emit_graph6,
    enumerate_trees,
    leaf_closure,
    leaf_ranks,
    parse_edge_list,
    parse_graph6,
    power_graph,
    tree_diameter,
)
from conftest import path_graph, path_tree, star_tree


# --- construction and validation ---

def test_graph_rejects_self_loop():
    with pytest.raises(GraphFormatError):
        Graph.from_edges(2, [(0, 0)])


def test_graph_rejects_duplicate_edge():
    with pytest.raises(GraphFormatError):
        Graph.from_edges(2, [(0, 1), (1, 0)])


def test_graph_adjacency_is_symmetric_and_sorted():
    g = Graph.from_edges(4, [(2, 0), (3, 1), (1, 0)])
    for u in range(4):
        assert list(g.adj[u]) == sorted(g.adj[u])
        for v in g.adj[u]:
            assert u in g.adj[v]
    assert g.edge_count == 3


def test_tree_rejects_cycle_and_disconnected():
    with pytest.raises(NotATreeError):
        Tree.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(NotATreeError):
        Tree.from_edges(4, [(0, 1), (2, 3)])


def test_rooted_arrays():
    t = path_tree(5).rooted(2)
    assert t.parent[2] == -1
    assert t.depth[2] == 0
    for v in range(5):
        if v != 2:
            assert t.depth[v] == t.depth[t.parent[v]] + 1
    covered = sorted(c for kids in t.children for c in kids)
    assert covered == [0, 1, 3, 4]


# --- edge list ---

def test_parse_edge_list_minimal():
    g = parse_edge_list("0 1\n1 2")
    assert g.n == 3 and g.edge_count == 2


def test_parse_edge_list_declared_isolated():
    g = parse_edge_list("n 1")
    assert g.n == 1 and g.edge_count == 0


def test_parse_edge_list_duplicate_reports_line():
    with pytest.raises(GraphFormatError) as err:
        parse_edge_list("0 1\n0 1")
    assert err.value.line == 2


def test_parse_edge_list_self_loop_and_malformed():
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 3")
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 1 2")


def test_edge_list_round_trip():
    g = star_tree(4).graph
    assert parse_edge_list(emit_edge_list(g)).adj == g.adj


# --- graph6 ---

def test_graph6_decode_k2():
    g = parse_graph6("A_")
    assert g.n == 2 and g.adj == ((1,), (0,))


def test_graph6_decode_empty_triangle():
    g = parse_graph6("B?")
    assert g.n == 3 and g.edge_count == 0


def test_graph6_truncated():
    with pytest.raises(GraphFormatError):
        parse_graph6("")
    with pytest.raises(GraphFormatError):
        parse_graph6("D")  # n=5 needs bit bytes


def test_graph6_round_trip_all_small_trees():
    for n in range(1, 9):
        for t in enumerate_trees(n):
            s = emit_graph6(t.graph)
            assert parse_graph6(s).adj == t.graph.adj


def test_graph6_against_networkx():
    nx = pytest.importorskip("networkx")
    for n in range(2, 9):
        for t in enumerate_trees(n):
            mine = emit_graph6(t.graph)
            theirs = nx.from_graph6_bytes(mine.encode())
            assert sorted(theirs.edges()) == list(t.graph.edges())
            back = nx.to_graph6_bytes(theirs, header=False).decode().strip()
            assert parse_graph6(back).adj == t.graph.adj


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.data())
def test_graph6_round_trip_random_graphs(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    g = Graph.from_edges(n, sorted(chosen))
    assert parse_graph6(emit_graph6(g)).adj == g.adj


# --- distances, diameter, powers ---

def test_bfs_distances_path_endpoint():
    assert bfs_distances(path_graph(3), 0) == [0, 1, 2]


def test_bfs_distances_single_vertex():
    assert bfs_distances(Graph.from_edges(1, []), 0) == [0]


def test_bfs_distances_unreachable():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert bfs_distances(g, 0)[2] == UNREACHABLE


def test_bfs_source_out_of_range():
    with pytest.raises(ValueError):
        bfs_distances(path_graph(2), 5)


def test_diameter_values():
    assert diameter(path_graph(7)) == 6
    assert diameter(Graph.from_edges(1, [])) == 0
    assert diameter(Graph.from_edges(4, [(0, 1), (2, 3)])) == math.inf


def test_diameter_double_bfs_matches_all_pairs():
    for n in range(1, 11):
        for t in enumerate_trees(n):
            assert tree_diameter(t) == diameter(t.graph)


def test_power_graph_p4():
    g = power_graph(path_graph(4), 2)
    assert (0, 3) not in set(g.edges())
    assert g.edge_count == 5


def test_power_graph_identity_and_complete():
    g = path_graph(5)
    assert power_graph(g, 1).adj == g.adj
    assert power_graph(g, 4).edge_count == 10


def test_power_graph_composition_and_monotone():
    for n in range(2, 8):
        for t in enumerate_trees(n):
            g = t.graph
            for k in (1, 2, 3):
                pk = power_graph(g, k)
                assert power_graph(power_graph(g, 1), k).adj == pk.adj
                if k > 1:
                    smaller = set(power_graph(g, k - 1).edges())
                    assert smaller <= set(pk.edges())


# --- leaf ranks and closures ---

def test_leaf_ranks_path7():
    assert leaf_ranks(path_tree(7)) == [0, 1, 2, 3, 2, 1, 0]


def test_leaf_ranks_star():
    ranks = leaf_ranks(star_tree(3))
    assert ranks[0] == 1
    assert ranks[1:] == [0, 0, 0]


def test_leaf_ranks_single_vertex():
    assert leaf_ranks(Tree.from_edges(1, [])) == [0]


def test_rank_k_vertex_exists_when_diameter_large():
    for n in range(1, 11):
        for t in enumerate_trees(n):
            d = tree_diameter(t)
            ranks = leaf_ranks(t)
            for k in (1, 2, 3):
                if d >= 2 * k:
                    assert k in ranks


def test_leaf_closure_path7():
    lc = leaf_closure(path_tree(7), 2)
    assert lc.open_set == {0, 1}
    assert lc.closed_set == {0, 1, 2}


def test_leaf_closure_star_center():
    lc = leaf_closure(star_tree(3), 0)
    assert lc.open_set == {1, 2, 3}


def test_leaf_closure_rank2_single_chain():
    # vertex 2 of P6 hangs over the single chain 1-0
    lc = leaf_closure(path_tree(6), 2)
    assert lc.rank == 2
    assert lc.open_set == {0, 1}


def test_leaf_closure_rank2_two_chains():
    # the centre of P5 collects both chains
    lc = leaf_closure(path_tree(5), 2)
    assert lc.rank == 2
    assert lc.open_set == {0, 1, 3, 4}


def test_leaf_closure_requires_rank():
    # center of the two-spider has no rank below 3
    t = Tree.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
    ranks = leaf_ranks(t)
    for v in range(7):
        if ranks[v] is None:
            with pytest.raises(ValueError):
                leaf_closure(t, v)


def test_leaf_closure_induces_subtree():
    for n in range(2, 11):
        for t in enumerate_trees(n):
            ranks = leaf_ranks(t)
            for v in range(n):
                if ranks[v] is None:
                    continue
                closed = leaf_closure(t, v).closed_set
                assert v in closed
                seen = {v}
                frontier = [v]
                for u in frontier:
                    for w in t.graph.adj[u]:
                        if w in closed and w not in seen:
                            seen.add(w)
                            frontier.append(w)
                assert seen == closed
