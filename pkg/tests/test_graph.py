from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_kappa, edge_set, graphs
from hsquare import families
from hsquare.graph import (
    Graph,
    GraphFormatError,
    bfs_distances,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    girth,
    induced,
    is_connected,
    join,
    minimum_vertex_cut,
    parse_edge_list_text,
    parse_graph6,
    path_graph,
    power,
    relabel,
    separates,
    star_graph,
    to_edge_list_text,
    to_graph6,
    vertex_connectivity,
)


def iso_by_degrees(g: Graph, h: Graph) -> bool:
    return g.n == h.n and sorted(g.degrees()) == sorted(h.degrees()) and g.num_edges == h.num_edges


# -- construction -------------------------------------------------------------


def test_from_edge_list_rejects_bad_input():
    with pytest.raises(GraphFormatError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(GraphFormatError):
        from_edge_list(3, [(1, 1)])


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.num_edges == 1


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_join_k4_coclique3_is_g0():
    g = join(complete_graph(4), empty_graph(3))
    assert g == families.g0().graph
    assert g.n == 7 and g.num_edges == 18


def test_join_two_coedges_is_c4():
    g = join(empty_graph(2), empty_graph(2))
    assert g.n == 4 and g.num_edges == 4 and set(g.degrees()) == {2}
    assert girth(g) == 4


def test_disjoint_union_examples():
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    assert edge_set(two_k2) == {frozenset((0, 1)), frozenset((2, 3))}
    top = disjoint_union(complete_graph(1), complete_graph(3))
    assert top.degrees() == [0, 2, 2, 2]
    g = cycle_graph(5)
    assert disjoint_union(empty_graph(0), g) == g
    assert join(empty_graph(0), g) == g


def test_complement_examples():
    assert complement(complete_graph(4)) == empty_graph(4)
    assert complement(empty_graph(3)) == complete_graph(3)
    c5 = complement(cycle_graph(5))
    assert set(c5.degrees()) == {2} and is_connected(c5)


def test_power_examples():
    p = power(path_graph(4), 2)
    assert p.num_edges == 5 and not p.has_edge(0, 3)
    c6 = power(cycle_graph(6), 2)
    assert set(c6.degrees()) == {4}
    assert power(cycle_graph(5), 2) == complete_graph(5)
    with pytest.raises(ValueError):
        power(cycle_graph(5), 0)


@given(graphs(0, 7), graphs(0, 7))
def test_join_and_union_counts(g, h):
    j = join(g, h)
    u = disjoint_union(g, h)
    assert j.n == u.n == g.n + h.n
    assert j.num_edges == g.num_edges + h.num_edges + g.n * h.n
    assert u.num_edges == g.num_edges + h.num_edges


@given(graphs(0, 9))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == g.n * (g.n - 1) // 2


@given(graphs(1, 8))
def test_power_matches_distances(g):
    for k in (1, 2, 3):
        pk = power(g, k)
        for u in range(g.n):
            dist = bfs_distances(g, u)
            for v in range(g.n):
                if u != v:
                    assert pk.has_edge(u, v) == (dist[v] <= k)


@given(graphs(1, 8))
def test_power_monotone_and_stabilises(g):
    prev = g
    for k in range(2, g.n + 1):
        cur = power(g, k)
        assert edge_set(prev) <= edge_set(cur)
        prev = cur
    assert power(g, g.n) == power(g, g.n + 3)


def test_induced_examples():
    sub, labels = induced(complete_graph(5), [1, 3, 4])
    assert sub == complete_graph(3) and labels == [1, 3, 4]
    g0 = families.g0().graph
    diamond, _ = induced(g0, [0, 1, 4, 5])
    assert diamond.num_edges == 5
    g = cycle_graph(6)
    assert induced(g, range(6))[0] == g


@given(graphs(1, 8), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
    assert h.num_edges == g.num_edges


# -- connectivity ---------------------------------------------------------------


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_graph(5), 4),
        (complete_multipartite([4, 4]), 4),
        (families.g2(4).graph, 4),
        (power(cycle_graph(8), 2), 4),
        (cycle_graph(7), 2),
        (path_graph(5), 1),
        (disjoint_union(complete_graph(3), complete_graph(3)), 0),
        (complete_graph(1), 0),
        (complete_graph(2), 1),
    ],
)
def test_vertex_connectivity_examples(g, expected):
    assert vertex_connectivity(g) == expected


def test_g2_4_has_no_cut_below_four():
    g = families.g2(4).graph
    for k in range(4):
        for cut in combinations(range(8), k):
            alive = g.vertex_mask & ~sum(1 << c for c in cut)
            assert is_connected(g, alive)


@settings(max_examples=150, deadline=None)
@given(graphs(1, 8))
def test_vertex_connectivity_matches_brute_force(g):
    k = vertex_connectivity(g)
    assert k == brute_kappa(g)
    assert k <= g.min_degree()
    assert (k == g.n - 1) == g.is_complete()


@settings(max_examples=40, deadline=None)
@given(graphs(9, 10, p=0.6))
def test_vertex_connectivity_matches_brute_force_larger(g):
    assert vertex_connectivity(g) == brute_kappa(g)


@given(graphs(2, 8))
def test_minimum_cut_is_least_separator(g):
    if g.is_complete():
        return
    cut = minimum_vertex_cut(g)
    k = vertex_connectivity(g)
    assert cut.bit_count() == k
    assert separates(g, cut)
    # lexicographically least among all separators of that size
    for combo in combinations(range(g.n), k):
        m = sum(1 << c for c in combo)
        if separates(g, m):
            assert m == cut
            break


# -- girth ------------------------------------------------------------------------


def test_girth_examples():
    assert girth(cycle_graph(5)) == 5
    assert girth(star_graph(4)) == float("inf")
    assert girth(path_graph(6)) == float("inf")
    assert girth(complete_graph(4)) == 3
    assert girth(families.g5t2().graph) == 5


@given(graphs(0, 8))
def test_girth_witness_is_a_cycle(g):
    value, cyc = girth(g, witness=True)
    if value == float("inf"):
        assert cyc is None
        return
    assert len(cyc) == value == len(set(cyc))
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


# -- formats -------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, n, m",
    [("A_", 2, 1), ("Bw", 3, 3), ("C~", 4, 6), ("?", 0, 0), ("@", 1, 0), ("DQc", 5, 4)],
)
def test_graph6_known_strings(text, n, m):
    g = parse_graph6(text)
    assert (g.n, g.num_edges) == (n, m)
    assert to_graph6(g) == text


def test_graph6_c5():
    assert to_graph6(cycle_graph(5)) == "Dhc"
    assert parse_graph6("Dhc") == cycle_graph(5)


@pytest.mark.parametrize("bad", ["", "A", "A`", "B!", "~?", "Dh"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


@settings(deadline=None)
@given(graphs(0, 70, p=0.3))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


@given(graphs(0, 9))
def test_edge_list_round_trip(g):
    text = to_edge_list_text(g)
    assert text.splitlines()[0] == f"{g.n} {g.num_edges}"
    assert parse_edge_list_text(text) == g


@pytest.mark.parametrize("bad", ["", "3", "3 2\n0 1", "3 1\n0 x", "3 1\n0 1 2", "2 1\n0 2"])
def test_edge_list_rejects_malformed(bad):
    with pytest.raises(GraphFormatError):
        parse_edge_list_text(bad)
