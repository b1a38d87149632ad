from itertools import combinations

import numpy as np
import pytest

from conftest import brute_h2, brute_induced
from hsquare.graph import is_connected, to_graph6
from hsquare.patterns import C4, CLAW, K3, P4, Z1
from hsquare.sweep import LabeledSpace, SweepTooLarge, code_of, graph_from_code, vertex_pairs

# labelled connected graphs on n vertices (a standard integer sequence)
CONNECTED_LABELED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}


def test_pairs_follow_graph6_order():
    assert vertex_pairs(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_code_round_trip():
    for code in range(64):
        assert code_of(graph_from_code(4, code)) == code


def test_graph6_agrees_with_codes():
    # graph6 packs the same pair order most significant bit first
    g = graph_from_code(4, 0b000111)
    assert to_graph6(g) == "Cw"


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts(n):
    space = LabeledSpace(n)
    assert int(space.connected().sum()) == CONNECTED_LABELED[n]


def test_space_size_and_cap():
    assert len(LabeledSpace(3)) == 8
    with pytest.raises(SweepTooLarge):
        LabeledSpace(8)
    with pytest.raises(SweepTooLarge):
        LabeledSpace(9, long_run=True)


@pytest.mark.parametrize("n", [4, 5])
def test_masks_match_library_on_every_graph(n):
    space = LabeledSpace(n)
    conn = space.connected()
    d2 = space.min_degree_at_least(2)
    hits = {p.name: space.contains(p) for p in (CLAW, Z1, P4, C4, K3)}
    tri3 = space.triangle_vertex_of_degree(3)
    naive = space.naive_h2()
    for i, g in enumerate(space.graphs()):
        assert conn[i] == is_connected(g)
        assert d2[i] == (g.min_degree() >= 2)
        for p in (CLAW, Z1, P4, C4, K3):
            assert hits[p.name][i] == brute_induced(g, p.graph)
        on_tri = any(g.adj[a] >> b & 1 and g.adj[b] >> c & 1 and g.adj[a] >> c & 1 and g.degree(v) >= 3
                     for a, b, c in combinations(range(n), 3) for v in (a, b, c))
        assert tri3[i] == on_tri
        assert naive[i] == brute_h2(g)


def test_restrict_keeps_codes():
    space = LabeledSpace(5)
    sub = space.restrict(space.min_degree_at_least(4))
    assert len(sub) == 1
    assert np.array_equal(sub.codes, np.array([(1 << 10) - 1], dtype=np.uint32))
