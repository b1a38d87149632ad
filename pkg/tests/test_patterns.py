import pytest
from hypothesis import given, settings

from conftest import brute_induced, graphs
from hsquare import families
from hsquare.graph import (
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    induced,
    join,
)
from hsquare.patterns import (
    C4,
    CLAW,
    K2_K1,
    K3,
    K4,
    K4_MINUS,
    P3,
    P4,
    Z1,
    FamilyId,
    StructureViolation,
    PartitionStructure,
    PreconditionError,
    exception_family_match,
    family_decomposition,
    find_induced,
    find_violation,
    has_path_on_four,
    is_free,
    multipartite_structure,
    pattern_by_name,
    star,
    z1_free_structure_check,
)

ALL_PATTERNS = [P3, P4, C4, K3, K4, K4_MINUS, Z1, K2_K1, star(3), star(4)]


def two_cliques(a, b):
    return disjoint_union(complete_graph(a), complete_graph(b))


@pytest.mark.parametrize(
    "pattern, n, m",
    [(P3, 3, 2), (P4, 4, 3), (C4, 4, 4), (K3, 3, 3), (K4, 4, 6), (K4_MINUS, 4, 5), (Z1, 4, 4), (K2_K1, 3, 1)],
)
def test_pattern_shapes(pattern, n, m):
    assert (pattern.graph.n, pattern.graph.num_edges) == (n, m)


def test_z1_is_claw_plus_one_edge():
    deg = sorted(Z1.graph.degrees())
    assert deg == [1, 2, 2, 3]
    assert find_induced(Z1.graph, K3) is not None


@pytest.mark.parametrize("r", [2, 3, 4, 6])
def test_star_patterns(r):
    s = star(r)
    assert s.graph.n == r + 1 and s.graph.degree(0) == r
    assert s is star(r)


def test_star_rejects_small_r():
    with pytest.raises(ValueError):
        star(1)


@pytest.mark.parametrize(
    "name, pattern", [("claw", CLAW), ("K13", CLAW), ("k1,4", star(4)), ("z1", Z1), ("diamond", K4_MINUS), ("P4", P4)]
)
def test_pattern_by_name(name, pattern):
    assert pattern_by_name(name) is pattern


def test_pattern_by_name_unknown():
    with pytest.raises(KeyError):
        pattern_by_name("petersen")


@pytest.mark.parametrize(
    "g, pattern, found",
    [
        (families.g2(4).graph, Z1, True),
        (families.g2(4).graph, CLAW, False),
        (families.g6(4).graph, P4, False),
        (families.generate_g4().graph, C4, False),
    ],
)
def test_find_induced_examples(g, pattern, found):
    emb = find_induced(g, pattern)
    assert (emb is not None) == found
    if emb is not None:
        sub, _ = induced(g, list(emb))
        assert sub.num_edges == pattern.graph.num_edges


@settings(max_examples=200, deadline=None)
@given(graphs(0, 7))
def test_find_induced_matches_brute_force(g):
    for pat in ALL_PATTERNS:
        emb = find_induced(g, pat)
        assert (emb is not None) == brute_induced(g, pat.graph)
        if emb is not None:
            assert len(set(emb)) == pat.graph.n
            for a in range(pat.graph.n):
                for b in range(a + 1, pat.graph.n):
                    assert g.has_edge(emb[a], emb[b]) == pat.graph.has_edge(a, b)


@settings(max_examples=40, deadline=None)
@given(graphs(8, 10, p=0.5))
def test_find_induced_matches_brute_force_larger(g):
    for pat in (CLAW, Z1, P4, C4, K4_MINUS):
        assert (find_induced(g, pat) is not None) == brute_induced(g, pat.graph)


def test_find_induced_is_lexicographically_least():
    g = cycle_graph(6)
    assert find_induced(g, P3) == (0, 1, 2)


@pytest.mark.parametrize(
    "g, patterns, expected",
    [
        (complete_graph(5), [P3], True),
        (complete_multipartite([2, 3, 3]), [star(4), Z1], True),
        (CLAW.graph, [CLAW], False),
    ],
)
def test_is_free_examples(g, patterns, expected):
    assert is_free(g, patterns) == expected


def test_find_violation_reports_first_pattern():
    pat, emb = find_violation(CLAW.graph, [K3, CLAW, P3])
    assert pat is CLAW and emb == (0, 1, 2, 3)


def test_has_path_on_four():
    g = cycle_graph(4)
    assert has_path_on_four(g, g.vertex_mask)
    s = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert not has_path_on_four(s, s.vertex_mask)
    two_k2 = two_cliques(2, 2)
    assert not has_path_on_four(two_k2, two_k2.vertex_mask)


# -- multipartite --------------------------------------------------------------


@pytest.mark.parametrize(
    "g, parts",
    [
        (complete_multipartite([2, 3, 3]), (3, 3, 2)),
        (cycle_graph(5), None),
        (families.kn_minus_matching(6, 3).graph, (2, 2, 2)),
        (complete_graph(4), (1, 1, 1, 1)),
    ],
)
def test_multipartite_structure_examples(g, parts):
    ps = multipartite_structure(g)
    assert (None if ps is None else ps.parts) == parts


@given(graphs(1, 9))
def test_multipartite_rebuild_reproduces_graph(g):
    ps = multipartite_structure(g)
    if ps is not None:
        assert ps.graph() == g
        assert ps.n == g.n
        assert list(ps.parts) == sorted(ps.parts, reverse=True)
        assignment = ps.assignment()
        for u, v in g.edges():
            assert assignment[u] != assignment[v]


def test_partition_structure_from_sizes():
    ps = PartitionStructure.from_sizes([3, 2])
    assert ps.members == (0b00111, 0b11000)
    assert ps.graph() == complete_multipartite([3, 2])
    with pytest.raises(ValueError):
        PartitionStructure.from_sizes([2, 0])


@pytest.mark.parametrize(
    "g, parts",
    [
        (K4_MINUS.graph, (2, 1, 1)),
        (complete_multipartite([2, 2, 2]), (2, 2, 2)),
    ],
)
def test_z1_structure_examples(g, parts):
    assert z1_free_structure_check(g).parts == parts


@pytest.mark.parametrize(
    "g", [complete_multipartite([3, 3]), disjoint_union(complete_graph(3), complete_graph(3)), Z1.graph, complete_graph(3)]
)
def test_z1_structure_precondition(g):
    with pytest.raises(PreconditionError):
        z1_free_structure_check(g)


def test_structure_violation_is_distinct_from_precondition():
    assert not issubclass(StructureViolation, PreconditionError)
    assert issubclass(StructureViolation, AssertionError)


# -- exception families --------------------------------------------------------


def test_family_match_examples():
    g1 = join(two_cliques(1, 3), two_cliques(2, 2))
    assert exception_family_match(g1) == FamilyId("I", (2, 2))
    g2 = join(two_cliques(2, 2), two_cliques(1, 3))
    assert exception_family_match(g2) == FamilyId("II", (3,))
    assert exception_family_match(complete_graph(5)) is None


def test_family_match_tie_break_follows_first_operand():
    # the same isomorphism type read from either side
    a = join(two_cliques(1, 3), two_cliques(2, 2))
    b = join(two_cliques(2, 2), two_cliques(1, 3))
    assert exception_family_match(a).tag == "I"
    assert exception_family_match(b).tag == "II"


@pytest.mark.parametrize(
    "fam",
    [FamilyId("I", (1, 3)), FamilyId("I", (3, 1)), FamilyId("I", (2, 5)), FamilyId("II", (4,)), FamilyId("III", (3,)), FamilyId("IV", (5,))],
)
def test_family_match_round_trip(fam):
    g = families.exception_graph(fam).graph
    assert g.n == fam.n
    assert exception_family_match(g) == fam
    dec = family_decomposition(g)
    sizes = tuple(c.bit_count() for c in dec.first), tuple(c.bit_count() for c in dec.second)
    assert sorted(sizes[0]) == sorted(fam.operand_sizes()[0])


@pytest.mark.parametrize(
    "g",
    [
        join(two_cliques(2, 2), two_cliques(2, 2)),
        join(two_cliques(1, 3), complete_graph(4)),
        join(two_cliques(2, 3), two_cliques(1, 2)),
        join(join(two_cliques(1, 3), two_cliques(2, 2)), complete_graph(1)),
    ],
)
def test_family_match_rejects_non_members(g):
    assert exception_family_match(g) is None


@pytest.mark.parametrize(
    "tag, params",
    [("I", (0, 4)), ("I", (1, 2)), ("II", (2,)), ("V", (3,)), ("I", (3,)), ("III", (3, 3))],
)
def test_family_id_bounds(tag, params):
    with pytest.raises(ValueError):
        FamilyId(tag, params)
