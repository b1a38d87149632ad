from itertools import combinations

import pytest

from hsquare import families
from hsquare.families import FamilySpecError, SelfCheckError, generate, generate_g4
from hsquare.graph import (
    complete_graph,
    complete_multipartite,
    cycle_graph,
    from_edge_list,
    girth,
    induced,
    is_k_connected,
    power,
    vertex_connectivity,
)
from hsquare.patterns import C4, CLAW, K3, K4, K4_MINUS, P4, FamilyId, find_induced, is_free


@pytest.mark.parametrize(
    "spec, n, m",
    [
        ("G1:m=4", 8, 16),
        ("G2:m=4", 8, 16),
        ("G3:m=4", 7, 18),
        ("G0", 7, 18),
        ("G6:m=4", 9, 2 + 6 + 4 * 5),
        ("G5t2", 17, 4 + 12 + 12),
        ("POSA:t=3", 8, 3 * 3 + 3 * 2 + 3 * 2),
        ("KnMINUSkM:n=6,k=3", 6, 12),
        ("MULTI:3,3,3", 9, 27),
        ("PATH_SQ:n=5", 5, 7),
        ("CYCLE_SQ:n=8", 8, 16),
        ("EXC:i,m=2,q=2", 8, 3 + 1 + 1 + 16),
        ("EXC:ii,3", 8, 1 + 1 + 3 + 16),
        ("G4", 13, 28),
    ],
)
def test_generated_sizes(spec, n, m):
    g = generate(spec).graph
    assert (g.n, g.num_edges) == (n, m)


def test_g1_is_k44():
    g = families.g1(4).graph
    assert set(g.degrees()) == {4}
    assert g == complete_multipartite([4, 4])


def test_g2_structure_and_roles():
    gen = families.g2(4)
    g = gen.graph
    a, b = gen.role("copy1"), gen.role("copy2")
    assert induced(g, a)[0] == complete_graph(4) == induced(g, b)[0]
    assert all(g.has_edge(i, 4 + i) for i in range(4))
    assert sum(g.has_edge(u, v) for u in a for v in b) == 4


@pytest.mark.parametrize("m", [4, 5, 6])
def test_g2_closed_form_counts(m):
    g = families.g2(m).graph
    assert g.n == 2 * m and g.num_edges == m * (m - 1) + m


def test_g3_4_is_g0():
    assert families.g3(4).graph == families.g0().graph


def test_g6_roles():
    gen = families.g6(4)
    v6 = gen.role("v6")[0]
    g = gen.graph
    assert g.degree(v6) == 4
    assert set(g.neighbors(v6)) == set(gen.role("left"))
    assert induced(g, gen.role("clique"))[0] == complete_graph(4)


def test_g5t2_layout():
    gen = families.g5t2()
    g = gen.graph
    assert g.degree(0) == 4
    for leaf in gen.role("leaves"):
        assert g.degree(leaf) == 3
    ring = [gen.role(f"{c}{i}")[0] for c in "xyz" for i in range(1, 5)]
    assert all(g.has_edge(ring[k], ring[(k + 1) % 12]) for k in range(12))
    assert girth(g) == 5
    assert find_induced(g, K3) is None and find_induced(g, C4) is None


def test_posa_and_matching_examples():
    assert generate("POSA:t=3").graph == complete_multipartite([3, 3, 2])
    g = generate("KnMINUSkM:n=6,k=3").graph
    assert g == complete_multipartite([2, 2, 2])
    assert generate("POSA:t=1").graph.n == 2


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9, 10])
def test_cycle_square_is_four_connected(n):
    g = families.cycle_square(n).graph
    assert vertex_connectivity(g) == 4
    assert g == power(cycle_graph(n), 2)


def test_exception_roles():
    gen = families.exception_graph(FamilyId("IV", (4,)))
    g = gen.graph
    assert [len(gen.role(r)) for r in ("A1", "A2", "B1", "B2")] == [3, 3, 1, 4]
    for a in gen.role("A1") + gen.role("A2"):
        for b in gen.role("B1") + gen.role("B2"):
            assert g.has_edge(a, b)
    assert not g.has_edge(gen.role("A1")[0], gen.role("A2")[0])


@pytest.mark.parametrize("m", [4, 5, 6])
def test_named_families_are_four_connected(m):
    for gen in (families.g1, families.g2, families.g3, families.g6):
        g = gen(m).graph
        assert is_k_connected(g, 4)
    assert vertex_connectivity(families.g6(m).graph) == 4


@pytest.mark.parametrize("m", [4, 5, 6])
def test_containment_facts(m):
    assert is_free(families.g2(m).graph, [CLAW, K4_MINUS])
    assert find_induced(families.g3(m).graph, K4_MINUS) is not None
    assert is_free(families.g6(m).graph, [CLAW, P4])


# -- G4 -------------------------------------------------------------------------


def test_g4_default():
    gen = generate_g4()
    g = gen.graph
    v4 = gen.role("v4")[0]
    assert g.n == 13 and v4 == 12 and g.degree(v4) == 4
    assert vertex_connectivity(g) == 4
    assert find_induced(g, C4) is None
    # the default attachment produces a claw and a K4; they are reported, not hidden
    assert gen.findings["contains_K1,3"] is not None
    assert gen.findings["contains_K4"] is not None
    assert gen.findings["contains_C4"] is None


def test_g4_rejects_independent_triple():
    with pytest.raises(SelfCheckError, match="independent triple"):
        generate_g4(12, (0, 2, 4, 7))


@pytest.mark.parametrize("n, attach", [(6, (0, 1, 2, 3)), (12, (0, 1, 2)), (12, (0, 1, 2, 12))])
def test_g4_parameter_errors(n, attach):
    with pytest.raises(FamilySpecError):
        generate_g4(n, attach)


def test_g4_no_attachment_is_fully_free():
    # every choice of four positions on C12^2 leaves one of the three patterns
    host = power(cycle_graph(12), 2)
    for rest in combinations(range(1, 12), 3):
        attach = (0,) + rest
        g = from_edge_list(13, host.edges() + [(12, a) for a in attach])
        assert not is_free(g, [CLAW, C4, K4])


def test_g4_spec_string():
    gen = generate("G4:n=13,attach=0/1/2/8")
    assert gen.graph.n == 14
    assert gen.role("attach") == [0, 1, 2, 8]


# -- spec parsing --------------------------------------------------------------


@pytest.mark.parametrize(
    "spec",
    ["G1:m=3", "G9", "EXC:v,m=3", "EXC:i,m=1,q=2", "EXC:ii,m=2", "KnMINUSkM:n=5,k=3", "CYCLE_SQ:n=2", "G2", "MULTI:2,0"],
)
def test_generate_rejects_bad_specs(spec):
    with pytest.raises(FamilySpecError):
        generate(spec)


def test_generate_accepts_positional_and_keyword_forms():
    assert generate("G2:4").graph == generate("G2:m=4").graph
    assert generate("EXC:i,2,3").graph == generate("EXC:I,m=2,q=3").graph
    assert generate("g5").graph == families.g5t2().graph
