"""Hamiltonian squares (H^2) of 4-connected graphs under forbidden induced pairs.

Exact oracle, constructive builders for the claw-based graph classes, family
generators and a verification harness.
"""

from .families import FamilySpecError, Generated, generate
from .graph import (
    Graph,
    GraphFormatError,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    girth,
    induced,
    is_connected,
    is_k_connected,
    join,
    minimum_vertex_cut,
    parse_edge_list_text,
    parse_graph6,
    path_graph,
    power,
    to_edge_list_text,
    to_graph6,
    vertex_connectivity,
)
from .hsq import (
    BudgetExceeded,
    CyclicOrder,
    PathSquare,
    ConstructionError,
    Verdict,
    build_h2_claw_p4_free,
    build_h2_claw_z1_free,
    build_h2_k14_z1_free,
    build_h2_multipartite,
    build_hps_exception,
    concat_path_squares,
    insert_vertex,
    oracle_h2,
    solve,
    verify_h2,
)
from .patterns import (
    CLAW,
    FamilyId,
    StructureViolation,
    Pattern,
    PartitionStructure,
    PreconditionError,
    exception_family_match,
    find_induced,
    is_free,
    multipartite_structure,
    pattern_by_name,
    star,
    z1_free_structure_check,
)

__version__ = "0.1.0"
