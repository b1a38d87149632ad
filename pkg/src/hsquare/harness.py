"""Mechanical verification of the structural results at desk scale.

Each catalogue entry runs over an exhaustive or structured population and
returns a :class:`CheckReport`. Counterexamples are kept as graph6 strings
with the violated property, sorted, so reports do not depend on worker
scheduling.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterator

import numpy as np

from . import families
from .graph import (
    Graph,
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
    power,
    relabel,
    to_graph6,
    vertex_connectivity,
)
from .hsq import (
    DEFAULT_BUDGET,
    build_h2_claw_p4_free,
    build_h2_claw_z1_free,
    build_h2_k14_z1_free,
    build_h2_multipartite,
    build_hps_exception,
    hamiltonian_path_square_search,
    oracle_h2,
    verify_h2,
)
from .patterns import (
    C4,
    CLAW,
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
    find_induced,
    is_free,
    multipartite_structure,
    star,
    z1_free_structure_check,
)
from .sweep import LONG_RUN_MAX, MAX_FULL_SWEEP, LabeledSpace, SweepTooLarge, graph_from_code

DEFAULT_SEED = 20240601
MAX_COUNTEREXAMPLES = 20


@dataclass
class CheckReport:
    check: str
    population: str
    tested: int = 0
    passed: int = 0
    failed: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    findings: dict = field(default_factory=dict)
    seed: int | None = None
    millis: int = 0
    asserted: bool = True

    @property
    def ok(self) -> bool:
        return self.failed == 0 or not self.asserted

    def record(self, ok: bool, g: Graph | None = None, prop: str | None = None) -> None:
        self.tested += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.counterexamples.append({"graph6": to_graph6(g) if g is not None else None, "property": prop})

    def merge(self, counts: tuple[int, int, list[dict]]) -> None:
        passed, failed, cex = counts
        self.tested += passed + failed
        self.passed += passed
        self.failed += failed
        self.counterexamples.extend(cex)

    def finish(self, started: float) -> CheckReport:
        self.counterexamples = sorted(self.counterexamples, key=lambda c: (str(c["graph6"]), str(c["property"])))[
            :MAX_COUNTEREXAMPLES
        ]
        self.millis = int((time.perf_counter() - started) * 1000)
        return self

    def to_dict(self) -> dict:
        out = asdict(self)
        if out["seed"] is None:
            del out["seed"]
        return out


@dataclass(frozen=True)
class Settings:
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    seed: int = DEFAULT_SEED
    long_run: bool = False
    samples: int = 500


# -- enumeration drivers ----------------------------------------------------


LONG_RUN_CHUNK = 1 << 22


def labeled_spaces(n: int, long_run: bool = False) -> Iterator[LabeledSpace]:
    """The code space for ``n`` as one piece (n <= 7) or in index-range chunks (n = 8, long run)."""
    if n <= MAX_FULL_SWEEP:
        yield LabeledSpace(n)
        return
    if not long_run or n > LONG_RUN_MAX:
        raise SweepTooLarge(f"labelled sweep at n = {n} needs the long-run flag and n <= {LONG_RUN_MAX}")
    total = 1 << (n * (n - 1) // 2)
    for start in range(0, total, LONG_RUN_CHUNK):
        codes = np.arange(start, min(total, start + LONG_RUN_CHUNK), dtype=np.uint32)
        yield LabeledSpace(n, codes, long_run=True)


def enumerate_labeled(
    n: int,
    filters: tuple[Callable[[Graph], bool], ...] = (),
    *,
    min_degree: int = 0,
    connected: bool = False,
    free_of: tuple = (),
    long_run: bool = False,
) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices passing the filters, in code order.

    ``min_degree``, ``connected`` and ``free_of`` are applied vectorised over
    the code space before the Python predicates in ``filters``.
    """
    for space in labeled_spaces(n, long_run):
        if min_degree:
            space = space.restrict(space.min_degree_at_least(min_degree))
        mask = np.ones(len(space), dtype=bool)
        if free_of:
            mask &= space.free_of(free_of)
        if connected:
            mask &= space.connected()
        for g in space.graphs(mask):
            if all(f(g) for f in filters):
                yield g


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into parts <= ``max_part``, non-increasing, in reverse lexicographic order."""
    top = n if max_part is None else min(n, max_part)

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    if n == 0:
        return
    yield from rec(n, top)


def enumerate_multipartite(n_range, max_part: int) -> Iterator[PartitionStructure]:
    for n in n_range:
        for parts in partitions(n, max_part):
            yield PartitionStructure.from_sizes(parts)


def clique_compositions(rng: random.Random, count: int, max_n: int = 10) -> Iterator[tuple[str, Graph]]:
    """Random joins of 2-3 blocks, each a clique or two disjoint cliques, randomly relabelled;
    only 4-connected results are yielded."""
    made = 0
    while made < count:
        k = rng.choice((2, 2, 3))
        blocks = [(rng.randint(1, 4), rng.choice((0, 0, 1, 2, 3, 4))) for _ in range(k)]
        n = sum(a + b for a, b in blocks)
        if n < 5 or n > max_n:
            continue
        g = None
        for a, b in blocks:
            h = complete_graph(a) if b == 0 else disjoint_union(complete_graph(a), complete_graph(b))
            g = h if g is None else join(g, h)
        if not is_k_connected(g, 4):
            continue
        perm = list(range(n))
        rng.shuffle(perm)
        made += 1
        yield " + ".join(f"(K{a} u K{b})" if b else f"K{a}" for a, b in blocks), relabel(g, perm)


# -- parallel per-graph evaluation ------------------------------------------------

# evaluator result for a prefiltered graph that is outside the population
SKIP = False


def _eval_chunk(args) -> tuple[int, int, list[dict]]:
    name, n, codes, budget = args
    fn = _EVALUATORS[name]
    passed = failed = 0
    cex = []
    for c in codes:
        g = graph_from_code(n, c)
        prop = fn(g, budget)
        if prop is SKIP:
            continue
        if prop is None:
            passed += 1
        else:
            failed += 1
            cex.append({"graph6": to_graph6(g), "property": prop})
    return passed, failed, cex


def _evaluate(name: str, n: int, codes: list[int], settings: Settings) -> tuple[int, int, list[dict]]:
    workers = max(1, settings.workers)
    if workers == 1 or len(codes) < 2 * workers:
        return _eval_chunk((name, n, codes, settings.budget))
    size = -(-len(codes) // workers)
    chunks = [(name, n, codes[i : i + size], settings.budget) for i in range(0, len(codes), size)]
    passed = failed = 0
    cex: list[dict] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for p, f, c in pool.map(_eval_chunk, chunks):
            passed += p
            failed += f
            cex.extend(c)
    return passed, failed, cex


def _ev_z1_structure(g: Graph, budget: int) -> str | bool | None:
    try:
        ps = z1_free_structure_check(g)
    except PreconditionError as exc:
        return f"sweep mask disagrees with library predicate: {exc}"
    except StructureViolation:
        return "not complete multipartite"
    if ps.graph() != g:
        return "rebuilt multipartite graph differs"
    return None


def _cor_evaluator(r: int):
    def ev(g: Graph, budget: int) -> str | None:
        if not is_free(g, [Z1, star(r)]):
            return "sweep mask disagrees with library predicate"
        ps = multipartite_structure(g)
        if ps is None:
            return "not complete multipartite"
        if max(ps.parts) > r - 1:
            return f"part of size {max(ps.parts)} > {r - 1}"
        if vertex_connectivity(g) < g.n - r + 1:
            return f"connectivity below n - {r} + 1"
        return None

    return ev


def _ev_prop_p3(g: Graph, budget: int) -> str | None:
    if not is_k_connected(g, 4):
        return SKIP
    if not g.is_complete():
        return "4-connected P3-free graph is not complete"
    if not oracle_h2(g, budget).has_h2:
        return "complete graph reported without H^2"
    return None


def _ev_thm1(g: Graph, budget: int) -> str | None:
    if not is_k_connected(g, 4):
        return SKIP
    v = oracle_h2(g, budget)
    if not v.has_h2:
        return "oracle: no H^2"
    b = build_h2_claw_z1_free(g)
    if not (b.has_h2 and verify_h2(g, b.certificate)):
        return "builder certificate failed"
    return None


def _ev_thm3(g: Graph, budget: int) -> str | None:
    if not is_k_connected(g, 4):
        return SKIP
    return _compare_claw_p4(g, budget)


def _compare_claw_p4(g: Graph, budget: int) -> str | None:
    b = build_h2_claw_p4_free(g)
    o = oracle_h2(g, budget)
    if b.has_h2 and not verify_h2(g, b.certificate):
        return "builder certificate failed"
    if b.has_h2 != o.has_h2:
        return f"builder {b.status} vs oracle {o.status}"
    fam = exception_family_match(g)
    if (fam is not None) == o.has_h2:
        return f"NoH2 does not coincide with exception membership (family={fam})"
    return None


_EVALUATORS: dict[str, Callable[[Graph, int], str | None]] = {
    "z1_structure": _ev_z1_structure,
    "cor3": _cor_evaluator(3),
    "cor4": _cor_evaluator(4),
    "prop_p3": _ev_prop_p3,
    "thm1": _ev_thm1,
    "thm3": _ev_thm3,
}


def _labeled_codes(
    n: int, settings: Settings, build_mask: Callable[[LabeledSpace], np.ndarray], min_degree: int = 0
) -> list[int]:
    out: list[int] = []
    for space in labeled_spaces(n, settings.long_run):
        if min_degree:
            space = space.restrict(space.min_degree_at_least(min_degree))
        out += space.codes[build_mask(space)].tolist()
    return out


def _sweep_top(settings: Settings) -> int:
    return 8 if settings.long_run else 7


# -- catalogue -------------------------------------------------------------------


def _fig2(m_values=(4, 5)) -> list[tuple[str, Graph]]:
    out = []
    for m in m_values:
        out += [(f"G1({m})", families.g1(m).graph), (f"G2({m})", families.g2(m).graph)]
        out += [(f"G3({m})", families.g3(m).graph), (f"G6({m})", families.g6(m).graph)]
    out += [("G4", families.generate_g4().graph), ("G5(2)", families.g5t2().graph)]
    return out


def check_noh2_fam(settings: Settings) -> CheckReport:
    rep = CheckReport("NOH2-FAM", "G1..G3, G6 for m in {4,5}; G4 default; G5(2); POSA t in {2,3}")
    started = time.perf_counter()
    items = _fig2() + [(f"POSA({t})", families.posa(t).graph) for t in (2, 3)]
    for label, g in items:
        v = oracle_h2(g, settings.budget)
        rep.record(not v.has_h2, g, f"{label} has an H^2")
        rep.findings[label] = {"n": g.n, "reason": v.reason, "detail": v.detail}
    return rep.finish(started)


def check_conn_fam(settings: Settings) -> CheckReport:
    rep = CheckReport(
        "CONN-FAM",
        "kappa = 4 for G1, G2, G3, G6 at m = 4, G4 and C_n^2 (5 <= n <= 10); kappa >= 4 at m = 5, 6; "
        "kappa(G5(2)) as finding",
    )
    started = time.perf_counter()
    exact: list[tuple[str, Graph]] = []
    at_least: list[tuple[str, Graph]] = []
    for m in (4, 5, 6):
        target = exact if m == 4 else at_least
        target += [(f"G1({m})", families.g1(m).graph), (f"G2({m})", families.g2(m).graph)]
        target += [(f"G3({m})", families.g3(m).graph), (f"G6({m})", families.g6(m).graph)]
    exact.append(("G4", families.generate_g4().graph))
    exact += [(f"C{n}^2", power(cycle_graph(n), 2)) for n in range(5, 11)]
    for label, g in exact:
        k = vertex_connectivity(g)
        rep.findings[label] = k
        rep.record(k == 4, g, f"kappa({label}) = {k}, expected 4")
    # G1, G2, G3 have kappa = m, so only 4-connectivity holds for m > 4
    for label, g in at_least:
        k = vertex_connectivity(g)
        rep.findings[label] = k
        rep.record(k >= 4, g, f"kappa({label}) = {k} < 4")
    g5 = families.g5t2().graph
    rep.findings["G5(2)"] = vertex_connectivity(g5)
    rep.findings["G5(2) note"] = "leaves have degree 3, so G5(2) is not 4-connected as defined"
    return rep.finish(started)


def check_g5_girth(settings: Settings) -> CheckReport:
    rep = CheckReport("G5-GIRTH", "G5(2): girth >= 5 asserted, exact girth and kappa recorded")
    started = time.perf_counter()
    g = families.g5t2().graph
    gv, cycle = girth(g, witness=True)
    rep.record(gv >= 5, g, f"girth {gv} < 5")
    rep.findings.update({"girth": gv, "girth_witness": cycle, "kappa": vertex_connectivity(g), "min_degree": g.min_degree()})
    return rep.finish(started)


def check_lem_g2(settings: Settings) -> CheckReport:
    rep = CheckReport("LEM-G2", "all 2^8 vertex subsets of G2(4); tested = connected induced subgraphs")
    started = time.perf_counter()
    g = families.g2(4).graph
    qualifying = 0
    for mask in range(1, 1 << g.n):
        sub, _ = induced(g, mask)
        if not is_connected(sub):
            continue
        ok = True
        if sub.n >= 4 and is_free(sub, [P4, C4, K4]):
            qualifying += 1
            ok = sub.n == 4 and find_induced(sub, Z1) is not None
        rep.record(ok, sub, "connected {P4,C4,K4}-free induced subgraph outside {K1,K2,K3,P3} is not Z1")
    rep.findings["qualifying_subsets"] = qualifying
    return rep.finish(started)


def check_lem_z1(settings: Settings) -> CheckReport:
    rep = CheckReport("LEM-Z1", f"labelled graphs n <= {_sweep_top(settings)}: connected, Z1-free, a degree->=3 vertex on a triangle")
    started = time.perf_counter()
    for n in range(4, _sweep_top(settings) + 1):
        codes = _labeled_codes(n, settings, lambda s: s.connected() & s.free_of([Z1]) & s.triangle_vertex_of_degree(3))
        rep.merge(_evaluate("z1_structure", n, codes, settings))
        rep.findings[f"n={n}"] = len(codes)
    return rep.finish(started)


def check_cor_conn(settings: Settings) -> CheckReport:
    rep = CheckReport(
        "COR-CONN",
        "r in {3,4}: complete multipartite, parts <= r-1, n <= 10, a vertex of degree >= r; "
        f"plus labelled connected {{Z1,K1r}}-free graphs with max degree >= r, n <= {_sweep_top(settings)}",
    )
    started = time.perf_counter()
    for r in (3, 4):
        structured = 0
        for ps in enumerate_multipartite(range(1, 11), r - 1):
            n = ps.n
            if n - min(ps.parts) < r:
                continue
            g = complete_multipartite(ps.parts)
            structured += 1
            rep.record(vertex_connectivity(g) >= n - r + 1, g, f"kappa < n - {r} + 1")
        rep.findings[f"r={r} structured"] = structured
        for n in range(r + 1, _sweep_top(settings) + 1):
            codes = _labeled_codes(
                n, settings, lambda s: s.connected() & s.free_of([Z1, star(r)]) & s.max_degree_at_least(r)
            )
            rep.merge(_evaluate(f"cor{r}", n, codes, settings))
            rep.findings[f"r={r} labelled n={n}"] = len(codes)
    return rep.finish(started)


def check_prop_p3(settings: Settings) -> CheckReport:
    rep = CheckReport("PROP-P3", f"labelled 4-connected P3-free graphs, n <= {_sweep_top(settings)}")
    started = time.perf_counter()
    for n in range(5, _sweep_top(settings) + 1):
        codes = _labeled_codes(n, settings, lambda s: s.free_of([P3]), min_degree=4)
        rep.merge(_evaluate("prop_p3", n, codes, settings))
    return rep.finish(started)


def check_thm1(settings: Settings) -> CheckReport:
    rep = CheckReport(
        "THM1-SUFF",
        f"labelled 4-connected {{K13,Z1}}-free graphs n <= {_sweep_top(settings)} (oracle and builder); "
        "complete multipartite with parts <= 2, 8 <= n <= 12 (builder)",
    )
    started = time.perf_counter()
    for n in range(5, _sweep_top(settings) + 1):
        codes = _labeled_codes(n, settings, lambda s: s.free_of([CLAW, Z1]), min_degree=4)
        counts = _evaluate("thm1", n, codes, settings)
        rep.merge(counts)
        rep.findings[f"labelled n={n} candidates"] = len(codes)
    structured = 0
    for ps in enumerate_multipartite(range(8, 13), 2):
        g = complete_multipartite(ps.parts)
        if not is_k_connected(g, 4):
            continue
        structured += 1
        v = build_h2_claw_z1_free(g)
        rep.record(v.has_h2 and verify_h2(g, v.certificate), g, f"builder failed on parts {ps.parts}")
    rep.findings["structured"] = structured
    return rep.finish(started)


def check_thm2(settings: Settings) -> CheckReport:
    rep = CheckReport(
        "THM2-SUFF",
        "complete multipartite with parts <= 3, 9 <= n <= 12 (arrangement and induction builders); K2,3,3 sharpness",
    )
    started = time.perf_counter()
    count = 0
    for ps in enumerate_multipartite(range(9, 13), 3):
        g = complete_multipartite(ps.parts)
        if not is_k_connected(g, 4):
            continue
        count += 1
        a = build_h2_multipartite(ps)
        rep.record(a.has_h2 and verify_h2(g, a.certificate), g, f"arrangement builder failed on {ps.parts}")
        b = build_h2_k14_z1_free(g)
        rep.record(b.has_h2 and verify_h2(g, b.certificate), g, f"induction builder failed on {ps.parts}")
    rep.findings["graphs"] = count
    k233 = complete_multipartite((2, 3, 3))
    in_class = is_k_connected(k233, 4) and is_free(k233, [star(4), Z1])
    rep.record(in_class, k233, "K2,3,3 is not a 4-connected {K14,Z1}-free graph")
    rep.record(not oracle_h2(k233, settings.budget).has_h2, k233, "oracle finds an H^2 in K2,3,3")
    rep.record(not build_h2_multipartite((2, 3, 3)).has_h2, k233, "arrangement builder finds an H^2 in K2,3,3")
    return rep.finish(started)


def exception_members(max_n: int = 10) -> list[FamilyId]:
    out = []
    for total in range(4, max_n - 3):
        for m in range(1, total):
            out.append(FamilyId("I", (m, total - m)))
    for tag, base in (("II", 5), ("III", 6), ("IV", 7)):
        for m in range(3, max_n - base + 1):
            out.append(FamilyId(tag, (m,)))
    return out


def check_thm3(settings: Settings) -> CheckReport:
    rep = CheckReport(
        "THM3-FULL",
        f"labelled 4-connected {{K13,P4}}-free graphs n <= {_sweep_top(settings)}; "
        f"{settings.samples} seeded clique compositions n <= 10; exception members n <= 10",
        seed=settings.seed,
    )
    started = time.perf_counter()
    for n in range(5, _sweep_top(settings) + 1):
        codes = _labeled_codes(n, settings, lambda s: s.free_of([CLAW, P4]), min_degree=4)
        counts = _evaluate("thm3", n, codes, settings)
        rep.merge(counts)
        rep.findings[f"labelled n={n} candidates"] = len(codes)
    rng = random.Random(settings.seed)
    no_h2 = 0
    for label, g in clique_compositions(rng, settings.samples):
        if not is_free(g, [CLAW, P4]):
            rep.record(False, g, f"composition {label} is not {{K13,P4}}-free")
            continue
        prop = _compare_claw_p4(g, settings.budget)
        rep.record(prop is None, g, f"{label}: {prop}")
        no_h2 += exception_family_match(g) is not None
    rep.findings["compositions"] = settings.samples
    rep.findings["compositions_in_exception_families"] = no_h2
    members = exception_members(10)
    for fam in members:
        g = families.exception_graph(fam).graph
        ps = build_hps_exception(fam)
        rep.record(ps.is_hamiltonian(g), g, f"{fam.label()}: invalid path square")
        rep.record(hamiltonian_path_square_search(g, settings.budget) is not None, g, f"{fam.label()}: no path square by search")
        rep.record(not oracle_h2(g, settings.budget).has_h2, g, f"{fam.label()}: oracle finds an H^2")
        v = build_h2_claw_p4_free(g)
        rep.record(not v.has_h2 and v.family == fam, g, f"{fam.label()}: builder verdict {v.status} {v.family}")
    rep.findings["exception_members"] = [f.label() for f in members]
    return rep.finish(started)


def check_nec_pairs(settings: Settings) -> CheckReport:
    rep = CheckReport("NEC-PAIRS", "induced-containment facts about G0..G6 used for the necessity arguments")
    started = time.perf_counter()
    facts: list[tuple[str, Graph, object, bool]] = []
    for m in (4, 5):
        g2 = families.g2(m).graph
        facts += [(f"G2({m})", g2, CLAW, False), (f"G2({m})", g2, star(4), False), (f"G2({m})", g2, K4_MINUS, False)]
        facts += [(f"G2({m})", g2, P3, True), (f"G2({m})", g2, Z1, True)]
        g3 = families.g3(m).graph
        facts += [(f"G3({m})", g3, K4_MINUS, True)]
        g6 = families.g6(m).graph
        facts += [(f"G6({m})", g6, P4, False), (f"G6({m})", g6, CLAW, False)]
        g1 = families.g1(m).graph
        facts += [(f"G1({m})", g1, star(m), True), (f"G1({m})", g1, C4, True), (f"G1({m})", g1, Z1, False)]
    facts.append(("G0", families.g0().graph, K4_MINUS, True))
    g4 = families.generate_g4()
    facts += [("G4", g4.graph, star(4), False), ("G4", g4.graph, C4, False)]
    g5 = families.g5t2().graph
    facts += [("G5(2)", g5, C4, False), ("G5(2)", g5, K3, False), ("G5(2)", g5, star(4), True), ("G5(2)", g5, star(5), False)]
    for label, g, pat, expect in facts:
        found = find_induced(g, pat) is not None
        word = "contains" if expect else "is free of"
        rep.record(found == expect, g, f"{label} {word} {pat.name} expected")
    # stated for G4 but contradicted by every attachment choice; see G4-ATTACH
    rep.findings["G4 discrepancies"] = {
        name: list(emb) for name, emb in g4.findings.items() if emb is not None and name in ("contains_K1,3", "contains_K4")
    }
    return rep.finish(started)


def check_g4_attach(settings: Settings) -> CheckReport:
    rep = CheckReport(
        "G4-ATTACH",
        "C_n^2 plus one vertex joined to 4 cycle positions, n in {12,13,14}: none is {K13,C4,K4}-free",
    )
    started = time.perf_counter()
    c4_free = 0
    for n in (12, 13, 14):
        host = power(cycle_graph(n), 2)
        for rest in combinations(range(1, n), 3):
            attach = (0,) + rest
            g = from_edge_list(n + 1, host.edges() + [(n, a) for a in attach])
            free = is_free(g, [CLAW, C4, K4])
            rep.record(not free, g, f"attachment {attach} on C{n}^2 is {{K13,C4,K4}}-free")
            c4_free += is_free(g, [C4])
    rep.findings["C4-free attachments"] = c4_free
    return rep.finish(started)


def check_oracle_naive(settings: Settings) -> CheckReport:
    rep = CheckReport(
        "ORACLE-NAIVE",
        "oracle vs brute force over all cyclic orders, labelled graphs 3 <= n <= 7",
    )
    started = time.perf_counter()
    for n in range(3, 8):
        space = LabeledSpace(n)
        naive = space.naive_h2()
        # pruning rules must never discard a graph that has an H^2
        if n >= 5:
            low = naive & ~space.min_degree_at_least(4)
            rep.record(not low.any(), None, f"n={n}: a graph with min degree < 4 has an H^2")
        if n >= 4:
            tf = naive & ~space.contains(K3)
            rep.record(not tf.any(), None, f"n={n}: a triangle-free graph has an H^2")
        mask = space.min_degree_at_least(4) if n >= 5 else np.ones(len(space), dtype=bool)
        for code, truth in zip(space.codes[mask].tolist(), naive[mask].tolist()):
            g = graph_from_code(n, code, space.pairs)
            v = oracle_h2(g, settings.budget)
            ok = v.has_h2 == truth and (not v.has_h2 or verify_h2(g, v.certificate))
            rep.record(ok, g, f"oracle {v.status} vs brute force {truth}")
        rep.findings[f"n={n} with H2"] = int(naive.sum())
    return rep.finish(started)


CATALOGUE: dict[str, Callable[[Settings], CheckReport]] = {
    "NOH2-FAM": check_noh2_fam,
    "CONN-FAM": check_conn_fam,
    "LEM-G2": check_lem_g2,
    "LEM-Z1": check_lem_z1,
    "COR-CONN": check_cor_conn,
    "PROP-P3": check_prop_p3,
    "THM1-SUFF": check_thm1,
    "THM2-SUFF": check_thm2,
    "THM3-FULL": check_thm3,
    "NEC-PAIRS": check_nec_pairs,
    "G4-ATTACH": check_g4_attach,
    "G5-GIRTH": check_g5_girth,
    "ORACLE-NAIVE": check_oracle_naive,
}


def run_check(check_id: str, settings: Settings | None = None) -> CheckReport:
    key = check_id.upper()
    if key not in CATALOGUE:
        raise KeyError(f"unknown check {check_id!r}; known: {', '.join(CATALOGUE)}")
    return CATALOGUE[key](settings or Settings())


def run_all(ids=None, settings: Settings | None = None) -> list[CheckReport]:
    return [run_check(i, settings) for i in (ids or CATALOGUE)]


def reports_to_json(reports: list[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True, default=str)


def reports_to_markdown(reports: list[CheckReport]) -> str:
    lines = ["| check | tested | passed | failed | ms | status |", "|---|---:|---:|---:|---:|---|"]
    for r in reports:
        status = "ok" if r.ok else "FAIL"
        lines.append(f"| {r.check} | {r.tested} | {r.passed} | {r.failed} | {r.millis} | {status} |")
    for r in reports:
        lines.append("")
        lines.append(f"## {r.check}")
        lines.append(r.population)
        if r.seed is not None:
            lines.append(f"seed: {r.seed}")
        for k, v in r.findings.items():
            lines.append(f"- {k}: {v}")
        for c in r.counterexamples:
            lines.append(f"- counterexample `{c['graph6']}`: {c['property']}")
    return "\n".join(lines) + "\n"
