"""Generators for every named graph: G0, G1..G6, the exception families,
complete multipartite graphs, K_n minus a matching, path/cycle squares and
the K_{t,t,t-1} sharpness example.

Each generator returns a :class:`Generated` carrying the graph and a role map
of named vertex sets, so callers can refer to ``v6`` or ``the K_m side``
without re-deriving labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .graph import (
    Graph,
    bits,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    is_k_connected,
    join,
    mask_of,
    path_graph,
    power,
)
from .patterns import (
    C4,
    CLAW,
    K4,
    FamilyId,
    find_induced,
    has_path_on_four,
    is_independent,
)


class FamilySpecError(ValueError):
    """Unknown family or parameters out of bounds."""


class SelfCheckError(AssertionError):
    """A generator's runtime self-check failed; the parameters are unusable."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(str(p) for p in self.params)}"


@dataclass
class Generated:
    spec: FamilySpec
    graph: Graph
    roles: dict[str, int] = field(default_factory=dict)
    findings: dict[str, object] = field(default_factory=dict)

    def role(self, name: str) -> list[int]:
        return list(bits(self.roles[name]))


def _block(start: int, size: int) -> int:
    return ((1 << size) - 1) << start


def _two_cliques(a: int, b: int) -> Graph:
    return disjoint_union(complete_graph(a), complete_graph(b))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilySpecError(msg)


# -- the individual families ----------------------------------------------


def g0() -> Generated:
    g = join(complete_graph(4), empty_graph(3))
    return Generated(FamilySpec("G0"), g, {"clique": _block(0, 4), "independent": _block(4, 3)})


def g1(m: int) -> Generated:
    _require(m >= 4, "G1 needs m >= 4")
    g = complete_multipartite([m, m])
    return Generated(FamilySpec("G1", (m,)), g, {"left": _block(0, m), "right": _block(m, m)})


def g2(m: int) -> Generated:
    _require(m >= 4, "G2 needs m >= 4")
    g = disjoint_union(complete_graph(m), complete_graph(m))
    g = from_edge_list(2 * m, g.edges() + [(i, m + i) for i in range(m)])
    return Generated(FamilySpec("G2", (m,)), g, {"copy1": _block(0, m), "copy2": _block(m, m)})


def g3(m: int) -> Generated:
    _require(m >= 4, "G3 needs m >= 4")
    g = join(complete_graph(m), empty_graph(m - 1))
    return Generated(FamilySpec("G3", (m,)), g, {"clique": _block(0, m), "independent": _block(m, m - 1)})


DEFAULT_G4 = (12, (0, 1, 2, 7))


def generate_g4(n: int = DEFAULT_G4[0], attach: tuple[int, ...] = DEFAULT_G4[1]) -> Generated:
    """C_n^2 on 0..n-1 plus a vertex ``v4 = n`` joined to four cycle positions.

    The self-check raises SelfCheckError unless the result is 4-connected,
    ``v4`` has no independent triple among its neighbours (no claw centred
    at ``v4``) and ``G[N(v4)]`` has no spanning path (so ``v4`` cannot sit on
    an H^2). Global claw/C4/K4 containment is reported under ``findings``.
    """
    _require(n >= 12, "G4 needs a host cycle of length >= 12")
    attach = tuple(sorted(set(attach)))
    _require(len(attach) == 4 and all(0 <= a < n for a in attach), "G4 needs 4 distinct cycle positions")
    host = power(cycle_graph(n), 2)
    v4 = n
    g = from_edge_list(n + 1, host.edges() + [(v4, a) for a in attach])
    nbrs = mask_of(attach)
    for triple in _triples(attach):
        if is_independent(g, mask_of(triple)):
            raise SelfCheckError(f"N(v4) contains the independent triple {triple}: induced claw at v4")
    if has_path_on_four(g, nbrs):
        raise SelfCheckError("G[N(v4)] has a spanning path, so v4 does not block an H^2")
    if not is_k_connected(g, 4):
        raise SelfCheckError("G4 is not 4-connected")
    findings = {}
    for pat in (CLAW, C4, K4):
        emb = find_induced(g, pat)
        findings[f"contains_{pat.name}"] = emb
    spec = FamilySpec("G4", (n, attach))
    return Generated(spec, g, {"cycle": _block(0, n), "v4": 1 << v4, "attach": nbrs}, findings)


def _triples(items):
    k = len(items)
    return [(items[i], items[j], items[l]) for i in range(k) for j in range(i + 1, k) for l in range(j + 1, k)]


G5_LEAF_NAMES = [f"{c}{i}" for i in range(1, 5) for c in "xyz"]


def g5t2() -> Generated:
    """Perfect 4-ary tree of depth 2 with leaves closed into the cycle
    x1 x2 x3 x4 y1 .. y4 z1 .. z4 x1.

    Labels: root 0, internal 1..4, leaves 5..16 named left to right
    x1, y1, z1, x2, y2, z2, ...
    """
    edges = [(0, i) for i in range(1, 5)]
    label = {}
    for i in range(1, 5):
        for j, c in enumerate("xyz"):
            leaf = 5 + 3 * (i - 1) + j
            label[f"{c}{i}"] = leaf
            edges.append((i, leaf))
    ring = [label[f"{c}{i}"] for c in "xyz" for i in range(1, 5)]
    edges += [(ring[k], ring[(k + 1) % 12]) for k in range(12)]
    g = from_edge_list(17, edges)
    roles = {"root": 1, "internal": _block(1, 4), "leaves": _block(5, 12)}
    roles.update({name: 1 << v for name, v in label.items()})
    return Generated(FamilySpec("G5t2"), g, roles)


def g6(m: int) -> Generated:
    _require(m >= 4, "G6 needs m >= 4")
    g = join(_two_cliques(2, 2), _two_cliques(m, 1))
    v6 = 4 + m
    roles = {"left": _block(0, 4), "clique": _block(4, m), "v6": 1 << v6}
    return Generated(FamilySpec("G6", (m,)), g, roles)


def exception_graph(fam: FamilyId) -> Generated:
    (a1, a2), (b1, b2) = fam.operand_sizes()
    g = join(_two_cliques(a1, a2), _two_cliques(b1, b2))
    na = a1 + a2
    roles = {
        "A1": _block(0, a1),
        "A2": _block(a1, a2),
        "B1": _block(na, b1),
        "B2": _block(na + b1, b2),
    }
    return Generated(FamilySpec("EXC", (fam.tag, *fam.params)), g, roles)


def multipartite(parts) -> Generated:
    parts = tuple(int(p) for p in parts)
    _require(len(parts) >= 1 and all(p >= 1 for p in parts), "MULTI needs positive part sizes")
    g = complete_multipartite(parts)
    roles = {}
    start = 0
    for i, p in enumerate(parts):
        roles[f"part{i}"] = _block(start, p)
        start += p
    return Generated(FamilySpec("MULTI", parts), g, roles)


def kn_minus_matching(n: int, k: int) -> Generated:
    _require(n >= 1 and 0 <= 2 * k <= n, "KnMINUSkM needs 2k <= n")
    matching = {(2 * i, 2 * i + 1) for i in range(k)}
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in matching]
    g = from_edge_list(n, edges)
    return Generated(FamilySpec("KnMINUSkM", (n, k)), g, {"matched": _block(0, 2 * k)})


def path_square(n: int) -> Generated:
    _require(n >= 1, "PATH_SQ needs n >= 1")
    g = power(path_graph(n), 2) if n > 1 else empty_graph(1)
    return Generated(FamilySpec("PATH_SQ", (n,)), g)


def cycle_square(n: int) -> Generated:
    _require(n >= 3, "CYCLE_SQ needs n >= 3")
    return Generated(FamilySpec("CYCLE_SQ", (n,)), power(cycle_graph(n), 2))


def posa(t: int) -> Generated:
    _require(t >= 1, "POSA needs t >= 1")
    parts = [p for p in (t, t, t - 1) if p > 0]
    g = complete_multipartite(parts)
    return Generated(FamilySpec("POSA", (t,)), g)


# -- spec strings -----------------------------------------------------------

_KV = re.compile(r"^\s*(\w+)\s*=\s*(.+?)\s*$")
_ROMAN = {"i": "I", "ii": "II", "iii": "III", "iv": "IV", "1": "I", "2": "II", "3": "III", "4": "IV"}


def _kv(args: list[str]) -> tuple[list[str], dict[str, str]]:
    pos, kw = [], {}
    for a in args:
        m = _KV.match(a)
        if m:
            kw[m.group(1).lower()] = m.group(2)
        elif a.strip():
            pos.append(a.strip())
    return pos, kw


def generate(spec: str | FamilySpec) -> Generated:
    """Build a family member from a spec such as ``G2:m=4``, ``EXC:i,m=2,q=2``,
    ``MULTI:3,3,3``, ``G4:n=12,attach=0/1/2/7``, ``KnMINUSkM:n=6,k=3``."""
    if isinstance(spec, FamilySpec):
        text = str(spec)
    else:
        text = spec
    head, _, tail = text.partition(":")
    fam = head.strip().upper()
    args = [a for a in tail.split(",")] if tail else []
    pos, kw = _kv(args)

    def num(key: str, index: int = 0) -> int:
        if key in kw:
            return int(kw[key])
        if len(pos) > index:
            return int(pos[index])
        raise FamilySpecError(f"{fam} needs parameter {key}")

    try:
        if fam == "G0":
            return g0()
        if fam == "G1":
            return g1(num("m"))
        if fam == "G2":
            return g2(num("m"))
        if fam == "G3":
            return g3(num("m"))
        if fam == "G4":
            n = int(kw.get("n", pos[0] if pos else DEFAULT_G4[0]))
            if "attach" in kw:
                attach = tuple(int(x) for x in re.split(r"[/; ]+", kw["attach"]) if x)
            else:
                attach = DEFAULT_G4[1]
            return generate_g4(n, attach)
        if fam in ("G5T2", "G5"):
            return g5t2()
        if fam == "G6":
            return g6(num("m"))
        if fam == "EXC":
            if not pos:
                raise FamilySpecError("EXC needs a family tag i..iv")
            tag = _ROMAN.get(pos[0].lower())
            if tag is None:
                raise FamilySpecError(f"unknown exception family {pos[0]!r}")
            rest = [int(p) for p in pos[1:]]
            if tag == "I":
                m = int(kw["m"]) if "m" in kw else rest[0]
                q = int(kw["q"]) if "q" in kw else rest[1]
                fid = FamilyId("I", (m, q))
            else:
                m = int(kw["m"]) if "m" in kw else rest[0]
                fid = FamilyId(tag, (m,))
            return exception_graph(fid)
        if fam == "MULTI":
            return multipartite(int(p) for p in pos)
        if fam == "KNMINUSKM":
            return kn_minus_matching(num("n"), num("k", 1))
        if fam == "PATH_SQ":
            return path_square(num("n"))
        if fam == "CYCLE_SQ":
            return cycle_square(num("n"))
        if fam == "POSA":
            return posa(num("t"))
    except (IndexError, KeyError) as exc:
        raise FamilySpecError(f"missing parameter for {fam}: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, FamilySpecError):
            raise
        raise FamilySpecError(str(exc)) from None
    raise FamilySpecError(f"unknown family {head!r}")
