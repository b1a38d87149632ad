"""Induced detection of the small forbidden patterns and structure recognisers.

Embeddings are tuples ``emb`` with ``emb[i]`` the host vertex playing pattern
vertex ``i``; the search is deterministic and returns the lexicographically
least embedding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import (
    Graph,
    bits,
    complement,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    is_connected,
    path_graph,
    star_graph,
)


class PreconditionError(ValueError):
    """Input is outside the class an operation is defined on."""


class StructureViolation(AssertionError):
    """A structural statement that should hold on valid input failed (a counterexample)."""


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph = field(repr=False)

    def __str__(self) -> str:
        return self.name


P3 = Pattern("P3", path_graph(3))
P4 = Pattern("P4", path_graph(4))
C4 = Pattern("C4", cycle_graph(4))
K3 = Pattern("K3", complete_graph(3))
K4 = Pattern("K4", complete_graph(4))
K4_MINUS = Pattern("K4-", from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]))
# centre 0, triangle 0-1-2, pendant 3 on the centre
Z1 = Pattern("Z1", from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2)]))
K2_K1 = Pattern("K2+K1", disjoint_union(complete_graph(2), complete_graph(1)))


@lru_cache(maxsize=None)
def star(r: int) -> Pattern:
    if r < 2:
        raise ValueError("K_{1,r} patterns need r >= 2")
    return Pattern(f"K1,{r}", star_graph(r))


CLAW = star(3)

_BY_NAME = {p.name.lower(): p for p in (P3, P4, C4, K3, K4, K4_MINUS, Z1, K2_K1)}
_ALIASES = {"claw": "k1,3", "k13": "k1,3", "k4minus": "k4-", "diamond": "k4-", "z1": "z1", "k2k1": "k2+k1"}


def pattern_by_name(name: str) -> Pattern:
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key in _BY_NAME:
        return _BY_NAME[key]
    if key.startswith("k1,"):
        return star(int(key[3:]))
    if key.startswith("k1") and key[2:].isdigit():
        return star(int(key[2:]))
    raise KeyError(f"unknown pattern {name!r}")


# -- induced search ------------------------------------------------------


def find_induced(g: Graph, pattern: Pattern | Graph) -> tuple[int, ...] | None:
    """Lexicographically least induced embedding of ``pattern`` into ``g``, or None."""
    p = pattern.graph if isinstance(pattern, Pattern) else pattern
    k = p.n
    if k == 0:
        return ()
    if k > g.n:
        return None
    pdeg = p.degrees()
    gdeg = g.degrees()
    full = g.vertex_mask
    # degree filter: an induced copy needs host degree >= pattern degree
    allowed = []
    for i in range(k):
        m = 0
        for v in range(g.n):
            if gdeg[v] >= pdeg[i]:
                m |= 1 << v
        allowed.append(m)

    emb: list[int] = []

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = allowed[i] & ~used
        for j in range(i):
            host = emb[j]
            if p.adj[i] >> j & 1:
                cand &= g.adj[host]
            else:
                cand &= full & ~g.adj[host]
        for v in bits(cand):
            emb.append(v)
            if extend(i + 1, used | 1 << v):
                return True
            emb.pop()
        return False

    return tuple(emb) if extend(0, 0) else None


def find_violation(g: Graph, patterns: Iterable[Pattern]) -> tuple[Pattern, tuple[int, ...]] | None:
    """First pattern (in the given order) that embeds, with its embedding."""
    for pat in patterns:
        emb = find_induced(g, pat)
        if emb is not None:
            return pat, emb
    return None


def is_free(g: Graph, patterns: Iterable[Pattern]) -> bool:
    return find_violation(g, patterns) is None


def contains_triangle(g: Graph) -> bool:
    for u in range(g.n):
        row = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(row):
            if g.adj[v] & row:
                return True
    return False


def triangle_vertices(g: Graph) -> int:
    """Bitset of vertices lying on at least one triangle."""
    out = 0
    for u in range(g.n):
        for v in bits(g.adj[u]):
            if g.adj[u] & g.adj[v]:
                out |= 1 << u
                break
    return out


def has_path_on_four(g: Graph, mask: int) -> bool:
    """True iff ``g[mask]`` contains a (not necessarily induced) path on 4 vertices."""
    for b in bits(mask):
        for c in bits(g.adj[b] & mask):
            # path a-b-c-d with a, d distinct outside {b, c}
            left = g.adj[b] & mask & ~(1 << c)
            right = g.adj[c] & mask & ~(1 << b)
            if left and right and (left | right).bit_count() >= 2:
                return True
    return False


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.adj[v] | 1 << v) & mask == mask for v in bits(mask))


def is_independent(g: Graph, mask: int) -> bool:
    return all(not g.adj[v] & mask for v in bits(mask))


# -- complete multipartite structure ---------------------------------------


@dataclass(frozen=True)
class PartitionStructure:
    """Parts of a complete multipartite decomposition, largest first.

    ``members[i]`` is the bitset of part ``i``; ``parts[i]`` its size.
    """

    members: tuple[int, ...]

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.members)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def assignment(self) -> dict[int, int]:
        return {v: i for i, m in enumerate(self.members) for v in bits(m)}

    def graph(self) -> Graph:
        """The complete multipartite graph on the original vertex labels."""
        n = max((m.bit_length() for m in self.members), default=0)
        full = (1 << n) - 1
        adj = [0] * n
        for m in self.members:
            for v in bits(m):
                adj[v] = full & ~m
        return Graph._trusted(n, adj)

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> PartitionStructure:
        members = []
        start = 0
        for s in sizes:
            if s < 1:
                raise ValueError("part sizes must be positive")
            members.append(((1 << s) - 1) << start)
            start += s
        return cls(tuple(members))


def multipartite_structure(g: Graph) -> PartitionStructure | None:
    """The complete multipartite partition of ``g`` if it is one, else None.

    Parts are the components of the complement; each must be independent in ``g``.
    """
    comps = components(complement(g))
    for comp in comps:
        if not is_independent(g, comp):
            return None
    comps.sort(key=lambda m: (-m.bit_count(), m & -m))
    return PartitionStructure(tuple(comps))


def z1_free_structure_check(g: Graph) -> PartitionStructure:
    """The complete multipartite structure forced on a connected Z1-free graph
    that has a degree->=3 vertex on a triangle.

    Raises PreconditionError when ``g`` is outside that class and StructureViolation
    if the structure is absent (which would be a counterexample).
    """
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    emb = find_induced(g, Z1)
    if emb is not None:
        raise PreconditionError(f"graph contains an induced Z1 at {emb}")
    tri = triangle_vertices(g)
    if not any(g.degree(v) >= 3 for v in bits(tri)):
        raise PreconditionError("no vertex of degree >= 3 lies on a triangle")
    ps = multipartite_structure(g)
    if ps is None:
        raise StructureViolation("connected Z1-free graph with a degree-3 triangle vertex is not complete multipartite")
    return ps


# -- exception families of 4-connected {claw, P4}-free graphs without an H^2 ---

TAGS = ("I", "II", "III", "IV")
_SMALL_SIDE = {"II": (2, 2), "III": (2, 3), "IV": (3, 3)}


@dataclass(frozen=True)
class FamilyId:
    """Family tag with parameters: ``("I", (m, q))`` or ``("II"|"III"|"IV", (m,))``."""

    tag: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.tag not in TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.tag == "I":
            if len(self.params) != 2:
                raise ValueError("family I takes (m, q)")
            m, q = self.params
            if m < 1 or q < 1 or m + q < 4:
                raise ValueError("family I needs m, q >= 1 and m + q >= 4")
        else:
            if len(self.params) != 1 or self.params[0] < 3:
                raise ValueError(f"family {self.tag} needs m >= 3")

    @property
    def n(self) -> int:
        if self.tag == "I":
            return 4 + sum(self.params)
        return sum(_SMALL_SIDE[self.tag]) + 1 + self.params[0]

    def operand_sizes(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Clique sizes of the two joined operands, in formula order."""
        if self.tag == "I":
            return (1, 3), (self.params[0], self.params[1])
        return _SMALL_SIDE[self.tag], (1, self.params[0])

    def label(self) -> str:
        if self.tag == "I":
            return f"I(m={self.params[0]},q={self.params[1]})"
        return f"{self.tag}(m={self.params[0]})"


@dataclass(frozen=True)
class FamilyDecomposition:
    """A graph recognised as ``(A1 u A2) + (B1 u B2)`` with cliques in formula order."""

    family: FamilyId
    first: tuple[int, int]
    second: tuple[int, int]


def _two_cliques(g: Graph, side: int) -> list[int] | None:
    comps = components(g, side)
    if len(comps) != 2 or not all(is_clique(g, c) for c in comps):
        return None
    return comps


def _read(first: list[int], second: list[int]) -> FamilyDecomposition | None:
    a = sorted(first, key=lambda c: (c.bit_count(), c & -c))
    sa = tuple(c.bit_count() for c in a)
    sb = [c.bit_count() for c in second]
    if sa == (1, 3) and sum(sb) >= 4:
        fam = FamilyId("I", (sb[0], sb[1]))
        return FamilyDecomposition(fam, (a[0], a[1]), (second[0], second[1]))
    b = sorted(second, key=lambda c: (c.bit_count(), c & -c))
    if b[0].bit_count() == 1 and b[1].bit_count() >= 3:
        for tag, sizes in _SMALL_SIDE.items():
            if sa == sizes:
                fam = FamilyId(tag, (b[1].bit_count(),))
                return FamilyDecomposition(fam, (a[0], a[1]), (b[0], b[1]))
    return None


def family_decomposition(g: Graph) -> FamilyDecomposition | None:
    """Structural match against families (i)-(iv).

    The graph must be the join of exactly two co-components, each a disjoint
    union of two cliques. Some graphs fit two families (e.g. (K1 u K3)+(K2 u K2)
    is also (K2 u K2)+(K1 u K3)); the reading whose first operand holds the
    least vertex label wins, then the lower tag.
    """
    co = components(complement(g))
    if len(co) != 2:
        return None
    x, y = co
    cx = _two_cliques(g, x)
    cy = _two_cliques(g, y)
    if cx is None or cy is None:
        return None
    return _read(cx, cy) or _read(cy, cx)


def exception_family_match(g: Graph) -> FamilyId | None:
    dec = family_decomposition(g)
    return None if dec is None else dec.family
