"""Simple undirected graphs on vertices 0..n-1 with bitset adjacency rows.

Vertex sets are plain ``int`` bitsets throughout the package: bit ``v`` set
means vertex ``v`` is a member.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph input (bad graph6, bad edge list, bad endpoints)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit indices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphFormatError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphFormatError(f"row {v} has bits beyond n={self.n}")
            if row >> v & 1:
                raise GraphFormatError(f"self-loop at {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphFormatError(f"asymmetric adjacency {v}-{w}")

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> Graph:
        # Skips validation; only for rows built by this package.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    # -- basic queries -------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_complete(self) -> bool:
        full = self.vertex_mask
        return all(row | (1 << v) == full for v, row in enumerate(self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, g6={to_graph6(self)!r})"


# -- construction ------------------------------------------------------


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphFormatError("negative vertex count")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphFormatError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(r: int) -> Graph:
    """K_{1,r} with the centre labelled 0."""
    return from_edge_list(r + 1, [(0, i) for i in range(1, r + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    n = sum(parts)
    full = (1 << n) - 1
    adj = [0] * n
    start = 0
    for size in parts:
        block = ((1 << size) - 1) << start
        for v in range(start, start + size):
            adj[v] = full & ~block
        start += size
    return Graph._trusted(n, adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in bits(g.adj[v]):
            row |= 1 << perm[w]
        adj[perm[v]] = row
    return Graph._trusted(g.n, adj)


# -- algebra -----------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph._trusted(g.n + h.n, list(g.adj) + [row << shift for row in h.adj])


def join(g: Graph, h: Graph) -> Graph:
    shift = g.n
    g_block = g.vertex_mask
    h_block = h.vertex_mask << shift
    adj = [row | h_block for row in g.adj] + [(row << shift) | g_block for row in h.adj]
    return Graph._trusted(g.n + h.n, adj)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def power(g: Graph, k: int) -> Graph:
    """Edge uv present iff 1 <= dist(u, v) <= k."""
    if k < 1:
        raise ValueError("power requires k >= 1")
    adj = []
    for v in range(g.n):
        reach = 1 << v
        frontier = reach
        for _ in range(k):
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~reach
            if not frontier:
                break
            reach |= frontier
        adj.append(reach & ~(1 << v))
    return Graph._trusted(g.n, adj)


def induced(g: Graph, vertices: int | Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on a vertex set, relabelled 0..k-1 in increasing order.

    Returns the subgraph and ``labels`` with ``labels[i]`` the host vertex of new vertex ``i``.
    """
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if mask & ~g.vertex_mask:
        raise ValueError("vertex set is not a subset of the host")
    labels = list(bits(mask))
    index = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        row = 0
        for w in bits(g.adj[v] & mask):
            row |= 1 << index[w]
        adj.append(row)
    return Graph._trusted(len(labels), adj), labels


# -- connectivity ------------------------------------------------------


def reach_from(g: Graph, v: int, allowed: int) -> int:
    """Bitset of vertices reachable from ``v`` using only vertices in ``allowed``."""
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, allowed: int | None = None) -> list[int]:
    """Connected components of ``g[allowed]`` as bitsets, ordered by least vertex."""
    rest = g.vertex_mask if allowed is None else allowed
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = reach_from(g, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph, allowed: int | None = None) -> bool:
    rest = g.vertex_mask if allowed is None else allowed
    if not rest:
        return True
    v = (rest & -rest).bit_length() - 1
    return reach_from(g, v, rest) == rest


def separates(g: Graph, cut: int) -> bool:
    """True iff deleting ``cut`` leaves a disconnected graph."""
    return not is_connected(g, g.vertex_mask & ~cut)


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent), stopping at ``cap``.

    Unit-capacity augmenting paths on the vertex-split network: node 2v is v_in,
    2v+1 is v_out, with an arc v_in -> v_out of capacity 1 for every inner vertex.
    """
    # flow[(a, b)] = units pushed along arc a->b; residual derived on the fly
    flow: dict[tuple[int, int], int] = {}

    def residual_arcs(node: int) -> Iterator[int]:
        v, side = divmod(node, 2)
        if side == 0:
            # v_in -> v_out (cap 1, or unbounded for the terminals)
            out = 2 * v + 1
            if v in (s, t) or flow.get((node, out), 0) < 1:
                yield out
            # reverse of u_out -> v_in
            for u in bits(g.adj[v]):
                if flow.get((2 * u + 1, node), 0) > 0:
                    yield 2 * u + 1
        else:
            for w in bits(g.adj[v]):
                yield 2 * w
            inn = 2 * v
            if flow.get((inn, node), 0) > 0:
                yield inn

    source, sink = 2 * s + 1, 2 * t
    total = 0
    while total < cap:
        parent = {source: -1}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in residual_arcs(a):
                if b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] != -1:
            a = parent[b]
            if flow.get((b, a), 0) > 0:
                flow[(b, a)] -= 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        total += 1
    return total


def vertex_connectivity(g: Graph, cap: int | None = None) -> int:
    """kappa(G), with n-1 for complete graphs; returns ``min(kappa, cap)`` when ``cap`` is given."""
    if g.n == 0:
        return 0
    if g.is_complete():
        best = g.n - 1
        return best if cap is None else min(best, cap)
    best = g.min_degree()
    if cap is not None:
        best = min(best, cap)
    i = 0
    while i <= best and i < g.n:
        for j in range(i + 1, g.n):
            if best == 0:
                return 0
            if not g.has_edge(i, j):
                best = min(best, _local_connectivity(g, i, j, best))
        i += 1
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    return g.n > k and vertex_connectivity(g, cap=k) >= k


def minimum_vertex_cut(g: Graph) -> int:
    """Lexicographically least minimum separating set (as a bitset).

    Raises ``ValueError`` for complete graphs, which have no separating set.
    """
    if g.is_complete():
        raise ValueError("complete graphs have no vertex cut")
    k = vertex_connectivity(g)
    for combo in combinations(range(g.n), k):
        cut = mask_of(combo)
        if separates(g, cut):
            return cut
    raise AssertionError("no cut of size kappa found")  # pragma: no cover


# -- distances and cycles ------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u]):
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def girth(g: Graph, witness: bool = False):
    """Length of a shortest cycle (``math.inf`` for forests).

    With ``witness=True`` returns ``(length, cycle_vertices)``; the cycle is
    None for forests.
    """
    best = math.inf
    best_cycle: list[int] = []
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if length < best:
                        best = length
                        if witness:
                            best_cycle = _splice_paths(parent, u, w)
    if witness:
        return best, (best_cycle if best_cycle else None)
    return best


def _splice_paths(parent: dict[int, int], u: int, w: int) -> list[int]:
    left = [u]
    while parent[left[-1]] != -1:
        left.append(parent[left[-1]])
    right = [w]
    while parent[right[-1]] != -1:
        right.append(parent[right[-1]])
    # drop the shared tail (at least the root)
    while len(left) > 1 and len(right) > 1 and left[-2] == right[-2]:
        left.pop()
        right.pop()
    return left[::-1] + right[:-1]


# -- I/O ---------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise GraphFormatError("graph6 supports at most 258047 vertices here")


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            raise GraphFormatError("graph6 8-byte size form is not supported")
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} chars, expected {(need + 5) // 6} for n={n}")
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    if need % 6 and body[-1] & ((1 << (6 - need % 6)) - 1):
        raise GraphFormatError("nonzero padding bits in graph6")
    return Graph._trusted(n, adj)


def to_edge_list_text(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphFormatError("edge list header must be 'n m'")
    n, m = header
    if len(pairs) != m or any(len(p) != 2 for p in pairs):
        raise GraphFormatError(f"edge list declares {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)  # type: ignore[arg-type]
