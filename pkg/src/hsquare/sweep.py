"""Vectorised access to all labelled graphs on n <= 7 vertices.

A labelled graph is an integer code whose bit ``i`` is the ``i``-th vertex pair
in graph6 order ((0,1), (0,2), (1,2), (0,3), ...). Masks over the whole code
space are numpy boolean arrays; survivors are turned into :class:`Graph`
values for the library checks.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Iterator

import numpy as np

from .graph import Graph
from .patterns import Pattern

MAX_FULL_SWEEP = 7
LONG_RUN_MAX = 8


class SweepTooLarge(ValueError):
    pass


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def graph_from_code(n: int, code: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    pairs = pairs or vertex_pairs(n)
    adj = [0] * n
    i = 0
    while code:
        if code & 1:
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        code >>= 1
        i += 1
    return Graph._trusted(n, adj)


def code_of(g: Graph) -> int:
    code = 0
    for i, (u, v) in enumerate(vertex_pairs(g.n)):
        if g.adj[u] >> v & 1:
            code |= 1 << i
    return code


def _pattern_code_table(pattern: Pattern) -> np.ndarray:
    """Boolean table over local codes of a k-vertex set: True iff the code induces the pattern."""
    p = pattern.graph
    k = p.n
    local = vertex_pairs(k)
    index = {pr: i for i, pr in enumerate(local)}
    table = np.zeros(1 << len(local), dtype=bool)
    for perm in permutations(range(k)):
        code = 0
        for a, b in p.edges():
            x, y = sorted((perm[a], perm[b]))
            code |= 1 << index[(x, y)]
        table[code] = True
    return table


class LabeledSpace:
    """All 2^(n choose 2) labelled graphs on ``n`` vertices, or a chunk of them."""

    def __init__(self, n: int, codes: np.ndarray | None = None, long_run: bool = False):
        limit = LONG_RUN_MAX if long_run else MAX_FULL_SWEEP
        if n > limit:
            raise SweepTooLarge(f"full labelled sweep is capped at n = {limit}")
        self.n = n
        self.pairs = vertex_pairs(n)
        self.pair_index = {pr: i for i, pr in enumerate(self.pairs)}
        if codes is None:
            codes = np.arange(1 << len(self.pairs), dtype=np.uint32)
        self.codes = codes

    def __len__(self) -> int:
        return len(self.codes)

    def edge(self, u: int, v: int) -> np.ndarray:
        if u > v:
            u, v = v, u
        i = self.pair_index[(u, v)]
        return ((self.codes >> np.uint32(i)) & np.uint32(1)).astype(np.uint8)

    @cached_property
    def _edges(self) -> dict[tuple[int, int], np.ndarray]:
        return {pr: self.edge(*pr) for pr in self.pairs}

    def has_edge(self, u: int, v: int) -> np.ndarray:
        return self._edges[(min(u, v), max(u, v))]

    @cached_property
    def degrees(self) -> list[np.ndarray]:
        out = []
        for v in range(self.n):
            d = np.zeros(len(self.codes), dtype=np.uint8)
            for w in range(self.n):
                if w != v:
                    d += self.has_edge(v, w)
            out.append(d)
        return out

    def min_degree_at_least(self, k: int) -> np.ndarray:
        mask = np.ones(len(self.codes), dtype=bool)
        for d in self.degrees:
            mask &= d >= k
        return mask

    def max_degree_at_least(self, k: int) -> np.ndarray:
        mask = np.zeros(len(self.codes), dtype=bool)
        for d in self.degrees:
            mask |= d >= k
        return mask

    @cached_property
    def rows(self) -> list[np.ndarray]:
        """Adjacency rows as bitsets (uint8 suffices for n <= 8)."""
        out = []
        for v in range(self.n):
            r = np.zeros(len(self.codes), dtype=np.uint16)
            for w in range(self.n):
                if w != v:
                    r |= self.has_edge(v, w).astype(np.uint16) << np.uint16(w)
            out.append(r)
        return out

    def connected(self) -> np.ndarray:
        if self.n == 0:
            return np.ones(len(self.codes), dtype=bool)
        reach = np.ones(len(self.codes), dtype=np.uint16)
        for _ in range(self.n):
            nxt = reach.copy()
            for v in range(self.n):
                on = (reach >> np.uint16(v)) & np.uint16(1)
                nxt |= np.where(on.astype(bool), self.rows[v], np.uint16(0))
            reach = nxt
        return reach == np.uint16((1 << self.n) - 1)

    def local_code(self, subset: tuple[int, ...]) -> np.ndarray:
        local = vertex_pairs(len(subset))
        code = np.zeros(len(self.codes), dtype=np.uint16)
        for i, (a, b) in enumerate(local):
            code |= self.has_edge(subset[a], subset[b]).astype(np.uint16) << np.uint16(i)
        return code

    def contains(self, pattern: Pattern) -> np.ndarray:
        """True where the graph has an induced copy of ``pattern``."""
        k = pattern.graph.n
        table = _pattern_code_table(pattern)
        hit = np.zeros(len(self.codes), dtype=bool)
        for subset in combinations(range(self.n), k):
            hit |= table[self.local_code(subset)]
        return hit

    def free_of(self, patterns: Iterable[Pattern]) -> np.ndarray:
        mask = np.ones(len(self.codes), dtype=bool)
        for p in patterns:
            mask &= ~self.contains(p)
        return mask

    def triangle_vertex_of_degree(self, k: int) -> np.ndarray:
        """True where some vertex of degree >= k lies on a triangle."""
        on_tri = [np.zeros(len(self.codes), dtype=bool) for _ in range(self.n)]
        for a, b, c in combinations(range(self.n), 3):
            t = (self.has_edge(a, b) & self.has_edge(b, c) & self.has_edge(a, c)).astype(bool)
            for v in (a, b, c):
                on_tri[v] |= t
        mask = np.zeros(len(self.codes), dtype=bool)
        for v in range(self.n):
            mask |= on_tri[v] & (self.degrees[v] >= k)
        return mask

    def naive_h2(self) -> np.ndarray:
        """H^2 by brute force over every cyclic order (n >= 3): an order needs
        all 2n pairs at cyclic distance 1 or 2 present."""
        n = self.n
        has = np.zeros(len(self.codes), dtype=bool)
        if n < 3:
            return has
        seen = set()
        for rest in permutations(range(1, n)):
            order = (0,) + rest
            req = 0
            for i in range(n):
                for step in (1, 2):
                    u, v = sorted((order[i], order[(i + step) % n]))
                    req |= 1 << self.pair_index[(u, v)]
            if req in seen:
                continue
            seen.add(req)
            r = np.uint32(req)
            has |= (self.codes & r) == r
        return has

    def graphs(self, mask: np.ndarray | None = None) -> Iterator[Graph]:
        codes = self.codes if mask is None else self.codes[mask]
        for c in codes.tolist():
            yield graph_from_code(self.n, c, self.pairs)

    def restrict(self, mask: np.ndarray) -> LabeledSpace:
        return LabeledSpace(self.n, self.codes[mask], long_run=True)
