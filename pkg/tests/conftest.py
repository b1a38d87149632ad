"""Shared strategies and brute-force oracles that avoid the library's own algorithms."""

from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from hsquare.graph import Graph, from_edge_list


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8, p: float | None = None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if p is None:
        chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        chosen = [draw(st.floats(0, 1)) < p for _ in pairs]
    return from_edge_list(n, [pr for pr, on in zip(pairs, chosen) if on])


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def brute_connected(n: int, edges: set[frozenset[int]], alive: set[int]) -> bool:
    if len(alive) <= 1:
        return True
    start = min(alive)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in alive:
            if w not in seen and frozenset((u, w)) in edges:
                seen.add(w)
                stack.append(w)
    return seen == alive


def brute_kappa(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects G (n - 1 if none)."""
    es = edge_set(g)
    vs = set(range(g.n))
    for k in range(g.n - 1):
        for cut in combinations(range(g.n), k):
            if not brute_connected(g.n, es, vs - set(cut)):
                return k
    return max(g.n - 1, 0)


def brute_induced(g: Graph, p: Graph) -> bool:
    pe = edge_set(p)
    ge = edge_set(g)
    for sub in combinations(range(g.n), p.n):
        for perm in permutations(sub):
            if all((frozenset((perm[a], perm[b])) in ge) == (frozenset((a, b)) in pe) for a, b in combinations(range(p.n), 2)):
                return True
    return False


def brute_h2(g: Graph) -> bool:
    if g.n < 3:
        return False
    es = edge_set(g)
    for rest in permutations(range(1, g.n)):
        order = (0,) + rest
        if all(
            frozenset((order[i], order[(i + s) % g.n])) in es for i in range(g.n) for s in (1, 2)
        ):
            return True
    return False


def is_h2_order(g: Graph, order) -> bool:
    n = len(order)
    es = edge_set(g)
    return sorted(order) == list(range(g.n)) and all(
        frozenset((order[i], order[(i + s) % n])) in es for i in range(n) for s in (1, 2)
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
