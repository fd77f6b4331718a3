"""Shared fixtures and the independent oracles used across the test suite.

The oracles here deliberately use different algorithms from the package:
subset enumeration for clique counts, and contraction recursion for minor
containment, so agreement is a two-route check rather than a tautology.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from minorclique.graphs import Graph, bits, clique_number


def naive_count_k_cliques(g: Graph, k: int) -> int:
    """Brute force over all C(n, k) vertex subsets."""
    if k == 0:
        return 1
    total = 0
    for sub in combinations(range(g.n), k):
        if all(g.adj[u] >> v & 1 for u, v in combinations(sub, 2)):
            total += 1
    return total


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Merge v into u (simple graph: parallel edges collapse, loops drop)."""
    keep = [x for x in range(g.n) if x != v]
    pos = {x: i for i, x in enumerate(keep)}
    rows = [0] * (g.n - 1)
    for x in keep:
        acc = 0
        for y in bits(g.adj[x]):
            y = u if y == v else y
            if y != x:
                acc |= 1 << pos[y]
        rows[pos[x]] = acc
    merged = rows[pos[u]]
    for y in bits(g.adj[v]):
        if y != u:
            merged |= 1 << pos[y]
    rows[pos[u]] = merged
    for y in bits(merged):
        rows[y] |= 1 << pos[u]
    return Graph(g.n - 1, rows)


def minor_oracle(g: Graph, m: int, _memo=None) -> bool:
    """K_m minor containment by contraction recursion.

    K_m is a minor of g iff g has a K_m subgraph or some single edge
    contraction produces a graph with a K_m minor (a model with a
    non-singleton branch set survives contracting an edge inside it).
    """
    if _memo is None:
        _memo = {}
    if m <= 0:
        return True
    if g.n < m:
        return False
    key = (g.adj, m)
    if key in _memo:
        return _memo[key]
    res = clique_number(g) >= m
    if not res:
        for u in range(g.n):
            for off in bits(g.adj[u] >> (u + 1)):
                if minor_oracle(contract_edge(g, u, u + 1 + off), m, _memo):
                    res = True
                    break
            if res:
                break
    _memo[key] = res
    return res


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def all_graphs(n: int):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        c = code
        while c:
            low = c & -c
            i, j = pairs[low.bit_length() - 1]
            c ^= low
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        yield Graph(n, rows)


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
