"""Shared independent oracles: pure-Python reimplementations used to check
the library's numpy-backed paths, plus small deterministic generators.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

import numpy as np
import pytest

from cayleydrg.graphs import Graph


def srg_oracle(g: Graph):
    """O(v^2 k) common-neighbor counting with sets; no linear algebra."""
    n = g.n
    nbrs = [set(np.where(g.adj[v])[0].tolist()) for v in range(n)]
    degs = {len(s) for s in nbrs}
    if len(degs) != 1:
        return None
    k = degs.pop()
    if k in (0, n - 1):
        return None
    lams, mus = set(), set()
    for u in range(n):
        for v in range(u + 1, n):
            c = len(nbrs[u] & nbrs[v])
            (lams if v in nbrs[u] else mus).add(c)
    if len(lams) != 1 or len(mus) != 1 or 0 in mus:
        return None
    return (n, k, lams.pop(), mus.pop())


def bfs_oracle(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for v in np.where(g.adj[u])[0]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(int(v))
    return dist


def intersection_array_oracle(g: Graph):
    """Plain BFS + set-intersection counts from every base vertex."""
    n = g.n
    nbrs = [set(np.where(g.adj[v])[0].tolist()) for v in range(n)]
    dist = [bfs_oracle(g, s) for s in range(n)]
    if any(-1 in row for row in dist):
        return None
    d = max(max(row) for row in dist)
    bs, cs = [set() for _ in range(d + 1)], [set() for _ in range(d + 1)]
    for x in range(n):
        at = [set() for _ in range(d + 1)]
        for y in range(n):
            at[dist[x][y]].add(y)
        for i in range(d + 1):
            for y in at[i]:
                if i < d:
                    bs[i].add(len(nbrs[y] & at[i + 1]))
                if i > 0:
                    cs[i].add(len(nbrs[y] & at[i - 1]))
    b, c = [], []
    for i in range(d):
        if len(bs[i]) != 1:
            return None
        b.append(bs[i].pop())
    for i in range(1, d + 1):
        if len(cs[i]) != 1:
            return None
        c.append(cs[i].pop())
    return tuple(b), tuple(c)


def brute_force_aut_order(g: Graph) -> int:
    """All n! permutations; usable up to n = 8 in tests."""
    n = g.n
    count = 0
    adj = g.adj
    for p in itertools.permutations(range(n)):
        ok = True
        for u in range(n):
            for v in range(u + 1, n):
                if adj[u, v] != adj[p[u], p[v]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n:
        return False
    n = g1.n
    for p in itertools.permutations(range(n)):
        if all(
            g1.adj[u, v] == g2.adj[p[u], p[v]]
            for u in range(n)
            for v in range(u + 1, n)
        ):
            return True
    return False


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u, v] = adj[v, u] = True
    return Graph(adj)


def random_regular_connected(n: int, d: int, rng: random.Random, tries: int = 200) -> Graph:
    """Pairing-model d-regular graph, retried until simple and connected."""
    assert n * d % 2 == 0
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        adj = np.zeros((n, n), dtype=bool)
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or adj[u, v]:
                ok = False
                break
            adj[u, v] = adj[v, u] = True
        if not ok:
            continue
        g = Graph(adj)
        if -1 not in bfs_oracle(g, 0):
            return g
    raise RuntimeError(f"no connected {d}-regular graph on {n} vertices found")


@pytest.fixture
def rng():
    return random.Random(20240831)
