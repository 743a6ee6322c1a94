"""Random instance generators for tests and the `generate` CLI verb."""
from __future__ import annotations

import random

from .graph import Graph


def _relabel(n, edges, rng):
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(range(n), [(perm[u], perm[v]) for u, v in edges])


def random_chordal(n: int, rng: random.Random, density: float = 0.6, connected: bool = False) -> Graph:
    """Chordal graph built backwards along a perfect elimination ordering.

    Vertex i is attached to a random clique among vertices i+1..n-1, so the
    order 0..n-1 is a perfect elimination ordering.
    """
    adj = {v: set() for v in range(n)}
    for i in range(n - 2, -1, -1):
        if not connected and rng.random() < 0.1:
            continue
        later = list(range(i + 1, n))
        u = rng.choice(later)
        clique = {u}
        cand = sorted(adj[u])
        rng.shuffle(cand)
        for x in cand:
            if rng.random() < density and all(x in adj[y] for y in clique):
                clique.add(x)
        for y in clique:
            adj[i].add(y)
            adj[y].add(i)
    edges = [(u, v) for u in adj for v in adj[u] if u < v]
    return _relabel(n, edges, rng)


def delete_random_edges(G: Graph, k: int, rng: random.Random) -> Graph:
    edges = G.edges()
    drop = set(rng.sample(edges, min(k, len(edges))))
    return Graph(G.vertices, [e for e in edges if e not in drop])


def random_almost_chordal(n: int, k: int, rng: random.Random, density: float = 0.8, connected: bool = True) -> Graph:
    """A chordal graph minus j <= k edges, with fill-in j whenever achievable.

    Each deleted edge is chosen, among a few random tries, so that the exact
    fill-in grows by one; removing an edge never raises fill-in by more.
    """
    from .fillin import exact_fillin

    G = random_chordal(n, rng, density, connected)
    budget = rng.randint(min(1, k), k)
    cur = 0
    for _ in range(budget):
        edges = G.edges()
        if not edges:
            break
        tries = rng.sample(edges, min(len(edges), 12))
        for e in tries:
            H = Graph(G.vertices, [x for x in edges if x != e])
            if exact_fillin(H, cur) is None:
                G, cur = H, cur + 1
                break
    return G


def random_interval(n: int, rng: random.Random, span: int = 20, max_len: int = 6) -> Graph:
    iv = []
    for _ in range(n):
        a = rng.randint(0, span)
        iv.append((a, a + rng.randint(0, max_len)))
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if iv[i][0] <= iv[j][1] and iv[j][0] <= iv[i][1]]
    return Graph(range(n), edges)


def random_almost_interval(n: int, k: int, rng: random.Random) -> Graph:
    """An interval graph minus at most k edges: interval completion at most k."""
    return delete_random_edges(random_interval(n, rng), rng.randint(0, k), rng)


def random_split(n: int, rng: random.Random, p: float = 0.4) -> Graph:
    ksize = rng.randint(1, max(1, n - 1))
    K = list(range(ksize))
    I = list(range(ksize, n))
    edges = [(u, v) for i, u in enumerate(K) for v in K[i + 1:]]
    edges += [(u, v) for u in K for v in I if rng.random() < p]
    return _relabel(n, edges, rng)


def random_almost_split(n: int, k: int, rng: random.Random) -> Graph:
    """A split graph minus at most k edges: split completion at most k."""
    return delete_random_edges(random_split(n, rng), rng.randint(0, k), rng)


def random_weights(G: Graph, rng: random.Random, lo: int = 1, hi: int = 10) -> dict:
    return {v: rng.randint(lo, hi) for v in G}


FAMILIES = {
    "chordal": lambda n, k, rng: random_chordal(n, rng),
    "almost-chordal": random_almost_chordal,
    "almost-interval": random_almost_interval,
    "almost-split": random_almost_split,
}
