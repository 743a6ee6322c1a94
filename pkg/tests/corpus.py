"""Seeded random instance corpora shared by the test modules."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from almost_chordal.fillin import exact_fillin, kalmost_nice_decomposition
from almost_chordal.generators import (
    random_almost_chordal,
    random_almost_interval,
    random_almost_split,
    random_weights,
)
from almost_chordal.graph import Graph


def gnp(n, p, rng):
    return Graph(range(n), [e for e in combinations(range(n), 2) if rng.random() < p])


def fillin_of(G):
    return exact_fillin(G, len(G.non_edges())).size


@lru_cache(maxsize=None)
def dp_corpus(count=60, seed=2024):
    """(G, w, T, A) with n in 5..12, fill-in <= 3 and weights in [1, 10]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        G = random_almost_chordal(rng.randint(5, 12), 3, rng)
        w = random_weights(G, rng, 1, 10)
        T, A = kalmost_nice_decomposition(G, 3)
        out.append((G, w, T, A))
    return tuple(out)


@lru_cache(maxsize=None)
def small_random_graphs(count=100, seed=8, n_lo=5, n_hi=8):
    rng = random.Random(seed)
    return tuple(gnp(rng.randint(n_lo, n_hi), rng.choice((0.4, 0.5, 0.6)), rng) for _ in range(count))


@lru_cache(maxsize=None)
def split_corpus(count=40, seed=77):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.randint(1, 3)
        out.append((random_almost_split(rng.randint(4, 12), k, rng), k))
    return tuple(out)


@lru_cache(maxsize=None)
def interval_corpus(count=40, seed=91):
    """Half near-interval graphs, half graphs with fill-in 1..3 from the chordal generator."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(6, 12)
        if i % 2:
            G = random_almost_interval(n, 3, rng)
        else:
            G = random_almost_chordal(n, 3, rng, density=0.5)
        out.append((G, 3))
    return tuple(out)


@lru_cache(maxsize=None)
def clique_corpus(count=40, seed=5):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        G = random_almost_chordal(rng.randint(5, 12), 3, rng)
        out.append((G, random_weights(G, rng, 1, 10), fillin_of(G)))
    return tuple(out)
