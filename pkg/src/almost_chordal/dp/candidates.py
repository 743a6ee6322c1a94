"""Candidate projections of d-colourable induced subgraphs onto a bag."""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..graph import Graph, complement, enumerate_cliques, induced_subgraph


def candidate_bound(d: int, k: int) -> int:
    """floor((3d + sqrt(d^2 + 8dk)) / 2): the largest projection onto a bag of deficiency k."""
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    # integer-safe floor of the square root
    return (3 * d + math.isqrt(d * d + 8 * d * k)) // 2


@dataclass(frozen=True)
class CandidateFamily:
    bag: frozenset
    d: int
    deficiency: int
    bound: int
    sets: tuple  # frozensets ordered by (size, sorted members)
    partitions: dict  # set -> one partition into <= d independent sets

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.partitions


def enumerate_bag_candidates(G: Graph, bag, d: int) -> CandidateFamily:
    """Unions of at most d cliques of the complement of G[bag].

    A set is such a union exactly when it splits into d independent sets of
    G, so the family is the set of all d-colourable subsets of the bag, and
    in particular contains every projection of a d-colourable induced
    subgraph.  Cliques of the complement come from the degeneracy route.
    """
    bag = frozenset(bag)
    H = induced_subgraph(G, bag)
    comp = complement(H)
    cliques = enumerate_cliques(comp)
    found: dict = {frozenset(): ()}
    layer = {frozenset(): ()}
    for _ in range(d):
        nxt = {}
        for s, parts in layer.items():
            for q in cliques:
                if not q or (q & s):
                    continue
                u = s | q
                if u in found or u in nxt:
                    continue
                nxt[u] = parts + (q,)
        found.update(nxt)
        layer = nxt
    k = comp.m
    bound = candidate_bound(d, k)
    sets = tuple(sorted(found, key=lambda s: (len(s), sorted(s))))
    return CandidateFamily(bag, d, k, bound, sets, found)
