"""Chordal modulators (exact and heuristic) and k-almost chordal decompositions."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chordal import clique_tree, find_chordless_cycle, is_chordal, triangulation_edges
from .decomposition import NiceTreeDecomposition, bag_deficiency, make_nice
from .graph import Graph, apply_modulator, pair

__all__ = [
    "Modulator",
    "exact_fillin",
    "minimal_triangulation",
    "approx_fillin",
    "kalmost_nice_decomposition",
    "bag_deficiency",
    "polygon_triangulations",
]


@dataclass(frozen=True)
class Modulator:
    pairs: frozenset
    target: str = "chordal"

    @property
    def size(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list:
        return sorted(self.pairs)

    def endpoints(self) -> frozenset:
        return frozenset(v for p in self.pairs for v in p)

    def apply(self, G: Graph) -> Graph:
        return apply_modulator(G, self.pairs, "add")


def polygon_triangulations(cycle) -> list[frozenset]:
    """All triangulations of the polygon spanned by `cycle` (each a set of chords).

    These are exactly the minimal triangulations of a chordless cycle.
    """
    cyc = tuple(cycle)
    memo: dict = {}

    def tri(i, j):
        # triangulations of the sub-polygon cyc[i..j] with edge (i, j) present
        if j - i < 2:
            return [frozenset()]
        if (i, j) in memo:
            return memo[(i, j)]
        out = []
        for m in range(i + 1, j):
            extra = set()
            if m - i >= 2:
                extra.add(pair(cyc[i], cyc[m]))
            if j - m >= 2:
                extra.add(pair(cyc[m], cyc[j]))
            for a in tri(i, m):
                for b in tri(m, j):
                    out.append(frozenset(extra) | a | b)
        memo[(i, j)] = out
        return out

    res = sorted(set(tri(0, len(cyc) - 1)), key=lambda s: sorted(s))
    return res


def _search(G: Graph, budget: int, failed: set) -> frozenset | None:
    cyc = find_chordless_cycle(G, shortest=True)
    if cyc is None:
        return frozenset()
    need = len(cyc) - 3
    if need > budget:
        return None
    key = (G, budget)
    if key in failed:
        return None
    for chords in polygon_triangulations(cyc):
        H = apply_modulator(G, chords, "add")
        rest = _search(H, budget - need, failed)
        if rest is not None:
            return chords | rest
    failed.add(key)
    return None


def exact_fillin(G: Graph, k: int) -> Modulator | None:
    """Minimum chordal modulator if fill-in(G) <= k, else None.

    Bounded search tree: a shortest chordless cycle of length l needs l-3
    chords forming one of its polygon triangulations.  Budgets are tried in
    increasing order so the first success is minimum.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    failed: set = set()
    for b in range(0, k + 1):
        res = _search(G, b, failed)
        if res is not None:
            return Modulator(frozenset(res))
    return None


def _min_fill_order(G: Graph) -> list:
    """Greedy minimum-fill elimination ordering (ties: smallest label)."""
    adj = {v: set(G.neighbors(v)) for v in G}
    alive = set(G.vertices)
    order = []
    while alive:
        best = None
        for v in sorted(alive):
            nb = adj[v] & alive
            fill = sum(1 for a, b in combinations(nb, 2) if b not in adj[a])
            if best is None or fill < best[0]:
                best = (fill, v)
                if fill == 0:
                    break
        v = best[1]
        nb = adj[v] & alive
        for a, b in combinations(nb, 2):
            adj[a].add(b)
            adj[b].add(a)
        alive.discard(v)
        order.append(v)
    return order


def minimal_triangulation(G: Graph) -> Modulator:
    """Inclusion-minimal chordal modulator.

    Triangulate with a minimum-fill elimination game, then drop fill pairs
    one at a time while the graph stays chordal.  A triangulation is minimal
    exactly when no single fill pair can be removed, so the loop stops at a
    minimal one.
    """
    fill = set(triangulation_edges(G, _min_fill_order(G)))
    changed = True
    while changed:
        changed = False
        for p in sorted(fill):
            trial = fill - {p}
            if is_chordal(apply_modulator(G, trial, "add")):
                fill = trial
                changed = True
    return Modulator(frozenset(fill))


def approx_fillin(G: Graph, k: int) -> Modulator | None:
    """Modulator of size at most 8k^2, or None when fill-in(G) > k.

    The heuristic answer is kept only when it already fits in k; otherwise
    the exact search decides, so None is always a correct refusal.
    """
    heur = minimal_triangulation(G)
    if heur.size <= k:
        return heur
    return exact_fillin(G, k)


def nice_decomposition_from_modulator(G: Graph, A: Modulator) -> NiceTreeDecomposition:
    T = clique_tree(A.apply(G))
    return make_nice(T, G)


def kalmost_nice_decomposition(G: Graph, k: int | None = None) -> tuple[NiceTreeDecomposition, Modulator] | None:
    """Nice decomposition whose bags each miss at most |A| <= k edges of G.

    With k=None the heuristic modulator is used without a budget.
    """
    A = minimal_triangulation(G) if k is None else approx_fillin(G, k)
    if A is None:
        return None
    return nice_decomposition_from_modulator(G, A), A
