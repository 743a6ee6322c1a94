"""Exhaustive reference solvers.

Everything here works from problem definitions over bitmasks and shares no
code with the decomposition-based solvers, so a bug on one side cannot hide
a bug on the other.  Every entry point refuses graphs with more than
``MAX_N`` vertices.
"""
from __future__ import annotations

from itertools import combinations

from .errors import OracleLimitError, ParameterError
from .graph import Graph
from .solution import Solution

MAX_N = 20

PROBLEMS = (
    "max-wis",
    "chromatic-number",
    "max-wclique",
    "max-d-colorable",
    "max-d-degenerate",
    "max-h-colorable",
    "min-cvc",
    "min-fillin",
    "min-split-edit",
    "min-split-completion",
    "min-interval-completion",
    "clique-completion",
)


class _Bits:
    """Bitmask view of a graph."""

    def __init__(self, G: Graph):
        self.labels = list(G.vertices)
        self.n = len(self.labels)
        idx = {v: i for i, v in enumerate(self.labels)}
        self.nb = [0] * self.n
        for u, v in G.edges():
            self.nb[idx[u]] |= 1 << idx[v]
            self.nb[idx[v]] |= 1 << idx[u]
        self.idx = idx

    def members(self, mask: int) -> list:
        return [i for i in range(self.n) if mask >> i & 1]

    def labels_of(self, mask: int) -> frozenset:
        return frozenset(self.labels[i] for i in self.members(mask))


def _weights(B: _Bits, w) -> list:
    if w is None:
        return [1] * B.n
    return [w[v] for v in B.labels]


def _independent(nb, mask) -> bool:
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        if nb[i] & mask:
            return False
        m &= m - 1
    return True


def _is_clique(nb, mask) -> bool:
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        if (mask & ~(1 << i)) & ~nb[i]:
            return False
        m &= m - 1
    return True


def _colorable(nb, verts, d) -> dict | None:
    """Backtracking d-colouring of the listed vertices; returns index -> colour."""
    col: dict = {}

    def go(i, used):
        if i == len(verts):
            return True
        v = verts[i]
        for c in range(min(used + 1, d)):
            if all(col.get(u) != c for u in verts[:i] if nb[v] >> u & 1):
                col[v] = c
                if go(i + 1, max(used, c + 1)):
                    return True
                del col[v]
        return False

    return dict(col) if go(0, 0) else None


def _peel(nb, mask, d) -> list | None:
    """Minimum-degree peeling; returns an order if every removed vertex has degree <= d."""
    order = []
    alive = mask
    while alive:
        best = None
        for i in range(len(nb)):
            if alive >> i & 1:
                deg = bin(nb[i] & alive).count("1")
                if best is None or deg < best[0]:
                    best = (deg, i)
        if best[0] > d:
            return None
        order.append(best[1])
        alive &= ~(1 << best[1])
    return order


def _homomorphism(nb, verts, H: Graph) -> dict | None:
    hv = list(H.vertices)
    col: dict = {}

    def go(i):
        if i == len(verts):
            return True
        v = verts[i]
        for h in hv:
            if all(H.has_edge(col[u], h) for u in verts[:i] if nb[v] >> u & 1):
                col[v] = h
                if go(i + 1):
                    return True
                del col[v]
        return False

    return dict(col) if go(0) else None


def _connected(nb, mask) -> bool:
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        i = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = nb[i] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def _chordal(nb, n) -> bool:
    """Chordality by repeated removal of simplicial vertices."""
    nb = list(nb)
    alive = (1 << n) - 1
    while alive:
        for i in range(n):
            if alive >> i & 1 and _is_clique(nb, nb[i] & alive):
                alive &= ~(1 << i)
                break
        else:
            return False
    return True


def _has_at(nb, n) -> bool:
    full = (1 << n) - 1

    def comp(start, allowed):
        seen = 1 << start
        frontier = seen
        while frontier:
            i = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = nb[i] & allowed & ~seen
            seen |= new
            frontier |= new
        return seen

    for a, b, c in combinations(range(n), 3):
        if nb[a] >> b & 1 or nb[a] >> c & 1 or nb[b] >> c & 1:
            continue
        ok = True
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            allowed = full & ~(nb[z] | 1 << z)
            if not comp(x, allowed) >> y & 1:
                ok = False
                break
        if ok:
            return True
    return False


def _split(nb, n) -> bool:
    for kmask in range(1 << n):
        imask = ((1 << n) - 1) & ~kmask
        if _is_clique(nb, kmask) and _independent(nb, imask):
            return True
    return False


def _with_pairs(nb, pairs) -> list:
    nb = list(nb)
    for i, j in pairs:
        nb[i] ^= 1 << j
        nb[j] ^= 1 << i
    return nb


def _best_subset(B: _Bits, w, pred, maximize=True):
    best = None
    for mask in range(1 << B.n):
        wt = sum(w[i] for i in B.members(mask))
        if best is not None and (wt <= best[0] if maximize else wt >= best[0]):
            continue
        extra = pred(mask)
        if extra is not None and extra is not False:
            best = (wt, mask, extra)
    return best


def brute_force(problem: str, G: Graph, w=None, **params) -> Solution:
    """Solve `problem` on G by exhaustive enumeration."""
    if G.n > MAX_N:
        raise OracleLimitError(f"brute force refuses graphs with more than {MAX_N} vertices (got {G.n})")
    if problem not in PROBLEMS:
        raise ParameterError(f"unknown oracle problem {problem!r}")
    B = _Bits(G)
    W = _weights(B, w)
    nb = B.nb
    lab = B.labels

    if problem == "max-wis":
        wt, mask, _ = _best_subset(B, W, lambda m: _independent(nb, m))
        return Solution(problem, wt, B.labels_of(mask))

    if problem == "max-wclique":
        wt, mask, _ = _best_subset(B, W, lambda m: _is_clique(nb, m))
        return Solution(problem, wt, B.labels_of(mask))

    if problem == "max-d-colorable":
        d = params["d"]
        wt, mask, col = _best_subset(B, W, lambda m: _colorable(nb, B.members(m), d))
        return Solution(problem, wt, B.labels_of(mask), {lab[i]: c + 1 for i, c in col.items()})

    if problem == "max-d-degenerate":
        d = params["d"]
        wt, mask, order = _best_subset(B, W, lambda m: _peel(nb, m, d))
        return Solution(problem, wt, B.labels_of(mask), ordering=tuple(lab[i] for i in order))

    if problem == "max-h-colorable":
        H = params["H"]
        wt, mask, hom = _best_subset(B, W, lambda m: _homomorphism(nb, B.members(m), H))
        return Solution(problem, wt, B.labels_of(mask), {lab[i]: h for i, h in hom.items()})

    if problem == "min-cvc":
        edges = [(i, j) for i in range(B.n) for j in range(i + 1, B.n) if nb[i] >> j & 1]

        def cvc(m):
            return all(m >> i & 1 or m >> j & 1 for i, j in edges) and _connected(nb, m)

        res = _best_subset(B, W, cvc, maximize=False)
        if res is None:
            return Solution(problem, None)
        wt, mask, _ = res
        return Solution(problem, wt, B.labels_of(mask))

    if problem == "chromatic-number":
        verts = list(range(B.n))
        if params.get("reverse"):
            verts.reverse()
        for ell in range(0, B.n + 1):
            col = _colorable(nb, verts, ell)
            if col is not None:
                return Solution(problem, ell, frozenset(lab), {lab[i]: c + 1 for i, c in col.items()})

    if problem == "clique-completion":
        pairs = [(lab[i], lab[j]) for i, j in combinations(range(B.n), 2) if not nb[i] >> j & 1]
        return Solution(problem, len(pairs), extra={"pairs": pairs})

    if problem in ("min-fillin", "min-split-completion", "min-interval-completion", "min-split-edit"):
        if problem == "min-split-edit":
            cand = list(combinations(range(B.n), 2))
        else:
            cand = [(i, j) for i, j in combinations(range(B.n), 2) if not nb[i] >> j & 1]
        if problem == "min-fillin":
            test = lambda a: _chordal(a, B.n)  # noqa: E731
        elif problem == "min-interval-completion":
            test = lambda a: _chordal(a, B.n) and not _has_at(a, B.n)  # noqa: E731
        else:
            test = lambda a: _split(a, B.n)  # noqa: E731
        limit = params.get("limit", len(cand))
        for size in range(0, min(limit, len(cand)) + 1):
            for chosen in combinations(cand, size):
                if test(_with_pairs(nb, chosen)):
                    pairs = [(lab[i], lab[j]) for i, j in chosen]
                    return Solution(problem, size, extra={"pairs": pairs})
        return Solution(problem, None, extra={"pairs": None})

    raise AssertionError(problem)  # pragma: no cover


def is_chordal_bf(G: Graph) -> bool:
    B = _Bits(G)
    return _chordal(B.nb, B.n)


def is_interval_bf(G: Graph) -> bool:
    B = _Bits(G)
    return _chordal(B.nb, B.n) and not _has_at(B.nb, B.n)


def is_split_bf(G: Graph) -> bool:
    B = _Bits(G)
    return _split(B.nb, B.n)


def has_at_bf(G: Graph) -> bool:
    B = _Bits(G)
    return _has_at(B.nb, B.n)


def wclique_oracle(G: Graph, w, W: int) -> bool:
    """Default Turing-kernel oracle: is there a clique of weight at least W?"""
    if W <= 0:
        return True
    if G.n == 0:
        return False
    return brute_force("max-wclique", G, w).value >= W


def max_d_colorable_sets(G: Graph, d: int) -> list[frozenset]:
    """All inclusion-maximal vertex sets inducing a d-colourable subgraph."""
    B = _Bits(G)
    good = [m for m in range(1 << B.n) if _colorable(B.nb, B.members(m), d) is not None]
    goodset = set(good)
    out = []
    for m in good:
        if all((m | 1 << i) not in goodset for i in range(B.n) if not m >> i & 1):
            out.append(B.labels_of(m))
    return out
