"""Maximum-weight induced d-colourable and H-colourable subgraphs.

A table entry at node t is keyed by a candidate set S of the bag together
with a map c from S to the target (colours 1..d, or vertices of H).  Its
value is the largest w(S^) over sets S^ of V_t with S^ meeting the bag in
S whose induced subgraph maps onto the target extending c.

    introduce v:  cost[t', S - v, c'] + w(v)         (v in S)
    forget w:     max(cost[t', S, c], cost[t', S + w, c + (w -> h)])
    join:         cost[t1, S, c] + cost[t2, S, c] - w(S)
"""
from __future__ import annotations

from itertools import combinations

from ..decomposition import FORGET, INTRODUCE, JOIN, LEAF, NiceTreeDecomposition, validate_nice
from ..errors import ParameterError, WitnessError
from ..graph import Graph, check_weights, complete_graph
from ..solution import Solution
from .candidates import enumerate_bag_candidates

INFEASIBLE = None


def _maps(G: Graph, S, H: Graph, targets) -> list[tuple]:
    """All homomorphisms G[S] -> H as sorted (vertex, image) tuples."""
    S = sorted(S)
    out = []
    cur: list = []

    def go(i):
        if i == len(S):
            out.append(tuple(cur))
            return
        v = S[i]
        for h in targets:
            if all(H.has_edge(img, h) for u, img in cur if G.has_edge(u, v)):
                cur.append((v, h))
                go(i + 1)
                cur.pop()

    go(0)
    return out


def _insert(key: tuple, v, h) -> tuple:
    return tuple(sorted(key + ((v, h),)))


class _AssignmentDP:
    def __init__(self, G: Graph, w, H: Graph, T: NiceTreeDecomposition, d: int):
        self.G, self.w, self.H, self.T, self.d = G, w, H, T, d
        self.targets = tuple(H.vertices)
        self._keys_cache: dict = {}
        self.families: dict = {}

    def keys(self, bag: frozenset) -> list[tuple]:
        ks = self._keys_cache.get(bag)
        if ks is None:
            fam = enumerate_bag_candidates(self.G, bag, self.d)
            self.families[bag] = fam
            ks = []
            for S in fam.sets:
                ks.extend(_maps(self.G, S, self.H, self.targets))
            self._keys_cache[bag] = ks
        return ks

    def run(self):
        G, w = self.G, self.w
        tables: list = [None] * len(self.T.nodes)
        for nd in self.T.nodes:
            tab = {}
            if nd.kind == LEAF:
                tab[()] = (0, None)
            elif nd.kind == INTRODUCE:
                child = tables[nd.children[0]]
                v = nd.vertex
                for key in self.keys(nd.bag):
                    dom = [u for u, _ in key]
                    if v in dom:
                        ck = tuple(p for p in key if p[0] != v)
                        cv = child.get(ck)
                        if cv is not None:
                            tab[key] = (cv[0] + w[v], ck)
                    else:
                        cv = child.get(key)
                        if cv is not None:
                            tab[key] = (cv[0], key)
            elif nd.kind == FORGET:
                child = tables[nd.children[0]]
                x = nd.vertex
                for key in self.keys(nd.bag):
                    best = None
                    cv = child.get(key)
                    if cv is not None:
                        best = (cv[0], key)
                    for h in self.targets:
                        ck = _insert(key, x, h)
                        cv = child.get(ck)
                        if cv is not None and (best is None or cv[0] > best[0]):
                            best = (cv[0], ck)
                    if best is not None:
                        tab[key] = best
            else:
                t1, t2 = tables[nd.children[0]], tables[nd.children[1]]
                for key in self.keys(nd.bag):
                    a, b = t1.get(key), t2.get(key)
                    if a is not None and b is not None:
                        tab[key] = (a[0] + b[0] - sum(w[u] for u, _ in key), key)
            tables[nd.id] = tab
        self.tables = tables
        root = tables[-1].get(())
        return root

    def witness(self) -> dict:
        assign = {}
        stack = [(len(self.T.nodes) - 1, ())]
        while stack:
            nid, key = stack.pop()
            assign.update(key)
            nd = self.T.nodes[nid]
            _, back = self.tables[nid][key]
            if nd.kind in (INTRODUCE, FORGET):
                stack.append((nd.children[0], back))
            elif nd.kind == JOIN:
                stack.append((nd.children[0], key))
                stack.append((nd.children[1], key))
        return assign


def check_homomorphism(G: Graph, assign: dict, H: Graph) -> None:
    for u, v in G.edges():
        if u in assign and v in assign and not H.has_edge(assign[u], assign[v]):
            raise WitnessError(f"edge {(u, v)} not preserved")
    for v, h in assign.items():
        if h not in H:
            raise WitnessError(f"image {h!r} of {v!r} not in target")


def solve_h_colorable(G: Graph, w, H: Graph, T: NiceTreeDecomposition, validate: bool = True) -> Solution:
    """Maximum weight of an induced subgraph that maps homomorphically to H."""
    if H.n < 1:
        raise ParameterError("pattern graph H needs at least one vertex")
    w = check_weights(G, w)
    if validate:
        validate_nice(T, G)
    dp = _AssignmentDP(G, w, H, T, H.n)
    root = dp.run()
    assign = dp.witness()
    check_homomorphism(G, assign, H)
    verts = frozenset(assign)
    if sum(w[v] for v in verts) != root[0]:
        raise WitnessError("witness weight disagrees with table value")
    sol = Solution("h-colorable", root[0], verts, assign)
    sol.extra["families"] = dp.families
    return sol


def solve_d_colorable(G: Graph, w, d: int, T: NiceTreeDecomposition, validate: bool = True) -> Solution:
    """Maximum weight of an induced d-colourable subgraph, with a colouring 1..d."""
    if d < 1:
        raise ParameterError("d must be at least 1")
    K = complete_graph(d)
    sol = solve_h_colorable(G, w, K, T, validate)
    assign = {v: c + 1 for v, c in sol.assignment.items()}
    for u, v in combinations(sorted(assign), 2):
        if G.has_edge(u, v) and assign[u] == assign[v]:
            raise WitnessError("colouring is not proper")
    return Solution("d-colorable", sol.value, sol.vertices, assign, extra=sol.extra)
