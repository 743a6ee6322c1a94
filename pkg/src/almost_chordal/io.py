"""Graph file formats.

Two input formats are read, both with 1-based vertex numbers:

* edge list: a header line ``n m``, then ``m`` lines ``u v``, then an
  optional weight block of ``w u value`` lines;
* DIMACS: a ``p edge n m`` header and ``e u v`` lines (weights again as
  ``w u value``).

Lines starting with ``c`` or ``#`` are comments, except ``c label i L``
which says that file vertex ``i`` carries the external label ``L``.  The
writer uses these to keep the original labels of a vertex subset (for
example a kernel's reduced instance).  Internally vertex ``L`` of the file
becomes ``L - 1``.
"""
from __future__ import annotations

from pathlib import Path

from .errors import InputFormatError
from .graph import Graph, pair


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_graph_text(text: str) -> tuple[Graph, dict | None]:
    header = None
    dimacs = False
    edges: list = []
    seen: set = set()
    weights: dict = {}
    labels: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "#":
            continue
        if tok[0] == "c":
            if len(tok) >= 2 and tok[1] == "label":
                if len(tok) != 4:
                    raise InputFormatError("label line must read 'c label i L'", lineno)
                i, lab = _ints(tok[2:], lineno)
                if lab < 1:
                    raise InputFormatError("labels are positive integers", lineno)
                if i in labels:
                    raise InputFormatError(f"vertex {i} labelled twice", lineno)
                labels[i] = lab
            continue
        if tok[0].startswith("#"):
            continue
        if header is None:
            if tok[0] == "p":
                if len(tok) != 4 or tok[1] != "edge":
                    raise InputFormatError("DIMACS header must read 'p edge n m'", lineno)
                header, dimacs = _ints(tok[2:], lineno), True
            else:
                if len(tok) != 2:
                    raise InputFormatError("header must read 'n m'", lineno)
                header = _ints(tok, lineno)
            if header[0] < 0 or header[1] < 0:
                raise InputFormatError("negative count in header", lineno)
            continue
        n = header[0]
        if tok[0] == "w":
            if len(tok) != 3:
                raise InputFormatError("weight line must read 'w u value'", lineno)
            u, val = _ints(tok[1:], lineno)
            if not 1 <= u <= n:
                raise InputFormatError(f"vertex {u} out of range 1..{n}", lineno)
            if u in weights:
                raise InputFormatError(f"duplicate weight for vertex {u}", lineno)
            weights[u] = val
            continue
        if dimacs:
            if tok[0] != "e" or len(tok) != 3:
                raise InputFormatError("expected 'e u v'", lineno)
            tok = tok[1:]
        elif len(tok) != 2:
            raise InputFormatError("expected 'u v'", lineno)
        if weights:
            raise InputFormatError("edge after the weight block", lineno)
        u, v = _ints(tok, lineno)
        for x in (u, v):
            if not 1 <= x <= n:
                raise InputFormatError(f"vertex {x} out of range 1..{n}", lineno)
        if u == v:
            raise InputFormatError(f"self-loop at vertex {u}", lineno)
        if pair(u, v) in seen:
            raise InputFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(pair(u, v))
        edges.append((u, v))
    if header is None:
        raise InputFormatError("missing header line")
    n, m = header
    if len(edges) != m:
        raise InputFormatError(f"header announces {m} edges, found {len(edges)}")
    for i in labels:
        if not 1 <= i <= n:
            raise InputFormatError(f"label for vertex {i} out of range 1..{n}")
    lab = {i: labels.get(i, i) - 1 for i in range(1, n + 1)}
    if len(set(lab.values())) != n:
        raise InputFormatError("vertex labels are not unique")
    G = Graph(lab.values(), [(lab[u], lab[v]) for u, v in edges])
    w = {lab[u]: val for u, val in weights.items()} if weights else None
    return G, w


def parse_graph_file(path) -> tuple[Graph, dict | None]:
    return parse_graph_text(Path(path).read_text())


def parse_weights_text(text: str, G: Graph) -> dict:
    """A standalone weight file: ``w u value`` (or ``u value``) lines."""
    w: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] in ("c", "#") or tok[0].startswith("#"):
            continue
        if tok[0] == "w":
            tok = tok[1:]
        if len(tok) != 2:
            raise InputFormatError("weight line must read 'w u value'", lineno)
        u, val = _ints(tok, lineno)
        if u - 1 not in G:
            raise InputFormatError(f"unknown vertex {u}", lineno)
        if u - 1 in w:
            raise InputFormatError(f"duplicate weight for vertex {u}", lineno)
        w[u - 1] = val
    return w


def format_graph(G: Graph, weights: dict | None = None) -> str:
    """Edge-list rendering; label lines appear unless G's labels are exactly 0..n-1."""
    verts = G.vertices
    index = {v: i for i, v in enumerate(verts, 1)}
    lines = [f"{G.n} {G.m}"]
    if list(verts) != list(range(G.n)):
        lines += [f"c label {index[v]} {v + 1}" for v in verts]
    lines += [f"{index[u]} {index[v]}" for u, v in G.edges()]
    if weights:
        lines += [f"w {index[v]} {weights[v]}" for v in verts]
    return "\n".join(lines) + "\n"
