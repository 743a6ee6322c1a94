"""Command-line front end.

Verbs: fillin, decompose, solve, kernel, validate, plus generate for random
test instances.  Every verb except generate prints one JSON report (or a
plain-text rendering of it with --format text).  Exit status is 0 whenever
a result was computed, 2 for bad input or parameters, 3 for internal errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import random
import re
import sys
import time
from pathlib import Path

from . import __version__
from .chordal import recognize_chordal
from .decomposition import parse_nice_text, validate_nice
from .errors import (
    AlmostChordalError,
    DecompositionError,
    GraphError,
    InputFormatError,
    OracleLimitError,
    ParameterError,
)
from .fillin import approx_fillin, exact_fillin, kalmost_nice_decomposition
from .generators import FAMILIES
from .graph import check_weights, complete_graph, cycle_graph, path_graph, unit_weights
from .io import format_graph, parse_graph_text, parse_weights_text

SOLVE_PROBLEMS = (
    "wis", "wvc", "oct", "bipartite-subgraph", "wfvs", "induced-forest",
    "d-colorable", "d-degenerate", "h-colorable", "coloring", "cvc",
)
KERNEL_VARIANTS = ("split-is", "interval-is", "turing-wclique")
INPUT_ERRORS = (InputFormatError, ParameterError, GraphError, OracleLimitError, DecompositionError, OSError)


def _lab(v):
    return v + 1


def _vset(vs) -> list:
    return sorted(_lab(v) for v in vs)


def _pairs(ps) -> list:
    return [[_lab(u), _lab(v)] for u, v in sorted(ps)]


class _Inputs:
    """Reads input files once and remembers their digests."""

    def __init__(self):
        self.digests: dict = {}

    def read(self, role: str, path) -> str:
        data = Path(path).read_bytes()
        self.digests[role] = hashlib.sha256(data).hexdigest()
        try:
            return data.decode()
        except UnicodeDecodeError:
            raise InputFormatError(f"{path} is not a text file") from None

    def graph(self, path, weights_path=None):
        G, w = parse_graph_text(self.read("graph", path))
        if weights_path:
            w = parse_weights_text(self.read("weights", weights_path), G)
        return G, w


def _weights(G, w, required: bool):
    """Unit weights when none were given; a partial weight block is an error."""
    if w is None:
        if required:
            raise ParameterError("this verb needs vertex weights (weight block or --weights)")
        return unit_weights(G)
    missing = [v for v in G.vertices if v not in w]
    if missing:
        raise InputFormatError(f"missing weight for vertex {_lab(missing[0])}")
    return check_weights(G, w)


_NAMED = re.compile(r"^([KCP])(\d+)$")


def _load_h(spec: str, inputs: _Inputs):
    m = _NAMED.match(spec)
    if m:
        kind, size = m.group(1), int(m.group(2))
        if size < 1:
            raise ParameterError("named target graphs need at least one vertex")
        return {"K": complete_graph, "C": cycle_graph, "P": path_graph}[kind](size)
    H, _ = parse_graph_text(inputs.read("H", spec))
    return H


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ParameterError(f"{args.verb} {getattr(args, 'problem', '') or getattr(args, 'variant', '')} requires --{name}".replace("  ", " "))


# verbs ---------------------------------------------------------------


def cmd_fillin(args, inputs):
    G, _ = inputs.graph(args.graph)
    budget = args.k if args.k is not None else len(G.non_edges())
    if args.k is not None and args.k < 0:
        raise ParameterError("--k must be non-negative")
    A = approx_fillin(G, budget) if args.approx else exact_fillin(G, budget)
    if A is None:
        return {"value": None, "witness": None, "verdict": "over-budget"}
    return {"value": A.size, "witness": _pairs(A.pairs), "verdict": "within-budget"}


def _decomposition(G, k):
    if k is not None and k < 0:
        raise ParameterError("--k must be non-negative")
    return kalmost_nice_decomposition(G, k)


def cmd_decompose(args, inputs):
    G, _ = inputs.graph(args.graph)
    res = _decomposition(G, args.k)
    if res is None:
        return {"value": None, "witness": None, "verdict": "not-in-class"}
    T, A = res
    text = T.to_text()
    if args.out:
        Path(args.out).write_text(text)
    return {
        "value": T.max_deficiency,
        "witness": _pairs(A.pairs),
        "verdict": "decomposed",
        "nodes": len(T.nodes),
        "width": T.width,
        "decomposition": text,
    }


def _solve_oracle(problem, G, w, args, H):
    from .oracle import brute_force

    total = sum(w.values())
    if problem in ("wis", "wvc"):
        s = brute_force("max-wis", G, w)
    elif problem in ("bipartite-subgraph", "oct"):
        s = brute_force("max-d-colorable", G, w, d=2)
    elif problem in ("induced-forest", "wfvs"):
        s = brute_force("max-d-degenerate", G, w, d=1)
    elif problem == "d-colorable":
        s = brute_force("max-d-colorable", G, w, d=args.d)
    elif problem == "d-degenerate":
        s = brute_force("max-d-degenerate", G, w, d=args.d)
    elif problem == "h-colorable":
        s = brute_force("max-h-colorable", G, w, H=H)
    elif problem == "coloring":
        s = brute_force("chromatic-number", G)
        return {"value": s.value <= args.ell, "witness": _assignment(s.assignment) if s.value <= args.ell else None}
    else:
        s = brute_force("min-cvc", G, w)
    if problem in ("wvc", "oct", "wfvs"):
        return {"value": total - s.value, "witness": _vset(set(G.vertices) - s.vertices)}
    out = {"value": s.value, "witness": _vset(s.vertices)}
    if problem in ("d-colorable", "h-colorable"):
        out["assignment"] = _assignment(s.assignment, problem == "h-colorable")
    if problem == "d-degenerate":
        out["ordering"] = [_lab(v) for v in s.ordering]
    return out


def _assignment(a, target_labels: bool = False):
    """Vertex -> colour (1..d) or, for homomorphisms, vertex -> target vertex."""
    return {str(_lab(v)): _lab(c) if target_labels else c for v, c in sorted(a.items())}


def cmd_solve(args, inputs):
    from .dp import solve_classic, solve_coloring, solve_cvc, solve_d_colorable, solve_d_degenerate, solve_h_colorable

    problem = args.problem
    if problem in ("d-colorable", "d-degenerate"):
        _need(args, "d")
        if args.d < 0 or (problem == "d-colorable" and args.d < 1):
            raise ParameterError("--d out of range")
    if problem == "h-colorable":
        _need(args, "H")
    if problem == "coloring":
        _need(args, "ell")
        if args.ell < 0:
            raise ParameterError("--ell must be non-negative")
    G, w = inputs.graph(args.graph, args.weights)
    w = _weights(G, w, required=False)
    H = _load_h(args.H, inputs) if problem == "h-colorable" else None
    if args.oracle:
        out = _solve_oracle(problem, G, w, args, H)
        out["verdict"] = "solved"
        out["engine"] = "oracle"
        return out
    # --k is a budget hint here: the programs are correct for any modulator,
    # only slower, so an over-budget graph is still solved and flagged.
    res = _decomposition(G, args.k)
    over = res is None
    T, A = res if res else _decomposition(G, None)
    out = {"verdict": "solved", "engine": "dp", "modulator": _pairs(A.pairs), "k_exceeded": over}
    if problem == "coloring":
        s = solve_coloring(G, args.ell, T)
        out.update(value=s.value, witness=_assignment(s.assignment) if s.value else None)
        return out
    if problem == "cvc":
        s = solve_cvc(G, w, T)
    elif problem == "d-colorable":
        s = solve_d_colorable(G, w, args.d, T)
    elif problem == "d-degenerate":
        s = solve_d_degenerate(G, w, args.d, T)
    elif problem == "h-colorable":
        s = solve_h_colorable(G, w, H, T)
    else:
        s = solve_classic(problem, G, w, T)
    out.update(value=s.value, witness=_vset(s.vertices))
    if s.assignment is not None and problem in ("d-colorable", "h-colorable"):
        out["assignment"] = _assignment(s.assignment, problem == "h-colorable")
    if s.ordering is not None and problem == "d-degenerate":
        out["ordering"] = [_lab(v) for v in s.ordering]
    return out


def cmd_kernel(args, inputs):
    from .kernels import interval_is_compress, split_is_kernel, turing_kernel_wclique

    variant = args.variant
    _need(args, "k")
    if args.k < 0:
        raise ParameterError("--k must be non-negative")
    if variant == "turing-wclique":
        _need(args, "W")
        G, w = inputs.graph(args.graph, args.weights)
        w = _weights(G, w, required=False)
        r = turing_kernel_wclique(G, w, args.W, args.k)
        return {
            "value": r.answer,
            "witness": _pairs(r.modulator.pairs) if r.modulator else None,
            "verdict": r.verdict,
            "queries": [
                {"clique": _vset(q.clique), "vertices": _vset(q.vertices), "threshold": q.threshold, "answer": q.answer}
                for q in r.queries
            ],
        }
    _need(args, "ell")
    G, _ = inputs.graph(args.graph)
    kern = split_is_kernel if variant == "split-is" else interval_is_compress
    r = kern(G, args.ell, args.k)
    out = {
        "value": r.answer,
        "witness": None,
        "verdict": r.verdict,
        "trace": [rec.as_dict(_lab) for rec in r.trace],
    }
    if r.graph is not None:
        text = format_graph(r.graph, r.weights)
        out["instance"] = text
        out["threshold"] = r.threshold
        out["witness"] = _vset(r.graph.vertices)
        if args.out:
            Path(args.out).write_text(text)
    return out


def cmd_validate(args, inputs):
    G, _ = inputs.graph(args.graph)
    if not args.decomposition:
        cert = recognize_chordal(G)
        return {
            "value": cert.chordal,
            "witness": [_lab(v) for v in (cert.peo if cert.chordal else cert.cycle)],
            "verdict": "chordal" if cert.chordal else "not-chordal",
            "n": G.n,
            "m": G.m,
        }
    text = inputs.read("decomposition", args.decomposition)
    try:
        T = parse_nice_text(text, G)
        validate_nice(T, G)
    except DecompositionError as exc:
        return {"value": False, "witness": None, "verdict": "invalid", "reason": str(exc)}
    return {"value": True, "witness": None, "verdict": "valid", "nodes": len(T.nodes), "max_deficiency": T.max_deficiency}


def cmd_generate(args):
    if args.n is None or args.n < 0:
        raise ParameterError("generate requires a non-negative --n")
    k = args.k if args.k is not None else 1
    rng = random.Random(args.seed)
    G = FAMILIES[args.family](args.n, k, rng)
    text = format_graph(G)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


VERBS = {
    "fillin": cmd_fillin,
    "decompose": cmd_decompose,
    "solve": cmd_solve,
    "kernel": cmd_kernel,
    "validate": cmd_validate,
}


# plumbing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--no-timing", action="store_true", help="omit wall time so reports are byte-identical")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="almost-chordal", description="Algorithms on graphs a few edges away from chordal.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("fillin", parents=[common], help="minimum fill-in up to a budget")
    s.add_argument("graph")
    s.add_argument("--k", type=int)
    s.add_argument("--approx", action="store_true", help="use the heuristic-first modulator")

    s = sub.add_parser("decompose", parents=[common], help="k-almost-chordal nice tree decomposition")
    s.add_argument("graph")
    s.add_argument("--k", type=int)
    s.add_argument("--out")

    s = sub.add_parser("solve", parents=[common], help="run a dynamic program")
    s.add_argument("problem", choices=SOLVE_PROBLEMS)
    s.add_argument("graph")
    s.add_argument("--weights")
    s.add_argument("--k", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--ell", type=int)
    s.add_argument("--H", help="target graph file, or K<n>, C<n>, P<n>")
    s.add_argument("--oracle", action="store_true", help="answer by brute force instead")

    s = sub.add_parser("kernel", parents=[common], help="kernelization and compression")
    s.add_argument("variant", choices=KERNEL_VARIANTS)
    s.add_argument("graph")
    s.add_argument("--weights")
    s.add_argument("--k", type=int)
    s.add_argument("--ell", type=int)
    s.add_argument("--W", type=int)
    s.add_argument("--out")

    s = sub.add_parser("validate", parents=[common], help="check a graph or a decomposition file")
    s.add_argument("graph")
    s.add_argument("decomposition", nargs="?")

    s = sub.add_parser("generate", parents=[common], help="write a random test instance")
    s.add_argument("family", choices=sorted(FAMILIES))
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--out")
    return p


_META = {"verb", "graph", "format", "no_timing", "out", "weights", "decomposition"}


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = []
    for key in sorted(report):
        val = report[key]
        if isinstance(val, str) and "\n" in val:
            lines.append(f"{key}:")
            lines += ["  " + ln for ln in val.rstrip("\n").split("\n")]
        else:
            lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    start = time.perf_counter()
    inputs = _Inputs()
    try:
        if args.verb == "generate":
            return cmd_generate(args)
        result = VERBS[args.verb](args, inputs)
        status = 0
    except INPUT_ERRORS as exc:
        code = getattr(exc, "code", "io-error")
        result, status = {"error": {"code": code, "message": str(exc)}, "verdict": "error"}, 2
    except AlmostChordalError as exc:
        result, status = {"error": {"code": exc.code, "message": str(exc)}, "verdict": "error"}, 3
    except Exception as exc:  # noqa: BLE001
        result, status = {"error": {"code": "internal", "message": f"{type(exc).__name__}: {exc}"}, "verdict": "error"}, 3
    if args.verb == "generate":
        print(result["error"]["message"], file=sys.stderr)
        return status
    report = {
        "verb": args.verb,
        "inputs": dict(sorted(inputs.digests.items())),
        "params": {k: v for k, v in sorted(vars(args).items()) if k not in _META and v is not None},
    }
    report.update(result)
    if not args.no_timing:
        report["wall_time"] = round(time.perf_counter() - start, 6)
    sys.stdout.write(_render(report, fmt))
    if status:
        print(f"error: {result['error']['message']}", file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
