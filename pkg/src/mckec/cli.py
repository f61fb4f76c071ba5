"""Command-line interface.  Every command prints one JSON document on stdout.

Exit status: 0 success, 1 verification or assertion failure, 2 input error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coloring import ColoringError, parse_coloring, verify
from .constructions import (
    decompose_bipartite,
    decompose_complete_even,
    decompose_complete_odd,
    kkn_mc_coloring,
)
from .graph import GraphError, graph_corpus, read_graph, read_graph6_corpus, to_graph6
from .harness import (
    COUNTEREXAMPLE,
    INCONCLUSIVE,
    append_jsonl,
    check_theorems,
    hamiltonicity_via_umc2,
    records_csv,
    run_conjecture,
)
from .kecss import BudgetExceeded, minimalize, minimum_kecss
from .packing import packing_coloring, psi_oracle, tree_packing_number
from .search import Budget, exact_mc_k, exact_umc_k

OK, FAILED, BAD_INPUT, OVER_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_graph(path: str):
    try:
        return read_graph(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read graph file: {exc}") from None


def _budget(args) -> Budget:
    return Budget(max_edges=args.max_edges, max_nodes=args.max_nodes)


def _emit(doc: dict, args) -> None:
    print(json.dumps(doc, indent=2))
    out = getattr(args, "out", None)
    if out:
        with open(out, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(doc, separators=(",", ":")) + "\n")


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        text = Path(args.coloring).read_text()
    except OSError as exc:
        raise InputError(f"cannot read coloring file: {exc}") from None
    c = parse_coloring(text, g.m)
    report = verify(g, c, args.k, args.mode)
    _emit({"graph": to_graph6(g), **report.to_dict()}, args)
    return OK if report.passed else FAILED


def _cmd_search(args, fn) -> int:
    g = _load_graph(args.graph)
    res = fn(g, args.k, _budget(args))
    _emit({"graph": to_graph6(g), **res.to_dict()}, args)
    return OK if res.exact else OVER_BUDGET


def cmd_mc(args) -> int:
    return _cmd_search(args, exact_mc_k)


def cmd_umc(args) -> int:
    return _cmd_search(args, exact_umc_k)


def cmd_min_kecss(args) -> int:
    g = _load_graph(args.graph)
    if args.minimal:
        res = minimalize(g, args.k)
    else:
        res = minimum_kecss(g, args.k, max_edges=args.max_edges_kecss, max_nodes=args.max_nodes)
    _emit({"graph": to_graph6(g), **res.to_dict()}, args)
    return OK


def cmd_psi(args) -> int:
    g = _load_graph(args.graph)
    res = psi_oracle(g, max_n=args.max_n)
    _emit({"graph": to_graph6(g), **res.to_dict()}, args)
    return OK


def cmd_pack_trees(args) -> int:
    g = _load_graph(args.graph)
    k, packing = tree_packing_number(g)
    _emit({"graph": to_graph6(g), **packing.to_dict()}, args)
    return OK


def _params(pairs: list[str]) -> dict[str, str]:
    out = {}
    for p in pairs or []:
        if "=" not in p:
            raise InputError(f"--params entries look like key=value, got {p!r}")
        key, val = p.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def _int_param(params: dict, key: str, fallback=None) -> int:
    if key not in params:
        if fallback is not None:
            return fallback
        raise InputError(f"construction needs parameter {key}=...")
    try:
        return int(params[key])
    except ValueError:
        raise InputError(f"parameter {key} must be an integer") from None


def cmd_construct(args) -> int:
    params = _params(args.params)
    if args.n is not None:
        params.setdefault("n", str(args.n))
    if args.k is not None:
        params.setdefault("k", str(args.k))
    manifest = None
    if args.kind in ("walecki-odd", "walecki-even", "bipartite"):
        n = _int_param(params, "n")
        if args.kind == "walecki-odd":
            g, decomp = decompose_complete_odd(n)
        elif args.kind == "walecki-even":
            g, decomp = decompose_complete_even(n)
        else:
            odd = params.get("odd", "false").lower() in ("1", "true", "yes") or args.odd
            g, decomp = decompose_bipartite(n, odd)
        decomp.validate(g)
        coloring = decomp.coloring(g.m)
        manifest = decomp.manifest()
    elif args.kind == "kkn":
        g, coloring = kkn_mc_coloring(_int_param(params, "k"), _int_param(params, "n"))
    else:
        if not args.graph:
            raise InputError("construct packing needs --graph")
        g = _load_graph(args.graph)
        coloring = packing_coloring(g, _int_param(params, "k"))
    if args.coloring_out:
        Path(args.coloring_out).write_text(coloring.to_line() + "\n")
    if args.graph_out:
        Path(args.graph_out).write_text(to_graph6(g) + "\n")
    if args.manifest_out and manifest is not None:
        Path(args.manifest_out).write_text(json.dumps({"parts": manifest}, indent=2) + "\n")
    doc = {
        "kind": args.kind,
        "graph": to_graph6(g),
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "coloring": list(coloring.assignment),
        "num_colors": coloring.num_colors,
    }
    if manifest is not None:
        doc["parts"] = manifest
    _emit(doc, args)
    return OK


def _load_corpus(path: str):
    try:
        corpus = read_graph6_corpus(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read corpus: {exc}") from None
    if not corpus:
        raise InputError("corpus is empty")
    return corpus


def cmd_conjecture(args) -> int:
    corpus = _load_corpus(args.corpus)
    sweep = run_conjecture(corpus, args.k, _budget(args), jobs=args.jobs)
    if args.out:
        append_jsonl(args.out, sweep.records)
    if args.csv:
        Path(args.csv).write_text(records_csv(sweep.records))
    print(json.dumps(sweep.to_dict(), indent=2))
    if sweep.summary[COUNTEREXAMPLE] or sweep.summary["umc_formula_violations"]:
        return FAILED
    if sweep.summary[INCONCLUSIVE]:
        return OVER_BUDGET
    return OK


def cmd_theorems(args) -> int:
    corpus = _load_corpus(args.corpus)
    report = check_theorems(corpus, args.k, _budget(args))
    _emit(report.to_dict(), args)
    if report.violations:
        return FAILED
    return OVER_BUDGET if report.partial else OK


def cmd_hamiltonicity(args) -> int:
    g = _load_graph(args.graph)
    res = hamiltonicity_via_umc2(g, _budget(args))
    _emit({"graph": to_graph6(g), **res.to_dict()}, args)
    return OK if res.agrees else FAILED


def cmd_corpus(args) -> int:
    graphs = graph_corpus(args.n_max, args.k, n_min=args.n_min)
    text = "".join(to_graph6(g) + "\n" for g in graphs)
    if args.output:
        Path(args.output).write_text(text)
    print(json.dumps({"count": len(graphs), "graphs": [to_graph6(g) for g in graphs]}, indent=2))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mckec", description="Monochromatic k-edge-connection colorings of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_, k=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--graph", required=True, help="graph6 line or 'n m' edge-list file")
        if k:
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--out", help="append the JSON result as one line to this file")
        p.set_defaults(func=fn)
        return p

    def budget_args(p):
        p.add_argument("--max-edges", type=int, default=12, help="largest m searched exhaustively")
        p.add_argument("--max-nodes", type=int, default=5_000_000, help="search node cap")

    p = graph_cmd("verify", cmd_verify, "check an MC_k or UMC_k coloring")
    p.add_argument("--coloring", required=True)
    p.add_argument("--mode", choices=["mc", "umc"], default="mc")
    budget_args(graph_cmd("mc", cmd_mc, "exact mc_k(G)"))
    budget_args(graph_cmd("umc", cmd_umc, "exact umc_k(G)"))
    p = graph_cmd("min-kecss", cmd_min_kecss, "minimum or minimal k-edge-connected spanning subgraph")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--minimal", action="store_true")
    p.add_argument("--max-edges-kecss", type=int, default=20)
    p.add_argument("--max-nodes", type=int, default=5_000_000)
    p = graph_cmd("psi", cmd_psi, "psi(G) by partition enumeration", k=False)
    p.add_argument("--max-n", type=int, default=12)
    graph_cmd("pack-trees", cmd_pack_trees, "maximum edge-disjoint spanning tree packing", k=False)
    budget_args(graph_cmd("hamiltonicity", cmd_hamiltonicity, "Hamiltonicity via umc_2", k=False))

    p = sub.add_parser("construct", help="emit a decomposition or coloring")
    p.add_argument("kind", choices=["walecki-odd", "walecki-even", "bipartite", "kkn", "packing"])
    p.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--odd", action="store_true")
    p.add_argument("--graph")
    p.add_argument("--coloring-out")
    p.add_argument("--graph-out")
    p.add_argument("--manifest-out")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    for name, fn, help_ in (
        ("conjecture", cmd_conjecture, "sweep a graph6 corpus against the closed forms"),
        ("theorems", cmd_theorems, "check proved identities and bounds over a corpus"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--corpus", required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--out", help="append JSONL records here")
        budget_args(p)
        if name == "conjecture":
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("--csv")
        p.set_defaults(func=fn)

    p = sub.add_parser("corpus", help="write every k-edge-connected graph up to n vertices as graph6")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", None) is not None and args.k < 2:
        parser.print_usage(sys.stderr)
        print("error: k must be at least 2", file=sys.stderr)
        return BAD_INPUT
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(json.dumps({"error": "budget exceeded", "detail": str(exc)}, indent=2))
        return OVER_BUDGET
    except (InputError, GraphError, ColoringError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
