"""Exact mc_k / umc_k by enumerating edge partitions with connected classes, plus a local improver."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .coloring import MC, UMC, EdgeColoring, ClassNetwork, classes_feasible, is_mc_k, normalize, verify
from .constructions import single_class_umc_coloring
from .graph import Graph, blocks, components
from .kecss import minimalize, require_kec
from .packing import packing_coloring, tree_packing_number


@dataclass
class Budget:
    max_edges: int = 12
    max_nodes: int = 5_000_000


@dataclass
class SearchResult:
    mode: str
    k: int
    value: int
    witness: EdgeColoring
    explored: int
    exact: bool
    seed_value: int
    elapsed_ms: float = 0.0
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "k": self.k,
            "value": self.value,
            "exact": self.exact,
            "witness": list(self.witness.assignment),
            "explored": self.explored,
            "seed_value": self.seed_value,
            "note": self.note,
        }


def _seeds(g: Graph, k: int, mode: str, seeded: bool) -> list[tuple[int, ...]]:
    """Known-valid colorings used as the initial incumbent (each re-verified)."""
    out = [(0,) * g.m]
    if not seeded:
        return out
    out.append(single_class_umc_coloring(g, k, minimalize(g, k)).assignment)
    if mode == MC and k >= 2 and g.n >= 2:
        number, _ = tree_packing_number(g)
        if number >= k:
            out.append(packing_coloring(g, k).assignment)
    good = []
    for a in out:
        classes = EdgeColoring(a).classes()
        if classes_feasible(g, classes, k, mode):
            good.append(a)
    return good


class _Stop(Exception):
    pass


def _search(g: Graph, k: int, mode: str, budget: Budget | None, seeded: bool = True) -> SearchResult:
    budget = budget or Budget()
    require_kec(g, k)
    start = time.perf_counter()
    m, n = g.m, g.n
    edges = g.edges

    seeds = _seeds(g, k, mode, seeded)
    best_val, best = max((max(a) + 1, a) for a in seeds)
    # an enumerated witness at best_val beats the seed on lexicographic order
    state = {"val": best_val, "wit": best, "enum": False, "nodes": 0}
    seed_value = best_val

    if m > budget.max_edges:
        return SearchResult(mode, k, best_val, EdgeColoring(best), 0, False, seed_value,
                            (time.perf_counter() - start) * 1e3,
                            f"m={m} exceeds the search budget of {budget.max_edges} edges")

    # suffix_label[i][v]: component of v using only edges i..m-1
    suffix_label = []
    for i in range(m + 1):
        comps = components(g, range(i, m))
        lab = [0] * n
        for c, comp in enumerate(comps):
            for v in comp:
                lab[v] = c
        suffix_label.append(lab)

    assign = [0] * m
    block_edges: list[list[int]] = []

    def closable(nxt: int) -> bool:
        lab = suffix_label[nxt]
        for es in block_edges:
            parent = {}

            def find(x):
                while parent.get(x, x) != x:
                    x = parent[x]
                return x

            for e in es:
                ra, rb = find(lab[edges[e][0]]), find(lab[edges[e][1]])
                if ra != rb:
                    parent[ra] = rb
            root = find(lab[edges[es[0]][0]])
            for e in es:
                if find(lab[edges[e][0]]) != root:
                    return False
        return True

    def rec(i: int) -> None:
        state["nodes"] += 1
        if state["nodes"] > budget.max_nodes:
            raise _Stop
        b = len(block_edges)
        if i == m:
            if b > state["val"] or (b == state["val"] and not state["enum"]):
                if classes_feasible(g, block_edges, k, mode):
                    state["val"], state["wit"], state["enum"] = b, tuple(assign), True
            return
        remaining = m - i - 1
        for j in range(b + 1):
            potential = (b + 1 if j == b else b) + remaining
            if potential < state["val"] or (potential == state["val"] and state["enum"]):
                continue
            assign[i] = j
            if j == b:
                block_edges.append([i])
            else:
                block_edges[j].append(i)
            if closable(i + 1):
                rec(i + 1)
            if j == b:
                block_edges.pop()
            else:
                block_edges[j].pop()

    exact = True
    try:
        rec(0)
    except _Stop:
        exact = False
    wit = EdgeColoring(normalize(state["wit"]))
    return SearchResult(mode, k, wit.num_colors, wit, state["nodes"], exact, seed_value,
                        (time.perf_counter() - start) * 1e3,
                        None if exact else f"node budget of {budget.max_nodes} exhausted")


def exact_mc_k(g: Graph, k: int, budget: Budget | None = None, seeded: bool = True) -> SearchResult:
    """mc_k(G): most colors over MC_k-colorings, searched over connected-class partitions.

    ``seeded`` starts the incumbent from constructed colorings (greedy minimal
    subgraph, tree packing); without it the search starts from one color.
    """
    return _search(g, k, MC, budget, seeded)


def exact_umc_k(g: Graph, k: int, budget: Budget | None = None, seeded: bool = True) -> SearchResult:
    """umc_k(G): as exact_mc_k with the uniform (single-color) requirement."""
    return _search(g, k, UMC, budget, seeded)


# --------------------------------------------------------------------------
# Local improvement


def _split_disconnected(g: Graph, colors: list[int]) -> bool:
    changed = False
    classes: dict[int, list[int]] = {}
    for e, c in enumerate(colors):
        classes.setdefault(c, []).append(e)
    fresh = max(colors) + 1
    for c, es in classes.items():
        comps = [comp for comp in components(g, es) if len(comp) > 1]
        if len(comps) <= 1:
            continue
        for comp in comps[1:]:
            cs = set(comp)
            for e in es:
                if g.edges[e][0] in cs:
                    colors[e] = fresh
            fresh += 1
        changed = True
    return changed


def _transfer_moves(g: Graph, colors: list[int]):
    """Candidate recolorings for classes that mix bridges with 2-edge-connected parts.

    For a bridge ``uv`` of class i with ``v`` on a cycle edge ``vw`` of the
    class, and another class j holding a u-w path: recolor class i minus
    ``vw`` with j, leaving ``vw`` as a trivial color.
    """
    classes: dict[int, list[int]] = {}
    for e, c in enumerate(colors):
        classes.setdefault(c, []).append(e)
    net_classes = sorted(classes)
    net = ClassNetwork(g, [classes[c] for c in net_classes])
    for ci, c in enumerate(net_classes):
        es = classes[c]
        if len(es) < 2:
            continue
        sub, verts = g.induced_by_edges(es)
        if len(components(sub)) > 1:
            continue
        bl = blocks(sub)
        bridges = {sorted(es)[next(iter(b))] for b in bl if len(b) == 1}
        if not bridges or len(bridges) == len(es):
            continue
        cyc_edges = [e for e in es if e not in bridges]
        for br in sorted(bridges):
            for u, v in (g.edges[br], g.edges[br][::-1]):
                for ce in cyc_edges:
                    if v not in g.edges[ce]:
                        continue
                    w = g.edges[ce][0] if g.edges[ce][1] == v else g.edges[ce][1]
                    for cj, d in enumerate(net_classes):
                        if d == c or u == w:
                            continue
                        if net.paths(cj, u, w, 1) >= 1:
                            new = colors[:]
                            for e in es:
                                if e != ce:
                                    new[e] = d
                            yield new


def improve_coloring(g: Graph, c: EdgeColoring, k: int, max_rounds: int = 1000) -> EdgeColoring:
    """Apply color-count-non-decreasing local moves until nothing changes.

    Moves: split a disconnected class into one color per component; transfer
    a mixed bridge/cycle class into a neighbouring class when the result still
    verifies.
    """
    if not is_mc_k(g, c, k).passed:
        raise ValueError("input coloring is not an MC_k-coloring")
    colors = list(c.assignment)
    seen = {tuple(normalize(colors))}
    for _ in range(max_rounds):
        if _split_disconnected(g, colors):
            colors = list(normalize(colors))
            seen.add(tuple(colors))
            continue
        moved = False
        for cand in _transfer_moves(g, colors):
            norm = normalize(cand)
            if norm in seen or max(norm) < max(colors):
                continue
            if verify(g, EdgeColoring(norm), k, MC).passed:
                colors = list(norm)
                seen.add(norm)
                moved = True
                break
        if not moved:
            break
    out = EdgeColoring(normalize(colors))
    assert out.num_colors >= c.num_colors
    return out
