"""Hamiltonian decompositions of complete and complete bipartite graphs, and the colorings built from them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .coloring import EdgeColoring
from .graph import Graph, GraphError, complete, complete_bipartite, is_connected, k_edge_connected
from .kecss import KecssResult

HAMILTONIAN_CYCLE = "hamiltonian_cycle"
PERFECT_MATCHING = "perfect_matching"


@dataclass(frozen=True)
class Part:
    label: str
    edges: frozenset[int]


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[Part, ...]

    def validate(self, g: Graph) -> None:
        seen: set[int] = set()
        for part in self.parts:
            if part.edges & seen:
                raise AssertionError("decomposition parts overlap")
            seen |= part.edges
            deg = [0] * g.n
            for e in part.edges:
                a, b = g.edges[e]
                deg[a] += 1
                deg[b] += 1
            if part.label == HAMILTONIAN_CYCLE:
                if len(part.edges) != g.n or any(d != 2 for d in deg) or not is_connected(g, part.edges):
                    raise AssertionError("part is not a Hamiltonian cycle")
            elif part.label == PERFECT_MATCHING:
                if g.n % 2 or len(part.edges) != g.n // 2 or any(d != 1 for d in deg):
                    raise AssertionError("part is not a perfect matching")
            else:
                raise AssertionError(f"unknown part label {part.label!r}")
        if len(seen) != g.m:
            raise AssertionError("decomposition does not cover every edge")

    def coloring(self, m: int) -> EdgeColoring:
        return EdgeColoring.from_classes(m, [p.edges for p in self.parts])

    def manifest(self) -> list[dict]:
        return [{"color": i, "label": p.label, "edges": sorted(p.edges)} for i, p in enumerate(self.parts)]


def _cycle_edges(g: Graph, walk: Sequence[int]) -> frozenset[int]:
    return frozenset(g.edge_id(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk)))


def _zigzag(n: int, shift: int) -> list[int]:
    """Hamiltonian path 0, 1, -1, 2, -2, ... of the 2n-cycle rim, rotated by ``shift``."""
    rim = 2 * n
    seq = [0]
    for i in range(1, n + 1):
        seq.append(i)
        if len(seq) < rim:
            seq.append(-i)
    return [(x + shift) % rim for x in seq[:rim]]


def decompose_complete_odd(n: int) -> tuple[Graph, Decomposition]:
    """K_{2n+1} as n Hamiltonian cycles: rim 0..2n-1, hub 2n, cycle j = zigzag rotated by j."""
    if n < 1:
        raise GraphError("n must be >= 1")
    g = complete(2 * n + 1)
    hub = 2 * n
    parts = tuple(Part(HAMILTONIAN_CYCLE, _cycle_edges(g, [hub] + _zigzag(n, j))) for j in range(n))
    return g, Decomposition(parts)


def decompose_complete_even(n: int) -> tuple[Graph, Decomposition]:
    """K_{2n+2} as n Hamiltonian cycles and a perfect matching.

    Hubs are 2n and 2n+1.  Each rotated zigzag path is cut at its middle edge;
    one hub closes the two ends, the other bridges the cut.  The middle edges
    are the n rim diameters, which together with the hub edge form the matching.
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    g = complete(2 * n + 2)
    a, b = 2 * n, 2 * n + 1
    parts = []
    matching = {g.edge_id(a, b)}
    for j in range(n):
        p = _zigzag(n, j)
        walk = [a] + p[:n] + [b] + p[n:]
        parts.append(Part(HAMILTONIAN_CYCLE, _cycle_edges(g, walk)))
        matching.add(g.edge_id(p[n - 1], p[n]))
    parts.append(Part(PERFECT_MATCHING, frozenset(matching)))
    return g, Decomposition(tuple(parts))


def _bipartite_cycles(g: Graph, left: Sequence[int], right: Sequence[int], l: int) -> list[Part]:
    """On K_{s,s}: edges left[i]-right[i+d] for d in {2j, 2j+1} form one Hamiltonian cycle."""
    s = len(left)
    parts = []
    for j in range(l):
        edges = frozenset(
            g.edge_id(left[i], right[(i + d) % s]) for i in range(s) for d in (2 * j, 2 * j + 1)
        )
        parts.append(Part(HAMILTONIAN_CYCLE, edges))
    return parts


def decompose_bipartite(n: int, odd: bool = False) -> tuple[Graph, Decomposition]:
    """K_{2n,2n} into n Hamiltonian cycles, or K_{2n+1,2n+1} into n cycles and a matching."""
    if n < 1:
        raise GraphError("n must be >= 1")
    s = 2 * n + (1 if odd else 0)
    g = complete_bipartite(s, s)
    left, right = list(range(s)), list(range(s, 2 * s))
    parts = _bipartite_cycles(g, left, right, n)
    if odd:
        parts.append(Part(PERFECT_MATCHING, frozenset(g.edge_id(left[i], right[(i + 2 * n) % s]) for i in range(s))))
    return g, Decomposition(tuple(parts))


def kkn_mc_coloring(k: int, n: int) -> tuple[Graph, EdgeColoring]:
    """k/2-color MC_k coloring of K_{k,n} for even k >= 4 and n >= k.

    The size-k side is ``0..k-1`` and the size-n side is ``k..k+n-1``.  The
    first k vertices of the size-n side span a K_{k,k} split into k/2
    Hamiltonian cycles; each remaining vertex sends its (2i, 2i+1)-th edges,
    in neighbour order, to class i.
    """
    if k < 4 or k % 2 or n < k:
        raise GraphError("kkn coloring needs even k >= 4 and n >= k")
    g = complete_bipartite(k, n)
    small = list(range(k))
    first = list(range(k, 2 * k))
    classes = [set(p.edges) for p in _bipartite_cycles(g, first, small, k // 2)]
    for v in range(2 * k, k + n):
        nbrs = sorted(small)
        for i in range(k // 2):
            classes[i].add(g.edge_id(v, nbrs[2 * i]))
            classes[i].add(g.edge_id(v, nbrs[2 * i + 1]))
    return g, EdgeColoring.from_classes(g.m, classes)


def single_class_umc_coloring(g: Graph, k: int, h: KecssResult | Sequence[int]) -> EdgeColoring:
    """Edges of the spanning subgraph get color 0; each other edge a fresh color."""
    sub = set(h.edges if isinstance(h, KecssResult) else h)
    if not sub or not k_edge_connected(g, k, sub):
        raise GraphError(f"subgraph is not a spanning {k}-edge-connected subgraph")
    colors = []
    fresh = 1
    for e in range(g.m):
        if e in sub:
            colors.append(0)
        else:
            colors.append(fresh)
            fresh += 1
    return EdgeColoring.from_colors(colors)


def manifest_json(decomp: Decomposition) -> str:
    return json.dumps({"parts": decomp.manifest()}, indent=2)
