"""k-edge-connected spanning subgraphs: deletable edges, greedy minimal, exact minimum, Mader checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import CutCertificate, Graph, GraphError, edge_connectivity, is_k_edge_connected, k_edge_connected, local_edge_connectivity

EXACT = "exact"
HEURISTIC = "heuristic-minimal"


class BudgetExceeded(RuntimeError):
    pass


class NotKEdgeConnected(GraphError):
    def __init__(self, k: int, cut: CutCertificate | None):
        size = "n<2" if cut is None else f"cut of size {cut.size}"
        super().__init__(f"graph is not {k}-edge-connected ({size})")
        self.k = k
        self.cut = cut


def require_kec(g: Graph, k: int, edges=None) -> None:
    ok, cut = is_k_edge_connected(g, k, edges)
    if not ok:
        raise NotKEdgeConnected(k, cut)


@dataclass
class KecssResult:
    edges: tuple[int, ...]
    k: int
    exactness: str
    connectivity: int
    min_cut: CutCertificate | None
    nodes: int = 0

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def exact(self) -> bool:
        return self.exactness == EXACT

    def to_dict(self) -> dict:
        return {
            "edges": list(self.edges),
            "size": self.size,
            "k": self.k,
            "exactness": self.exactness,
            "connectivity": self.connectivity,
            "min_cut": None if self.min_cut is None else self.min_cut.to_dict(),
            "nodes": self.nodes,
        }


def _result(g: Graph, edges, k: int, exactness: str, nodes: int = 0) -> KecssResult:
    edges = tuple(sorted(edges))
    lam, cut = edge_connectivity(g, edges)
    return KecssResult(edges, k, exactness, lam, cut, nodes)


def is_deletable(g: Graph, e: int, k: int) -> bool:
    require_kec(g, k)
    if not 0 <= e < g.m:
        raise GraphError(f"edge index {e} out of range")
    return k_edge_connected(g, k, [i for i in range(g.m) if i != e])


def minimalize(g: Graph, k: int) -> KecssResult:
    """Greedy deletion in edge-index order.

    One pass suffices: an edge that is not deletable stays non-deletable once
    further edges are removed.
    """
    require_kec(g, k)
    keep = set(range(g.m))
    for e in range(g.m):
        keep.discard(e)
        if not k_edge_connected(g, k, keep):
            keep.add(e)
    return _result(g, keep, k, HEURISTIC)


def minimum_kecss(g: Graph, k: int, max_edges: int = 20, max_nodes: int = 5_000_000) -> KecssResult:
    """Exact minimum spanning k-edge-connected subgraph by branch and bound.

    Ties go to the lexicographically smallest sorted edge-index tuple.
    """
    require_kec(g, k)
    if g.m > max_edges:
        raise BudgetExceeded(f"m={g.m} exceeds the exact k-ECSS budget of {max_edges} edges")
    n, m = g.n, g.m
    deg = g.degrees()
    order = sorted(range(m), key=lambda i: (deg[g.edges[i][0]] + deg[g.edges[i][1]], i))
    avail = deg[:]          # degree still reachable (not excluded)
    incl = [0] * n          # degree already included
    chosen: list[int] = []
    best: list = [m, tuple(range(m))]
    nodes = 0

    def lower_bound() -> int:
        s = 0
        for v in range(n):
            s += incl[v] if incl[v] > k else k
        return (s + 1) // 2

    def rec(pos: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded(f"exact k-ECSS search exceeded {max_nodes} nodes")
        lb = max(len(chosen), lower_bound())
        if lb > best[0]:
            return
        if pos == m:
            if len(chosen) == best[0]:
                cand = tuple(sorted(chosen))
                if cand >= best[1]:
                    return
            if k_edge_connected(g, k, chosen):
                best[0], best[1] = len(chosen), tuple(sorted(chosen))
            return
        e = order[pos]
        a, b = g.edges[e]
        chosen.append(e)
        incl[a] += 1
        incl[b] += 1
        rec(pos + 1)
        chosen.pop()
        incl[a] -= 1
        incl[b] -= 1
        if avail[a] > k and avail[b] > k:
            avail[a] -= 1
            avail[b] -= 1
            rec(pos + 1)
            avail[a] += 1
            avail[b] += 1

    rec(0)
    return _result(g, best[1], k, EXACT, nodes)


@dataclass
class MaderReport:
    k: int
    is_minimal: bool
    edge_bound_holds: bool
    degree_k_vertex: int | None
    deletable_edge: int | None = None
    edge_cuts: dict[int, CutCertificate] = field(default_factory=dict)
    first_violation: str | None = None

    @property
    def consistent(self) -> bool:
        if not self.is_minimal:
            return True
        return self.first_violation is None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "is_minimal": self.is_minimal,
            "edge_bound_holds": self.edge_bound_holds,
            "degree_k_vertex": self.degree_k_vertex,
            "deletable_edge": self.deletable_edge,
            "edge_cuts": {str(e): c.to_dict() for e, c in sorted(self.edge_cuts.items())},
            "first_violation": self.first_violation,
        }


def mader_checks(g: Graph, k: int) -> MaderReport:
    """Minimality plus, for minimal graphs, the three Mader properties with certificates."""
    require_kec(g, k)
    every = list(range(g.m))
    deletable = next((e for e in every if k_edge_connected(g, k, [i for i in every if i != e])), None)
    degs = g.degrees()
    report = MaderReport(
        k=k,
        is_minimal=deletable is None,
        edge_bound_holds=g.m <= k * (g.n - 1),
        degree_k_vertex=next((v for v in range(g.n) if degs[v] == k), None),
        deletable_edge=deletable,
    )
    if not report.is_minimal:
        return report
    if not report.edge_bound_holds:
        report.first_violation = f"e(G)={g.m} exceeds k(n-1)={k * (g.n - 1)}"
    elif report.degree_k_vertex is None:
        report.first_violation = "no vertex of degree k"
    for e, (a, b) in enumerate(g.edges):
        rest = [i for i in every if i != e]
        val, cut = local_edge_connectivity(g, a, b, edges=rest, certificate=True)
        full = CutCertificate(cut.cut_edges | {e}, cut.side)
        if full.size != k:
            report.first_violation = report.first_violation or f"edge {e} lies in no {k}-edge cut"
            continue
        report.edge_cuts[e] = full
    return report
