"""Edge-disjoint spanning tree packing and the partition bound psi(G)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .coloring import EdgeColoring
from .graph import Graph, GraphError, VertexPartition, is_connected, shrink_cross_edges
from .kecss import BudgetExceeded


@dataclass(frozen=True)
class TreePacking:
    trees: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.trees)

    def validate(self, g: Graph) -> None:
        used: set[int] = set()
        for t in self.trees:
            if len(t) != g.n - 1:
                raise AssertionError(f"tree has {len(t)} edges, expected {g.n - 1}")
            if t & used:
                raise AssertionError("trees share an edge")
            used |= t
            if not is_connected(g, t):
                raise AssertionError("tree does not span the graph")

    def to_dict(self) -> dict:
        return {"k": self.k, "trees": [sorted(t) for t in self.trees]}


@dataclass(frozen=True)
class PsiResult:
    psi: Fraction
    witness: VertexPartition

    @property
    def Psi(self) -> int:
        return self.psi.numerator // self.psi.denominator

    def to_dict(self) -> dict:
        return {
            "psi": f"{self.psi.numerator}/{self.psi.denominator}",
            "Psi": self.Psi,
            "witness": self.witness.to_list(),
        }


# --------------------------------------------------------------------------
# Forest packing by matroid-partition augmentation


def _forest_path(g: Graph, in_forest: list[bool], a: int, b: int) -> list[int] | None:
    """Edge indices on the a-b path of the forest marked by ``in_forest``."""
    parent = {a: (-1, -1)}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y, e in g.incidence[x]:
            if in_forest[e] and y not in parent:
                parent[y] = (x, e)
                queue.append(y)
    if b not in parent:
        return None
    out = []
    y = b
    while y != a:
        x, e = parent[y]
        out.append(e)
        y = x
    return out


def _insert(g: Graph, owner: list[int], k: int, e: int) -> bool:
    """Try to add edge ``e`` to the packing of ``k`` forests; BFS over exchanges."""
    members = [[owner[i] == f for i in range(g.m)] for f in range(k)]
    label: dict[int, tuple[int, int] | None] = {e: None}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        a, b = g.edges[x]
        for f in range(k):
            if owner[x] == f:
                continue
            cyc = _forest_path(g, members[f], a, b)
            if cyc is None:
                # x slots into forest f; unwind the exchange chain
                owner[x] = f
                while label[x] is not None:
                    prev, pf = label[x]
                    owner[prev] = pf
                    x = prev
                return True
            for y in sorted(cyc):
                if y not in label:
                    label[y] = (x, f)
                    queue.append(y)
    return False


def pack_forests(g: Graph, k: int) -> list[frozenset[int]]:
    """A maximum-size union of ``k`` edge-disjoint forests (edges tried in index order)."""
    owner = [-1] * g.m
    for e in range(g.m):
        _insert(g, owner, k, e)
    return [frozenset(i for i in range(g.m) if owner[i] == f) for f in range(k)]


def tree_packing_number(g: Graph) -> tuple[int, TreePacking]:
    """Maximum number of edge-disjoint spanning trees, with the trees."""
    if g.n < 2:
        raise GraphError("tree packing needs at least two vertices")
    if not is_connected(g):
        raise GraphError("tree packing needs a connected graph")
    best = TreePacking(())
    k = 1
    while k * (g.n - 1) <= g.m:
        forests = pack_forests(g, k)
        if sum(map(len, forests)) < k * (g.n - 1):
            break
        best = TreePacking(tuple(forests))
        k += 1
    best.validate(g)
    return best.k, best


# --------------------------------------------------------------------------
# psi via set-partition enumeration


def restricted_growth_strings(n: int) -> Iterator[list[int]]:
    """All restricted growth strings of length n in lexicographic order."""
    if n == 0:
        yield []
        return
    a = [0] * n
    maxes = [0] * n  # maxes[i] = max(a[0..i-1]), with maxes[0] = -1 sentinel unused
    while True:
        yield a[:]
        i = n - 1
        while i > 0 and a[i] > maxes[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(maxes[i], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            maxes[j] = top


def psi_oracle(g: Graph, max_n: int = 12) -> PsiResult:
    """min over partitions with >= 2 blocks of cross edges / (blocks - 1), exactly."""
    if g.n > max_n:
        raise BudgetExceeded(f"n={g.n} exceeds the partition-enumeration budget of {max_n}")
    if g.n < 2:
        raise GraphError("psi needs at least two vertices")
    if not is_connected(g):
        raise GraphError("psi needs a connected graph")
    best: tuple[Fraction, list[int]] | None = None
    for labels in restricted_growth_strings(g.n):
        p = max(labels) + 1
        if p < 2:
            continue
        cross = sum(1 for a, b in g.edges if labels[a] != labels[b])
        val = Fraction(cross, p - 1)
        if best is None or val < best[0]:
            best = (val, labels)
    return PsiResult(best[0], VertexPartition.from_labels(best[1]))


def packing_coloring(g: Graph, k: int) -> EdgeColoring:
    """Tree i gets color i; every other edge gets its own color."""
    if k < 2:
        raise GraphError("packing coloring needs k >= 2")
    number, packing = tree_packing_number(g)
    if number < k:
        raise GraphError(f"graph has only {number} edge-disjoint spanning trees, need {k}")
    colors = [-1] * g.m
    for c, tree in enumerate(packing.trees[:k]):
        for e in tree:
            colors[e] = c
    fresh = k
    for e in range(g.m):
        if colors[e] == -1:
            colors[e] = fresh
            fresh += 1
    return EdgeColoring.from_colors(colors)


def shrink_ratio(g: Graph, partition: VertexPartition) -> Fraction:
    if len(partition) < 2:
        raise GraphError("ratio needs a partition with at least two blocks")
    return Fraction(shrink_cross_edges(g, partition), len(partition) - 1)
