"""Edge colorings and the MC_k / UMC_k verifiers.

Monochromatic paths of different colors never share an edge, and a
monochromatic path lives inside its color class, so the largest family of
edge-disjoint monochromatic u-v paths is the sum over classes of each
class's local edge connectivity.  The verifiers are built on that identity.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, GraphError

MC = "mc"
UMC = "umc"


class ColoringError(ValueError):
    pass


def normalize(colors: Iterable[int]) -> tuple[int, ...]:
    """Relabel colors 0..t-1 in order of first appearance."""
    remap: dict[int, int] = {}
    return tuple(remap.setdefault(c, len(remap)) for c in colors)


@dataclass(frozen=True)
class EdgeColoring:
    assignment: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(c) for c in self.assignment)
        if not a:
            raise ColoringError("a coloring needs at least one edge")
        if a != normalize(a):
            raise ColoringError("color ids must be normalized (first-occurrence order 0..t-1)")
        object.__setattr__(self, "assignment", a)

    @classmethod
    def from_colors(cls, colors: Iterable[int]) -> EdgeColoring:
        colors = list(colors)
        if any(c < 0 for c in colors):
            raise ColoringError("color ids must be non-negative")
        return cls(normalize(colors))

    @classmethod
    def from_classes(cls, m: int, classes: Iterable[Iterable[int]]) -> EdgeColoring:
        colors = [-1] * m
        for c, cls_edges in enumerate(classes):
            for e in cls_edges:
                if colors[e] != -1:
                    raise ColoringError(f"edge {e} assigned twice")
                colors[e] = c
        if -1 in colors:
            raise ColoringError(f"edge {colors.index(-1)} has no color")
        return cls.from_colors(colors)

    @classmethod
    def monochromatic(cls, m: int) -> EdgeColoring:
        return cls((0,) * m)

    @classmethod
    def rainbow(cls, m: int) -> EdgeColoring:
        return cls(tuple(range(m)))

    @property
    def m(self) -> int:
        return len(self.assignment)

    @property
    def num_colors(self) -> int:
        return max(self.assignment) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for e, c in enumerate(self.assignment):
            out[c].append(e)
        return out

    def to_line(self) -> str:
        return " ".join(map(str, self.assignment))


def parse_coloring(text: str, m: int | None = None, warn=None) -> EdgeColoring:
    """Read the one-line coloring format; renormalizes (with a warning) if needed."""
    try:
        colors = [int(t) for t in text.split()]
    except ValueError:
        raise ColoringError("coloring file must hold whitespace-separated integers") from None
    if m is not None and len(colors) != m:
        raise ColoringError(f"coloring has {len(colors)} entries but the graph has {m} edges")
    if any(c < 0 for c in colors):
        raise ColoringError("color ids must be non-negative")
    if not colors:
        raise ColoringError("empty coloring")
    norm = normalize(colors)
    if tuple(colors) != norm:
        (warn or (lambda msg: print(f"warning: {msg}", file=sys.stderr)))(
            "coloring was not normalized; colors relabelled in first-occurrence order"
        )
    return EdgeColoring(norm)


@dataclass(frozen=True)
class ColorClass:
    color: int
    edges: frozenset[int]
    vertices: frozenset[int]

    @property
    def trivial(self) -> bool:
        return len(self.edges) == 1


def _check(g: Graph, c: EdgeColoring) -> None:
    if c.m != g.m:
        raise ColoringError(f"coloring covers {c.m} edges, graph has {g.m}")


def color_classes(g: Graph, c: EdgeColoring) -> list[ColorClass]:
    _check(g, c)
    return [
        ColorClass(i, frozenset(es), frozenset(x for e in es for x in g.edges[e]))
        for i, es in enumerate(c.classes())
    ]


class ClassNetwork:
    """Per-class incidence lists for repeated path counting on one coloring."""

    __slots__ = ("edges", "inc", "deg")

    def __init__(self, g: Graph, classes: Sequence[Sequence[int]]):
        self.edges = g.edges
        self.inc: list[dict[int, list[tuple[int, int]]]] = []
        self.deg: list[dict[int, int]] = []
        for es in classes:
            inc: dict[int, list[tuple[int, int]]] = {}
            for e in es:
                a, b = g.edges[e]
                inc.setdefault(a, []).append((b, e))
                inc.setdefault(b, []).append((a, e))
            self.inc.append(inc)
            self.deg.append({x: len(v) for x, v in inc.items()})

    def paths(self, i: int, u: int, v: int, limit: int | None = None) -> int:
        """Edge-disjoint u-v paths inside class ``i`` (augmenting paths)."""
        inc = self.inc[i]
        if u not in inc or v not in inc:
            return 0
        cap = min(len(inc[u]), len(inc[v]))
        if limit is not None:
            cap = min(cap, limit)
        edges = self.edges
        flow: dict[int, int] = {}
        value = 0
        while value < cap:
            parent = {u: None}
            queue = deque([u])
            found = False
            while queue and not found:
                x = queue.popleft()
                for y, e in inc[x]:
                    if y in parent:
                        continue
                    f = flow.get(e, 0)
                    if edges[e][0] != x:
                        f = -f
                    if f >= 1:
                        continue
                    parent[y] = (x, e)
                    if y == v:
                        found = True
                        break
                    queue.append(y)
            if not found:
                break
            y = v
            while y != u:
                x, e = parent[y]
                flow[e] = flow.get(e, 0) + (1 if edges[e][0] == x else -1)
                y = x
            value += 1
        return value

    def per_color(self, u: int, v: int) -> list[int]:
        return [self.paths(i, u, v) for i in range(len(self.inc))]

    def mc_ok(self, u: int, v: int, k: int) -> bool:
        # cheap degree bound first
        bound = 0
        for d in self.deg:
            du, dv = d.get(u, 0), d.get(v, 0)
            bound += du if du < dv else dv
        if bound < k:
            return False
        total = 0
        for i in range(len(self.inc)):
            total += self.paths(i, u, v, k - total)
            if total >= k:
                return True
        return False

    def umc_ok(self, u: int, v: int, k: int) -> bool:
        for i, d in enumerate(self.deg):
            if d.get(u, 0) >= k and d.get(v, 0) >= k and self.paths(i, u, v, k) >= k:
                return True
        return False


def count_monochromatic_paths(g: Graph, c: EdgeColoring, u: int, v: int) -> tuple[int, list[int]]:
    """Total and per-color counts of edge-disjoint monochromatic u-v paths."""
    _check(g, c)
    if u == v:
        raise GraphError("path counting needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("vertex out of range")
    per = ClassNetwork(g, c.classes()).per_color(u, v)
    return sum(per), per


@dataclass
class VerificationReport:
    mode: str
    k: int
    passed: bool
    num_colors: int
    pairs_checked: int
    witness: tuple[int, int] | None = None
    per_color: list[int] | None = None
    total: int | None = None
    pair_summaries: list[dict] | None = field(default=None)

    def to_dict(self) -> dict:
        d = {
            "mode": self.mode,
            "k": self.k,
            "pass": self.passed,
            "num_colors": self.num_colors,
            "pairs_checked": self.pairs_checked,
        }
        if not self.passed:
            d["witness"] = list(self.witness)
            d["per_color"] = self.per_color
            d["total"] = self.total
        if self.pair_summaries is not None:
            d["pairs"] = self.pair_summaries
        return d


def _verify(g: Graph, c: EdgeColoring, k: int, mode: str, summaries: bool) -> VerificationReport:
    _check(g, c)
    if k < 1:
        raise ColoringError("k must be positive")
    net = ClassNetwork(g, c.classes())
    ok = net.mc_ok if mode == MC else net.umc_ok
    checked = 0
    rows = [] if summaries else None
    for u, v in combinations(range(g.n), 2):
        checked += 1
        if not ok(u, v, k):
            per = net.per_color(u, v)
            return VerificationReport(mode, k, False, c.num_colors, checked, (u, v), per, sum(per))
        if summaries:
            per = net.per_color(u, v)
            rows.append({"pair": [u, v], "per_color": per, "total": sum(per)})
    if g.n < 2:
        # no pair exists, so there is nothing to connect; treat as failure
        return VerificationReport(mode, k, False, c.num_colors, 0, (0, 0), [], 0)
    return VerificationReport(mode, k, True, c.num_colors, checked, pair_summaries=rows)


def is_mc_k(g: Graph, c: EdgeColoring, k: int, summaries: bool = False) -> VerificationReport:
    """Every pair joined by >= k edge-disjoint monochromatic paths (colors may differ)."""
    return _verify(g, c, k, MC, summaries)


def is_umc_k(g: Graph, c: EdgeColoring, k: int, summaries: bool = False) -> VerificationReport:
    """Every pair joined by >= k edge-disjoint paths all of one (pair-dependent) color."""
    return _verify(g, c, k, UMC, summaries)


def verify(g: Graph, c: EdgeColoring, k: int, mode: str = MC) -> VerificationReport:
    if mode not in (MC, UMC):
        raise ColoringError(f"unknown mode {mode!r}")
    return _verify(g, c, k, mode, False)


def classes_feasible(g: Graph, classes: Sequence[Sequence[int]], k: int, mode: str) -> bool:
    """Fast yes/no verifier over raw edge classes (no normalization, no report)."""
    net = ClassNetwork(g, classes)
    ok = net.mc_ok if mode == MC else net.umc_ok
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            if not ok(u, v, k):
                return False
    return n >= 2
