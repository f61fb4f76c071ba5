"""Simple undirected graphs, graph6/edge-list I/O, generators and edge connectivity.

Vertices are ``0..n-1``.  Edges are identified by their position in
``Graph.edges``; every routine that takes an ``edges`` argument treats it as a
spanning edge subset of the same vertex set, so edge indices never shift.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = []
        seen = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside 0..{self.n - 1}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphError(f"duplicate edge {u}-{v}")
            seen.add((u, v))
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, ``(neighbour, edge index)`` pairs in edge-index order."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(x) for x in inc)

    def edge_id(self, u: int, v: int) -> int:
        return self.index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.index

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self.n, self.edges + ((u, v),))

    def induced_by_edges(self, edge_ids: Iterable[int]) -> tuple[Graph, list[int]]:
        """Compact graph on the vertices touched by ``edge_ids``.

        Edge ``t`` of the result is the ``t``-th smallest of ``edge_ids``.
        Returns the graph and the list mapping its vertex labels back to ours.
        """
        ids = sorted(set(edge_ids))
        verts = sorted({x for i in ids for x in self.edges[i]})
        relabel = {v: j for j, v in enumerate(verts)}
        sub = Graph(len(verts), tuple((relabel[self.edges[i][0]], relabel[self.edges[i][1]]) for i in ids))
        return sub, verts

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], sort: bool = False) -> Graph:
        es = [(min(u, v), max(u, v)) for u, v in edges]
        if sort:
            es.sort()
        return cls(n, tuple(es))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class CutCertificate:
    """An edge cut: all edges with exactly one endpoint in ``side``."""

    cut_edges: frozenset[int]
    side: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.cut_edges)

    def to_dict(self) -> dict:
        return {"cut_edges": sorted(self.cut_edges), "side": sorted(self.side)}


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple[frozenset[int], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in blocks))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> VertexPartition:
        groups: dict[int, list[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        return cls(groups[k] for k in sorted(groups))

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise GraphError("empty block in partition")
            if b & seen:
                raise GraphError("partition blocks overlap")
            if any(not 0 <= v < n for v in b):
                raise GraphError("partition mentions a vertex outside the graph")
            seen |= b
        if len(seen) != n:
            raise GraphError("partition does not cover every vertex")

    def __len__(self) -> int:
        return len(self.blocks)

    def to_list(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]


# --------------------------------------------------------------------------
# graph6 and edge-list formats


def _n_header(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.index else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for p in range(0, len(bits), 6):
        x = 0
        for b in bits[p:p + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    return _n_header(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.  Edges come back in lexicographic order."""
    s = text.strip("\r\n")
    offset = 0
    if s.startswith(">>graph6<<"):
        offset = len(">>graph6<<")
    for i in range(offset, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"byte {ord(s[i])!r} is outside the printable graph6 range", i)
    if offset >= len(s):
        raise Graph6Error("missing vertex-count header", offset)

    def val(i: int) -> int:
        if i >= len(s):
            raise Graph6Error("truncated vertex-count header", i)
        return ord(s[i]) - 63

    if s[offset] != "~":
        n, pos = val(offset), offset + 1
    elif offset + 1 < len(s) and s[offset + 1] == "~":
        n = 0
        for i in range(offset + 2, offset + 8):
            n = (n << 6) | val(i)
        pos = offset + 8
    else:
        n = 0
        for i in range(offset + 1, offset + 4):
            n = (n << 6) | val(i)
        pos = offset + 4
        if n < 63:
            raise Graph6Error("long vertex-count form used for a small graph", offset)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, found {len(s) - pos}", len(s))
    if len(s) - pos > nbytes:
        raise Graph6Error("trailing data after adjacency bytes", pos + nbytes)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[pos + k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    edges.sort()
    return Graph(n, tuple(edges))


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"edge list contains a non-integer token: {exc}") from None
    if len(nums) < 2:
        raise GraphError("edge list needs a header 'n m'")
    n, m = nums[0], nums[1]
    if len(nums) != 2 + 2 * m:
        raise GraphError(f"edge list header promises {m} edges, found {(len(nums) - 2) / 2:g}")
    return Graph(n, tuple((nums[2 + 2 * i], nums[3 + 2 * i]) for i in range(m)))


def read_graph(text: str) -> Graph:
    """Accept either an edge list or a single graph6 line."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty graph file")
    first = lines[0].split()
    if len(first) == 2 and all(t.lstrip("-").isdigit() for t in first):
        return parse_edge_list(text)
    if len(lines) != 1:
        raise GraphError("graph6 graph file must hold exactly one line")
    return parse_graph6(lines[0].strip())


def read_graph6_corpus(text: str) -> list[Graph]:
    """One graph6 string per line; duplicate strings are dropped."""
    seen = set()
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line in seen:
            continue
        seen.add(line)
        out.append(parse_graph6(line))
    return out


# --------------------------------------------------------------------------
# Max-flow with unit capacities on undirected edges


def _allowed(g: Graph, edges: Iterable[int] | None) -> list[bool] | None:
    if edges is None:
        return None
    mask = [False] * g.m
    for i in edges:
        mask[i] = True
    return mask


def _max_flow(g: Graph, u: int, v: int, mask: list[bool] | None, limit: int | None):
    """Edmonds-Karp on the undirected unit network.

    ``flow[e]`` is +1 when edge ``e=(a,b)`` carries a unit from a to b, -1 for
    b to a.  Returns the flow value and the set of vertices reachable from
    ``u`` in the final residual graph (only meaningful when not truncated).
    """
    inc = g.incidence
    edges = g.edges
    flow = [0] * g.m
    value = 0
    while limit is None or value < limit:
        parent: dict[int, tuple[int, int]] = {u: (-1, -1)}
        queue = deque([u])
        found = False
        while queue and not found:
            x = queue.popleft()
            for y, e in inc[x]:
                if y in parent or (mask is not None and not mask[e]):
                    continue
                f = flow[e] if edges[e][0] == x else -flow[e]
                if f >= 1:
                    continue
                parent[y] = (x, e)
                if y == v:
                    found = True
                    break
                queue.append(y)
        if not found:
            return value, frozenset(parent)
        y = v
        while y != u:
            x, e = parent[y]
            flow[e] += 1 if edges[e][0] == x else -1
            y = x
        value += 1
    return value, None


def _cut_from_side(g: Graph, side: frozenset[int], mask: list[bool] | None) -> CutCertificate:
    cut = frozenset(
        i for i, (a, b) in enumerate(g.edges)
        if (mask is None or mask[i]) and ((a in side) != (b in side))
    )
    return CutCertificate(cut, side)


def local_edge_connectivity(
    g: Graph,
    u: int,
    v: int,
    *,
    edges: Iterable[int] | None = None,
    certificate: bool = False,
    limit: int | None = None,
):
    """Maximum number of pairwise edge-disjoint u-v paths.

    With ``certificate=True`` returns ``(value, CutCertificate)``.  ``limit``
    stops augmenting once that many paths are found (no certificate then).
    """
    if u == v:
        raise GraphError("local edge connectivity needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("vertex out of range")
    mask = _allowed(g, edges)
    value, side = _max_flow(g, u, v, mask, None if certificate else limit)
    if not certificate:
        return value
    return value, _cut_from_side(g, side, mask)


def components(g: Graph, edges: Iterable[int] | None = None) -> list[list[int]]:
    mask = _allowed(g, edges)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y, e in g.incidence[x]:
                if not seen[y] and (mask is None or mask[e]):
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph, edges: Iterable[int] | None = None) -> bool:
    return g.n <= 1 or len(components(g, edges)) == 1


def edge_connectivity(g: Graph, edges: Iterable[int] | None = None) -> tuple[int, CutCertificate | None]:
    """Global edge connectivity and a minimum cut (``None`` when n < 2)."""
    if g.n < 2:
        return 0, None
    edges = None if edges is None else list(edges)
    comps = components(g, edges)
    if len(comps) > 1:
        return 0, CutCertificate(frozenset(), frozenset(comps[0]))
    best = None
    for v in range(1, g.n):
        val, cut = local_edge_connectivity(g, 0, v, edges=edges, certificate=True)
        if best is None or val < best[0]:
            best = (val, cut)
    return best


def is_k_edge_connected(
    g: Graph, k: int, edges: Iterable[int] | None = None
) -> tuple[bool, CutCertificate | None]:
    """``(True, None)`` or ``(False, cut of size < k)``.

    A single vertex is never k-edge-connected; its certificate is ``None``.
    """
    if k < 1:
        raise GraphError("k must be positive")
    if g.n < 2:
        return False, None
    edges = None if edges is None else list(edges)
    comps = components(g, edges)
    if len(comps) > 1:
        return False, CutCertificate(frozenset(), frozenset(comps[0]))
    for v in range(1, g.n):
        val = local_edge_connectivity(g, 0, v, edges=edges, limit=k)
        if val < k:
            _, cut = local_edge_connectivity(g, 0, v, edges=edges, certificate=True)
            return False, cut
    return True, None


def k_edge_connected(g: Graph, k: int, edges: Iterable[int] | None = None) -> bool:
    return is_k_edge_connected(g, k, edges)[0]


# --------------------------------------------------------------------------
# Blocks and partitions


def blocks(g: Graph) -> list[frozenset[int]]:
    """Biconnected blocks as edge-index sets, ordered by smallest edge index."""
    if not is_connected(g):
        raise GraphError("blocks() requires a connected graph")
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[frozenset[int]] = []
    stack: list[int] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # iterative DFS frames: (vertex, edge used to enter, iterator position)
        frames = [(root, -1, 0)]
        while frames:
            x, pe, pos = frames[-1]
            inc = g.incidence[x]
            if pos < len(inc):
                frames[-1] = (x, pe, pos + 1)
                y, e = inc[pos]
                if e == pe:
                    continue
                if disc[y] == -1:
                    stack.append(e)
                    disc[y] = low[y] = timer
                    timer += 1
                    frames.append((y, e, 0))
                elif disc[y] < disc[x]:
                    stack.append(e)
                    low[x] = min(low[x], disc[y])
            else:
                frames.pop()
                if frames:
                    p = frames[-1][0]
                    low[p] = min(low[p], low[x])
                    if low[x] >= disc[p]:
                        comp = []
                        while True:
                            f = stack.pop()
                            comp.append(f)
                            if f == pe:
                                break
                        out.append(frozenset(comp))
    out.sort(key=min)
    return out


def shrink_cross_edges(g: Graph, partition: VertexPartition) -> int:
    """Edges of ``g`` whose endpoints lie in different blocks of ``partition``."""
    partition.validate(g.n)
    label = [0] * g.n
    for i, b in enumerate(partition.blocks):
        for v in b:
            label[v] = i
    return sum(1 for a, b in g.edges if label[a] != label[b])


# --------------------------------------------------------------------------
# Generators


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides non-empty")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], sort=True)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner, sort=True)


def cactus(spec: Sequence[tuple[int, int]]) -> Graph:
    """Glue cycles (and bridges) at existing vertices.

    ``spec`` is a sequence of ``(length, anchor)``.  The first piece starts at
    vertex 0 and its anchor is ignored; every later piece shares only its
    anchor with what was built so far.  ``length >= 3`` adds a cycle through
    ``length - 1`` new vertices; ``length == 2`` adds a bridge to one new
    vertex.  Without length-2 pieces the result has no cut edge.
    """
    if not spec:
        raise GraphError("cactus spec is empty")
    n = 1
    edges: list[Edge] = []
    for idx, (length, anchor) in enumerate(spec):
        if length < 2:
            raise GraphError("cactus pieces need length >= 2")
        if idx == 0:
            anchor = 0
        if not 0 <= anchor < n:
            raise GraphError(f"cactus anchor {anchor} does not exist yet")
        new = list(range(n, n + length - 1))
        n += length - 1
        walk = [anchor] + new
        edges.extend(zip(walk, walk[1:]))
        if length >= 3:
            edges.append((walk[-1], anchor))
    return Graph.from_edges(n, edges, sort=True)


def random_kec(n: int, k: int, seed: int, max_tries: int = 100_000) -> Graph:
    """Seeded Erdos-Renyi sampling, resampled until k-edge-connected."""
    if n < 2 or k < 1 or k >= n:
        raise GraphError(f"no k-edge-connected simple graph with n={n}, k={k}")
    rng = random.Random(seed)
    p = min(1.0, (k + 2) * math.log(n) / n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(max_tries):
        g = Graph(n, tuple(e for e in pairs if rng.random() < p))
        if k_edge_connected(g, k):
            return g
    raise GraphError("random_kec gave up; parameters are effectively unsatisfiable")


def random_connected(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    while True:
        g = Graph(n, tuple(e for e in pairs if rng.random() < p))
        if is_connected(g):
            return g


FAMILIES = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path,
    "petersen": petersen,
    "cactus": cactus,
    "random_kec": random_kec,
}


def generate(family: str, *args, **kwargs) -> Graph:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown graph family {family!r}") from None
    return fn(*args, **kwargs)


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on exactly ``n`` vertices, one per isomorphism class."""
    import networkx as nx

    if not 1 <= n <= 7:
        raise GraphError("the graph atlas covers 1 <= n <= 7")
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and nx.is_connected(h):
            yield Graph.from_edges(n, h.edges(), sort=True)


def graph_corpus(n_max: int, k: int, n_min: int = 2) -> list[Graph]:
    """Every k-edge-connected graph with ``n_min <= n <= n_max`` vertices."""
    return [g for n in range(n_min, n_max + 1) for g in connected_graphs(n) if k_edge_connected(g, k)]
