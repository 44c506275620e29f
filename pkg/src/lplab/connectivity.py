"""Vertex connectivity and internally disjoint path extraction.

Everything reduces to unit-capacity max-flow on the vertex-split
digraph: each vertex x becomes x_in -> x_out with capacity 1, and each
undirected edge {u, v} becomes the arcs u_out -> v_in and v_out -> u_in.
A flow of value k then decomposes into k internally disjoint paths.

Augmenting paths are found by BFS in ascending neighbor order, so flows,
decompositions, and fan results are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .paths import Path


class _SplitFlow:
    """Unit-vertex-capacity flow network over the split digraph.

    Node 2x is x_in, 2x+1 is x_out; extra virtual nodes may follow.
    Arcs are stored as (head, capacity-left) pairs with twin indices for
    the residual graph.
    """

    def __init__(self, nodes: int):
        self.nodes = nodes
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(nodes)]

    def add_arc(self, a: int, b: int, cap: int = 1) -> None:
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(cap)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)

    def augment(self, s: int, t: int) -> bool:
        """One BFS augmentation; lowest-numbered shortest path first."""
        prev_arc = [-1] * self.nodes
        prev_arc[s] = -2
        dq = deque([s])
        while dq:
            x = dq.popleft()
            if x == t:
                break
            for ai in self.out[x]:
                y = self.head[ai]
                if self.cap[ai] > 0 and prev_arc[y] == -1:
                    prev_arc[y] = ai
                    dq.append(y)
        if prev_arc[t] == -1:
            return False
        x = t
        while x != s:
            ai = prev_arc[x]
            self.cap[ai] -= 1
            self.cap[ai ^ 1] += 1
            x = self.head[ai ^ 1]
        return True

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit and self.augment(s, t):
            flow += 1
        return flow

    def flow_on(self, ai: int) -> int:
        # forward arcs sit at even indices; flow equals residual on the twin
        return self.cap[ai ^ 1]


def _build_split(g: Graph, extra: int = 0) -> _SplitFlow:
    net = _SplitFlow(2 * g.n + extra)
    for x in range(g.n):
        net.add_arc(2 * x, 2 * x + 1, 1)
    for u, v in g.edges:
        net.add_arc(2 * u + 1, 2 * v, 1)
        net.add_arc(2 * v + 1, 2 * u, 1)
    return net


def _decompose(net: _SplitFlow, source_vertex: int, n: int, sink_node: int) -> list[list[int]]:
    """Walk unit flow paths out of the source, lowest-numbered arc first."""
    paths = []
    while True:
        seq = [source_vertex]
        node = 2 * source_vertex + 1
        found = False
        while True:
            nxt = -1
            for ai in net.out[node]:
                if ai % 2 == 0 and net.flow_on(ai) > 0:
                    nxt = ai
                    break
            if nxt == -1:
                break
            found = True
            net.cap[nxt ^ 1] -= 1  # consume this unit
            node = net.head[nxt]
            if node == sink_node:
                break
            if node % 2 == 0 and node < 2 * n:  # an x_in node
                seq.append(node // 2)
                node += 1  # continue from x_out
        if not found:
            return paths
        paths.append(seq)


def vertex_connectivity(g: Graph) -> int:
    """Largest k such that every vertex pair is joined by k internally
    disjoint paths.

    Computed as the minimum over non-adjacent pairs of the max number of
    vertex-disjoint paths between them; complete graphs return n - 1 by
    convention.
    """
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if g.is_complete():
        return g.n - 1
    best = g.n - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            net = _build_split(g)
            best = min(best, net.max_flow(2 * u + 1, 2 * v, best + 1))
            if best == 0:
                return 0
    return best


def brute_force_vertex_connectivity(g: Graph, max_n: int = 14) -> int:
    """Oracle: smallest vertex cut by exhaustive subset search.

    Exponential; refuses graphs larger than max_n vertices.
    """
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if g.n > max_n:
        raise ValueError(f"brute-force connectivity limited to n <= {max_n}")
    if g.is_complete():
        return g.n - 1
    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            if _disconnected_without(g, set(cut)):
                return size
    return g.n - 1


def _disconnected_without(g: Graph, removed: set[int]) -> bool:
    left = [x for x in range(g.n) if x not in removed]
    if len(left) < 2:
        return False
    seen = {left[0]}
    dq = deque([left[0]])
    while dq:
        x = dq.popleft()
        for y in g.neighbors(x):
            if y not in removed and y not in seen:
                seen.add(y)
                dq.append(y)
    return len(seen) < len(left)


def disjoint_paths(g: Graph, u: int, v: int, k: int) -> list[Path] | None:
    """k pairwise internally disjoint u-v paths, or None when max-flow < k."""
    if u == v:
        raise ValueError("endpoints must differ")
    if k < 1:
        raise ValueError("k must be positive")
    net = _build_split(g)
    if net.max_flow(2 * u + 1, 2 * v, k) < k:
        return None
    raw = _decompose(net, u, g.n, 2 * v)
    return [Path(g, seq + [v]) for seq in raw[:k]]


@dataclass(frozen=True)
class FanResult:
    """k paths from a center vertex into a target set, pairwise meeting
    only at the center and with no internal vertex in the target set."""

    center: int
    targets: frozenset[int]
    paths: tuple[Path, ...]

    def validate(self) -> None:
        for p in self.paths:
            if p.vertices[0] != self.center:
                raise ValueError(f"fan path {p} does not start at the center")
            if p.vertices[-1] not in self.targets:
                raise ValueError(f"fan path {p} does not end in the target set")
            inner = set(p.vertices[1:-1])
            if inner & (self.targets | {self.center}):
                raise ValueError(f"fan path {p} has an internal vertex in S or the center")
        for a, b in combinations(self.paths, 2):
            if a.vertex_set & b.vertex_set != {self.center}:
                raise ValueError(f"fan paths {a} and {b} meet outside the center")


def fan(g: Graph, v: int, s: set[int] | frozenset[int], k: int) -> FanResult | None:
    """k internally disjoint paths from v into S, or None if flow < k.

    Flow variant: S vertices lose their pass-through arc and feed a
    virtual sink, so they can only terminate paths.
    """
    s = frozenset(s)
    if v in s:
        raise ValueError("center vertex must not lie in the target set")
    if len(s) < k:
        raise ValueError(f"target set smaller than k ({len(s)} < {k})")
    if k < 1:
        raise ValueError("k must be positive")
    sink = 2 * g.n
    net = _SplitFlow(2 * g.n + 1)
    for x in range(g.n):
        if x in s:
            net.add_arc(2 * x, 2 * x + 1, 0)  # no passing through targets
            net.add_arc(2 * x, sink, 1)
        else:
            net.add_arc(2 * x, 2 * x + 1, 1)
    for a, b in g.edges:
        net.add_arc(2 * a + 1, 2 * b, 1)
        net.add_arc(2 * b + 1, 2 * a, 1)
    if net.max_flow(2 * v + 1, sink, k) < k:
        return None
    raw = _decompose(net, v, g.n, sink)
    result = FanResult(center=v, targets=s, paths=tuple(Path(g, seq) for seq in raw[:k]))
    result.validate()
    return result
