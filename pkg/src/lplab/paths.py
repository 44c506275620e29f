"""Path algebra: subpaths, intersections, endpoint rotation, and the
two-path exchange surgery.

A Path is an ordered repetition-free vertex sequence whose consecutive
vertices are adjacent in a host graph. A path and its reversal are the
same object; the canonical orientation is the lexicographically smaller
of the two sequences.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph


class PathError(ValueError):
    pass


class Path:
    """Simple path in a host graph. Immutable."""

    __slots__ = ("graph", "vertices")

    def __init__(self, graph: Graph, vertices: Iterable[int]):
        seq = tuple(vertices)
        if not seq:
            raise PathError("a path has at least one vertex")
        seen = set()
        for v in seq:
            if not (0 <= v < graph.n):
                raise PathError(f"vertex {v} out of range [0,{graph.n})")
            if v in seen:
                raise PathError(f"vertex {v} repeats")
            seen.add(v)
        for a, b in zip(seq, seq[1:]):
            if not graph.has_edge(a, b):
                raise PathError(f"consecutive vertices {a},{b} are not adjacent")
        self.graph = graph
        self.vertices = seq

    def __len__(self) -> int:
        """Length in edges."""
        return len(self.vertices) - 1

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    @property
    def extremes(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def canonical(self) -> tuple[int, ...]:
        rev = self.vertices[::-1]
        return min(self.vertices, rev)

    def reversed(self) -> "Path":
        return Path(self.graph, self.vertices[::-1])

    def index(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise PathError(f"vertex {v} is not on the path") from None

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __eq__(self, other: object) -> bool:
        """Equality up to reversal, within the same host graph."""
        if not isinstance(other, Path):
            return NotImplemented
        return self.graph == other.graph and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return f"Path({list(self.vertices)})"


def subpath(p: Path, x: int, y: int) -> Path:
    """The segment of p between on-path vertices x and y, inclusive."""
    i, j = p.index(x), p.index(y)
    if i <= j:
        return Path(p.graph, p.vertices[i : j + 1])
    return Path(p.graph, p.vertices[j : i + 1][::-1])


def dist_on_path(p: Path, x: int, y: int) -> int:
    """Edge count of the segment of p between x and y."""
    return abs(p.index(x) - p.index(y))


def intersection(p: Path, q: Path) -> frozenset[int]:
    """Vertex intersection of two paths in the same host graph."""
    if p.graph != q.graph:
        raise PathError("paths live in different graphs")
    return p.vertex_set & q.vertex_set


def posa_rotate(q: Path, r: int) -> Path:
    """Rotate at the sequence-front endpoint.

    With front endpoint e = q.vertices[0] and an on-path graph-neighbor r
    of e that is not e's successor, returns the path that replaces the
    edge between r and its e-side neighbor r' with the chord (e, r).
    The result keeps the vertex set and length; r' becomes the new front
    endpoint. Callers reverse first to rotate at the other end.
    """
    if len(q.vertices) < 3:
        raise PathError("path too short to rotate")
    e = q.vertices[0]
    i = q.index(r)  # raises if r is off the path
    if not q.graph.has_edge(e, r):
        raise PathError(f"{r} is not a graph-neighbor of the endpoint {e}")
    if i == 1:
        raise PathError(f"{r} is the successor of the endpoint; rotation is degenerate")
    rotated = q.vertices[i - 1 :: -1] + q.vertices[i:]
    return Path(q.graph, rotated)


@dataclass(frozen=True)
class ExchangeConfig:
    """A crossing configuration of two paths joined by an outside bridge.

    u is shared by p and q; v lies on p only, w on q only; the segment
    p[u,v] avoids q internally, q[u,w] avoids p internally, and the
    bridge r runs from v to w with no internal vertex on either path.
    """

    p: Path
    q: Path
    u: int
    v: int
    w: int
    r: Path

    def validate(self) -> None:
        pv, qv = self.p.vertex_set, self.q.vertex_set
        if self.u not in pv or self.u not in qv:
            raise PathError(f"u={self.u} must lie on both paths")
        if self.v not in pv or self.v in qv:
            raise PathError(f"v={self.v} must lie on p only")
        if self.w not in qv or self.w in pv:
            raise PathError(f"w={self.w} must lie on q only")
        seg_p = subpath(self.p, self.u, self.v)
        if set(seg_p.vertices[1:-1]) & qv:
            raise PathError("segment p[u,v] meets q internally")
        seg_q = subpath(self.q, self.u, self.w)
        if set(seg_q.vertices[1:-1]) & pv:
            raise PathError("segment q[u,w] meets p internally")
        if self.r.extremes not in ((self.v, self.w), (self.w, self.v)):
            raise PathError("bridge r must run from v to w")
        if set(self.r.vertices[1:-1]) & (pv | qv):
            raise PathError("bridge r meets p or q internally")


def _oriented(p: Path, a: int, b: int) -> tuple[int, ...]:
    """Vertices of p's segment walked from a to b."""
    i, j = p.index(a), p.index(b)
    if i <= j:
        return p.vertices[i : j + 1]
    return p.vertices[j : i + 1][::-1]


def exchange(cfg: ExchangeConfig) -> tuple[Path, Path]:
    """Swap the u-side tails of the two paths through the bridge.

    Returns (p', q') with |p'| + |q'| = |p| + |q| + 2|r| exactly: each
    path gives up the segment between u and its private bridge endpoint
    and gains the other path's segment plus the bridge.
    """
    cfg.validate()
    p, q, u, v, w, r = cfg.p, cfg.q, cfg.u, cfg.v, cfg.w, cfg.r
    # far extreme of a path: the one on the opposite side of u from x
    far_p = p.vertices[0] if p.index(u) < p.index(v) else p.vertices[-1]
    far_q = q.vertices[0] if q.index(u) < q.index(w) else q.vertices[-1]
    first = _oriented(p, far_p, u) + _oriented(q, u, w)[1:] + _oriented(r, w, v)[1:]
    second = _oriented(q, far_q, u) + _oriented(p, u, v)[1:] + _oriented(r, v, w)[1:]
    try:
        out = Path(p.graph, first), Path(p.graph, second)
    except PathError as exc:
        raise PathError(f"exchange produced an invalid sequence ({exc}); config is non-conforming") from exc
    if len(out[0]) + len(out[1]) != len(p) + len(q) + 2 * len(r):
        raise PathError("exchange produced inconsistent lengths; config is non-conforming")
    return out


def find_exchange_config(p: Path, q: Path) -> ExchangeConfig | None:
    """Exhaustively search for a valid exchange configuration.

    Scans shared vertices u, private vertices v of p and w of q whose
    u-segments avoid the other path, then looks for a v-w bridge through
    outside vertices by breadth-first search (shortest bridge, lowest
    vertex numbers first). Returns the first configuration found, or
    None. When p and q are both longest paths the result is always None;
    a hit would let the exchange build a longer path.
    """
    if p.graph != q.graph:
        raise PathError("paths live in different graphs")
    shared = intersection(p, q)
    if not shared:
        raise PathError("paths share no vertex")
    g = p.graph
    pv, qv = p.vertex_set, q.vertex_set
    outside = [x for x in range(g.n) if x not in pv and x not in qv]
    for u in sorted(shared):
        iu_p = p.index(u)
        vs = []
        for v in sorted(pv - qv):
            seg = p.vertices[min(iu_p, p.index(v)) : max(iu_p, p.index(v)) + 1]
            if not set(seg[1:-1]) & qv:
                vs.append(v)
        iu_q = q.index(u)
        ws = []
        for w in sorted(qv - pv):
            seg = q.vertices[min(iu_q, q.index(w)) : max(iu_q, q.index(w)) + 1]
            if not set(seg[1:-1]) & pv:
                ws.append(w)
        for v in vs:
            for w in ws:
                bridge = _bfs_bridge(g, v, w, set(outside))
                if bridge is not None:
                    cfg = ExchangeConfig(p=p, q=q, u=u, v=v, w=w, r=Path(g, bridge))
                    cfg.validate()
                    return cfg
    return None


def _bfs_bridge(g: Graph, v: int, w: int, allowed_inner: set[int]) -> list[int] | None:
    """Shortest v-w path whose internal vertices all lie in allowed_inner.

    Deterministic: BFS in ascending neighbor order, first parent wins.
    """
    if g.has_edge(v, w):
        return [v, w]
    parent: dict[int, int] = {v: -1}
    dq = deque([v])
    while dq:
        x = dq.popleft()
        for y in g.neighbors(x):
            if y == w and x != v:
                out = [w]
                while x != -1:
                    out.append(x)
                    x = parent[x]
                return out[::-1]
            if y in allowed_inner and y not in parent:
                parent[y] = x
                dq.append(y)
    return None
