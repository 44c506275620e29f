"""Immutable simple undirected graphs with canonical serialization.

Vertices are dense integers 0..n-1. The edge set is canonicalized to
(u, v) with u < v, sorted lexicographically; that ordering defines both
the JSON/edge-list serializations and the content hash used as a stable
graph identifier.
"""

from __future__ import annotations

import hashlib
import json
from typing import IO, Iterable

# Exact search engines use one machine word per visited set.
MAX_EXACT_VERTICES = 64


class GraphFormatError(ValueError):
    """Input stream does not parse in the declared format."""


class GraphValidationError(ValueError):
    """Parsed data violates the simple-graph invariants."""


class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    Immutable after construction; safe to share across workers.
    """

    __slots__ = ("n", "edges", "adj", "adj_masks", "name", "_id")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], name: str | None = None):
        if n < 0:
            raise GraphValidationError(f"vertex count must be nonnegative, got {n}")
        canon = []
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u},{v}) out of range [0,{n})")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for i in range(1, len(canon)):
            if canon[i] == canon[i - 1]:
                raise GraphValidationError(f"duplicate edge {canon[i]}")
        self.n = n
        self.edges = tuple(canon)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)
        masks = []
        for a in self.adj:
            m = 0
            for w in a:
                m |= 1 << w
            masks.append(m)
        self.adj_masks = tuple(masks)
        self.name = name
        self._id: str | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def id(self) -> str:
        """User-supplied name, or a content hash of (n, canonical edge list)."""
        if self.name is not None:
            return self.name
        if self._id is None:
            payload = f"{self.n}|" + ";".join(f"{u},{v}" for u, v in self.edges)
            self._id = "g" + hashlib.sha256(payload.encode()).hexdigest()[:12]
        return self._id

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return (self.adj_masks[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def without_edge(self, u: int, v: int) -> "Graph":
        e = (u, v) if u < v else (v, u)
        return Graph(self.n, (x for x in self.edges if x != e))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, id={self.id!r})"


def _as_text(source: bytes | str | IO) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def load_graph(source: bytes | str | IO, format: str = "json", name: str | None = None) -> Graph:
    """Parse and validate a graph from a byte stream, text, or file object.

    Formats: "json" ({"n": int, "edges": [[u, v], ...]}) or "edgelist"
    (header line "n m" followed by m lines "u v").
    """
    text = _as_text(source)
    if format == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise GraphFormatError('JSON graph requires keys "n" and "edges"')
        n = data["n"]
        if not isinstance(n, int):
            raise GraphFormatError(f'"n" must be an integer, got {n!r}')
        edges = []
        for i, e in enumerate(data["edges"]):
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
                raise GraphFormatError(f"edge #{i} must be a pair of integers, got {e!r}")
            edges.append((e[0], e[1]))
        return Graph(n, edges, name=name)
    if format == "edgelist":
        lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
        if not lines:
            raise GraphFormatError("empty edge list input")
        head = lines[0].split()
        if len(head) != 2 or not all(tok.lstrip("-").isdigit() for tok in head):
            raise GraphFormatError(f'header must be "n m", got {lines[0]!r}')
        n, m = int(head[0]), int(head[1])
        if len(lines) - 1 != m:
            raise GraphFormatError(f"header declares {m} edges but {len(lines) - 1} lines follow")
        edges = []
        for lineno, ln in enumerate(lines[1:], start=2):
            parts = ln.split()
            if len(parts) != 2 or not all(tok.lstrip("-").isdigit() for tok in parts):
                raise GraphFormatError(f'line {lineno}: expected "u v", got {ln!r}')
            edges.append((int(parts[0]), int(parts[1])))
        return Graph(n, edges, name=name)
    raise ValueError(f"unknown graph format {format!r}")


def save_graph(g: Graph, format: str = "json") -> bytes:
    """Serialize in canonical form; load_graph(save_graph(g)) round-trips."""
    if format == "json":
        edges = [[u, v] for u, v in g.edges]
        return (json.dumps({"n": g.n, "edges": edges}) + "\n").encode("utf-8")
    if format == "edgelist":
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown graph format {format!r}")
