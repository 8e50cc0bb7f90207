"""Undirected multigraphs with aggregated edge multiplicities.

A :class:`Multigraph` is immutable: every operation returns a new graph.
Parallel edges are stored once as ``(u, v, mult)`` with ``u < v``; loops are
rejected.  Vertices are ``0 .. n_vertices-1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

__all__ = ["GraphError", "Multigraph", "to_hgraph", "parse_hgraph"]


class GraphError(ValueError):
    """Invalid multigraph construction or reference to a missing vertex/edge."""


Edge = tuple[int, int, int]


@dataclass(frozen=True)
class Multigraph:
    n_vertices: int
    edges: tuple[Edge, ...] = ()
    _adj: tuple[dict[int, int], ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n_vertices
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        normalized = []
        for u, v, m in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if m < 1:
                raise GraphError(f"edge ({u}, {v}) has multiplicity {m} < 1")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u][v] = m
            adj[v][u] = m
            normalized.append((min(u, v), max(u, v), m))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_edge_list(cls, n_vertices: int, edges: Iterable[tuple[int, ...]]) -> Multigraph:
        """Build from ``(u, v)`` or ``(u, v, mult)`` items, summing repeated pairs."""
        acc: dict[tuple[int, int], int] = {}
        for e in edges:
            u, v = e[0], e[1]
            m = e[2] if len(e) > 2 else 1
            key = (min(u, v), max(u, v))
            acc[key] = acc.get(key, 0) + m
        return cls(n_vertices, tuple((u, v, m) for (u, v), m in acc.items()))

    # -- queries -------------------------------------------------------------

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, _, m in self.edges)

    def neighbors(self, v: int) -> dict[int, int]:
        """Map neighbour -> multiplicity of the bond to ``v``."""
        self._check_vertex(v)
        return dict(self._adj[v])

    def degree(self, v: int) -> int:
        """Number of distinct neighbours (parallel copies count once)."""
        self._check_vertex(v)
        return len(self._adj[v])

    def multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return self._adj[u].get(v, 0)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n_vertices:
            raise GraphError(f"unknown vertex {v}")

    # -- edits ---------------------------------------------------------------

    def add_edge_copy(self, u: int, v: int) -> Multigraph:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        m = self.multiplicity(u, v)
        key = (min(u, v), max(u, v))
        rest = tuple(e for e in self.edges if e[:2] != key)
        return Multigraph(self.n_vertices, rest + ((key[0], key[1], m + 1),))

    def delete_edge_copy(self, u: int, v: int) -> Multigraph:
        """Remove one parallel copy of ``uv``; the vertex set is unchanged."""
        m = self.multiplicity(u, v)
        if m == 0:
            raise GraphError(f"no edge between {u} and {v}")
        key = (min(u, v), max(u, v))
        rest = tuple(e for e in self.edges if e[:2] != key)
        if m > 1:
            rest += ((key[0], key[1], m - 1),)
        return Multigraph(self.n_vertices, rest)

    def delete_vertices(self, vs: Iterable[int]) -> Multigraph:
        """Induced subgraph on the remaining vertices, re-indexed in order."""
        gone = set(vs)
        for v in gone:
            self._check_vertex(v)
        index = {}
        for v in range(self.n_vertices):
            if v not in gone:
                index[v] = len(index)
        edges = tuple(
            (index[u], index[v], m) for u, v, m in self.edges if u in index and v in index
        )
        return Multigraph(len(index), edges)

    def subgraph(self, vs: Iterable[int]) -> Multigraph:
        keep = set(vs)
        return self.delete_vertices(v for v in range(self.n_vertices) if v not in keep)

    # -- structure -----------------------------------------------------------

    def component_vertex_sets(self) -> list[list[int]]:
        seen = [False] * self.n_vertices
        out = []
        for start in range(self.n_vertices):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(sorted(comp))
        return out

    def components(self) -> list[Multigraph]:
        """Connected components, isolated vertices included, ordered by least vertex."""
        sets = self.component_vertex_sets()
        if len(sets) == 1:
            return [self]
        return [self.subgraph(vs) for vs in sets]

    def underlying_cycle_edge(self) -> tuple[int, int] | None:
        """An edge on a cycle of the underlying simple graph, or None for a forest.

        Parallel copies of one bond do not form a cycle here.
        """
        parent = list(range(self.n_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                # u and v were already joined by a tree path, so uv closes a cycle
                return (u, v)
            parent[ru] = rv
        return None

    def is_forest(self) -> bool:
        return self.underlying_cycle_edge() is None

    def canonical_key(self) -> bytes:
        """Memoization key from a degree-guided BFS relabelling.

        Equal keys imply the graphs are isomorphic, since the key is the full
        relabelled edge list.  The converse is only best-effort.
        """
        adj = self._adj

        def weight(v: int) -> tuple[int, int]:
            return (len(adj[v]), sum(adj[v].values()))

        order: list[int] = []
        label = [-1] * self.n_vertices
        roots = sorted(range(self.n_vertices), key=lambda v: (weight(v), v))
        for root in roots:
            if label[root] >= 0:
                continue
            label[root] = len(order)
            order.append(root)
            queue = deque([root])
            while queue:
                x = queue.popleft()
                nbrs = sorted(
                    (y for y in adj[x] if label[y] < 0),
                    key=lambda y: (adj[x][y], weight(y), y),
                )
                for y in nbrs:
                    label[y] = len(order)
                    order.append(y)
                    queue.append(y)
        relabelled = sorted(
            (min(label[u], label[v]), max(label[u], label[v]), m) for u, v, m in self.edges
        )
        body = ";".join(f"{u},{v},{m}" for u, v, m in relabelled)
        return f"{self.n_vertices}|{body}".encode("ascii")


def to_hgraph(g: Multigraph) -> str:
    lines = ["hgraph 1", f"vertices {g.n_vertices}"]
    lines += [f"e {u} {v} {m}" for u, v, m in g.edges]
    return "\n".join(lines) + "\n"


def parse_hgraph(text: str) -> Multigraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].split() != ["hgraph", "1"]:
        raise GraphError("missing 'hgraph 1' header")
    if len(lines) < 2:
        raise GraphError("missing 'vertices N' line")
    head = lines[1].split()
    if len(head) != 2 or head[0] != "vertices":
        raise GraphError(f"expected 'vertices N', got {lines[1]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise GraphError(f"bad vertex count {head[1]!r}") from None
    edges = []
    for lineno, ln in enumerate(lines[2:], start=3):
        parts = ln.split()
        if len(parts) != 4 or parts[0] != "e":
            raise GraphError(f"line {lineno}: expected 'e U V M', got {ln!r}")
        try:
            u, v, m = (int(p) for p in parts[1:])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer field in {ln!r}") from None
        edges.append((u, v, m))
    return Multigraph(n, tuple(edges))
