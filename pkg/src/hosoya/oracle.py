"""Hosoya index straight from the definitions.

Two independent routes:

* :func:`matching_counts` / :func:`hosoya_by_definition` enumerate matchings
  by backtracking and sum ``p(G, k)``.  Only usable on small graphs.
* :func:`hosoya` factors over components, runs a rooted tree DP on forests
  and otherwise splits on a cycle edge, ``Z(G) = Z(G - e) + Z(G - {u, v})``.
  The split count is bounded by the cycle rank, so every family in this
  package stays cheap even at a few hundred vertices.

Neither route looks at a continued fraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .multigraph import Multigraph

__all__ = [
    "SizeLimitError",
    "matching_counts",
    "matching_count",
    "hosoya_by_definition",
    "hosoya",
    "hosoya_forest",
    "hosoya_by_recursion",
    "TraceNode",
    "hosoya_trace",
    "format_trace",
    "replay_trace",
]

BRUTE_MAX_VERTICES = 16
BRUTE_MAX_MULTIPLICITY = 24
TRACE_MAX_MULTIPLICITY = 40


class SizeLimitError(ValueError):
    """Graph too large for an exhaustive method."""


def _check_brute_guard(g: Multigraph) -> None:
    if g.n_vertices > BRUTE_MAX_VERTICES and g.total_multiplicity > BRUTE_MAX_MULTIPLICITY:
        raise SizeLimitError(
            f"brute force needs <= {BRUTE_MAX_VERTICES} vertices or total multiplicity "
            f"<= {BRUTE_MAX_MULTIPLICITY}; got {g.n_vertices} vertices, "
            f"multiplicity {g.total_multiplicity}"
        )


def matching_counts(g: Multigraph) -> list[int]:
    """Return ``[p(G,0), p(G,1), ...]`` by enumerating every matching.

    Parallel copies are distinct edges, so a matching using bonds of
    multiplicities ``m1, m2, ...`` is counted ``m1*m2*...`` times.
    """
    _check_brute_guard(g)
    n = g.n_vertices
    # only look forward: a lower neighbour still free was chosen to stay unmatched
    forward = [[(u, m) for u, m in sorted(g.neighbors(v).items()) if u > v] for v in range(n)]
    counts = [0] * (n // 2 + 1)

    def walk(v: int, used: int, size: int, weight: int) -> None:
        while v < n and used >> v & 1:
            v += 1
        if v == n:
            counts[size] += weight
            return
        walk(v + 1, used, size, weight)
        for u, m in forward[v]:
            if not used >> u & 1:
                walk(v + 1, used | 1 << u, size + 1, weight * m)

    walk(0, 0, 0, 1)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def matching_count(g: Multigraph, k: int) -> int:
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    counts = matching_counts(g)
    return counts[k] if k < len(counts) else 0


def hosoya_by_definition(g: Multigraph) -> int:
    return sum(matching_counts(g))


def hosoya_forest(g: Multigraph) -> int:
    """Tree DP over every component of a forest (underlying simple graph acyclic).

    Per vertex keep ``z_all`` (all matchings of its subtree) and ``z_free``
    (those leaving the vertex unmatched); fold children in one at a time.
    """
    if not g.is_forest():
        raise ValueError("hosoya_forest needs a forest")
    n = g.n_vertices
    z_all = [1] * n
    z_free = [1] * n
    seen = [False] * n
    total = 1
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        order = [root]
        parent = {root: -1}
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    order.append(y)
        for c in reversed(order[1:]):
            p = parent[c]
            t = g.multiplicity(p, c)
            z_all[p], z_free[p] = (
                z_all[p] * z_all[c] + t * z_free[p] * z_free[c],
                z_free[p] * z_all[c],
            )
        total *= z_all[root]
    return total


def _z(g: Multigraph, memo: dict[bytes, int], tree_dp: bool) -> int:
    if not g.edges:
        return 1
    key = g.canonical_key()
    hit = memo.get(key)
    if hit is not None:
        return hit
    comps = g.component_vertex_sets()
    if len(comps) > 1:
        value = prod(_z(g.subgraph(vs), memo, tree_dp) for vs in comps if len(vs) > 1)
    else:
        e = g.underlying_cycle_edge()
        if e is None and tree_dp:
            value = hosoya_forest(g)
        else:
            u, v = e if e is not None else g.edges[0][:2]
            value = _z(g.delete_edge_copy(u, v), memo, tree_dp) + _z(
                g.delete_vertices((u, v)), memo, tree_dp
            )
    memo[key] = value
    return value


def hosoya(g: Multigraph) -> int:
    """Exact Hosoya index ``Z(g)``: components, then tree DP or cycle-edge splits."""
    return _z(g, {}, tree_dp=True)


def hosoya_by_recursion(g: Multigraph) -> int:
    """Like :func:`hosoya` but never uses the tree DP; forests are split edge by edge."""
    return _z(g, {}, tree_dp=False)


@dataclass
class TraceNode:
    """One step of a derivation.

    ``rule`` is one of ``"empty"`` (no edges, Z = 1), ``"components"``
    (product of children), ``"cycle-edge"`` / ``"edge"`` (sum of the
    ``G - e`` and ``G - {u, v}`` children) or ``"memo"`` (value already
    derived earlier in the trace).
    """

    rule: str
    value: int
    n_vertices: int
    multiplicity: int
    edge: tuple[int, int] | None = None
    children: list[TraceNode] = field(default_factory=list)

    def count(self, rule: str) -> int:
        return (self.rule == rule) + sum(c.count(rule) for c in self.children)


def hosoya_trace(g: Multigraph) -> tuple[int, TraceNode]:
    """Derive ``Z(g)`` by edge and component steps only, recording each step.

    Cycle edges are split first; a forest is split on its first edge.  A
    subgraph seen before appears as a ``"memo"`` leaf.
    """
    if g.total_multiplicity > TRACE_MAX_MULTIPLICITY:
        raise SizeLimitError(
            f"trace needs total multiplicity <= {TRACE_MAX_MULTIPLICITY}, "
            f"got {g.total_multiplicity}"
        )
    memo: dict[bytes, int] = {}

    def go(h: Multigraph) -> TraceNode:
        size = (h.n_vertices, h.total_multiplicity)
        if not h.edges:
            return TraceNode("empty", 1, *size)
        key = h.canonical_key()
        if key in memo:
            return TraceNode("memo", memo[key], *size)
        comps = [vs for vs in h.component_vertex_sets() if len(vs) > 1]
        if len(comps) > 1 or sum(map(len, comps)) < h.n_vertices:
            kids = [go(h.subgraph(vs)) for vs in comps]
            node = TraceNode("components", prod(k.value for k in kids), *size, children=kids)
        else:
            e = h.underlying_cycle_edge()
            rule = "cycle-edge" if e is not None else "edge"
            u, v = e if e is not None else h.edges[0][:2]
            kids = [go(h.delete_edge_copy(u, v)), go(h.delete_vertices((u, v)))]
            node = TraceNode(rule, kids[0].value + kids[1].value, *size, edge=(u, v), children=kids)
        memo[key] = node.value
        return node

    root = go(g)
    return root.value, root


def replay_trace(node: TraceNode) -> int:
    """Recompute a trace's value from its leaves, checking every step."""
    if node.rule in ("empty", "memo"):
        return node.value
    values = [replay_trace(c) for c in node.children]
    got = prod(values) if node.rule == "components" else sum(values)
    if got != node.value:
        raise AssertionError(f"trace step {node.rule} records {node.value}, children give {got}")
    return got


def format_trace(node: TraceNode, indent: int = 0) -> str:
    head = f"{'  ' * indent}Z = {node.value}  [{node.rule}"
    if node.edge is not None:
        head += f" {node.edge[0]}-{node.edge[1]}"
    head += f"]  ({node.n_vertices} vertices, {node.multiplicity} edges)"
    return "\n".join([head] + [format_trace(c, indent + 1) for c in node.children])
