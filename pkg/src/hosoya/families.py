"""Graph families, their continued-fraction transforms, and ring identities.

Vertex numbering convention for every builder: the backbone (path, cycle,
spine or ring) comes first as ``0 .. k-1``, pendant vertices follow.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contfrac import GeneralCF, TreeCFSpec, negative_to_positive
from .multigraph import Multigraph

__all__ = [
    "CaterpillarBondParams",
    "RingParams",
    "SequencePair",
    "path_graph",
    "cycle_graph",
    "caterpillar_bond",
    "caterpillar_bond_cf",
    "cf_to_caterpillar_bond",
    "cycle_to_caterpillar_bond",
    "comb_cyclic",
    "cv_graph",
    "comb_to_caterpillar_bond",
    "ring_graph",
    "ring_sequence",
    "ring_hosoya_closed",
    "ring_decomposition_parts",
    "remark2_caterpillar_bond",
    "tree_of_spec",
    "fibonacci",
    "lucas",
    "naphthalene_fixture",
]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


@dataclass(frozen=True)
class CaterpillarBondParams:
    """``D_n(x_1..x_n; y_1..y_{n-1})``: spine vertex ``i`` has ``x_i - 1`` pendants,
    spine bond ``i`` has multiplicity ``y_i``."""

    xs: tuple[int, ...]
    ys: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(self.xs))
        object.__setattr__(self, "ys", tuple(self.ys))
        _require(len(self.xs) >= 1, "caterpillar-bond graph needs at least one spine vertex")
        _require(
            len(self.ys) == len(self.xs) - 1,
            f"need len(ys) == len(xs) - 1, got {len(self.ys)} and {len(self.xs)}",
        )
        _require(all(x >= 1 for x in self.xs), f"xs must be positive: {self.xs}")
        _require(all(y >= 1 for y in self.ys), f"ys must be positive: {self.ys}")

    @property
    def n(self) -> int:
        return len(self.xs)

    def __str__(self) -> str:
        xs = ",".join(map(str, self.xs))
        ys = ",".join(map(str, self.ys))
        return f"D_{self.n}({xs};{ys})"


@dataclass(frozen=True)
class RingParams:
    """Staggered ring ``U_{n,m}^{(r,s)}``: ``2n`` ring vertices, bonds alternating
    ``r, s``, ``m`` pendants on every ring vertex."""

    n: int
    m: int
    r: int
    s: int

    def __post_init__(self):
        _require(self.n >= 1, f"n must be >= 1, got {self.n}")
        _require(self.m >= 0, f"m must be >= 0, got {self.m}")
        _require(self.r >= 1 and self.s >= 1, f"r and s must be >= 1, got r={self.r}, s={self.s}")

    @property
    def M(self) -> int:
        return (self.m + 1) ** 2 + self.r + self.s

    @property
    def rs(self) -> int:
        return self.r * self.s


@dataclass(frozen=True)
class SequencePair:
    name: str
    values: tuple[int, ...]


def path_graph(n: int) -> Multigraph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Multigraph(n, tuple((i, i + 1, 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Multigraph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Multigraph(n, tuple((i, (i + 1) % n, 1) for i in range(n)))


def _with_pendants(backbone: list[tuple[int, int, int]], counts: list[int]) -> Multigraph:
    k = len(counts)
    edges = list(backbone)
    nxt = k
    for v, c in enumerate(counts):
        for _ in range(c):
            edges.append((v, nxt, 1))
            nxt += 1
    return Multigraph.from_edge_list(nxt, edges)


def caterpillar_bond(params: CaterpillarBondParams) -> Multigraph:
    spine = [(i, i + 1, y) for i, y in enumerate(params.ys)]
    return _with_pendants(spine, [x - 1 for x in params.xs])


def caterpillar_bond_cf(params: CaterpillarBondParams) -> GeneralCF:
    """``x_1 + y_1/(x_2 + y_2/(...))``, whose last numerator is the Hosoya index."""
    return GeneralCF(params.xs[0], tuple(zip(params.ys, params.xs[1:])))


def cf_to_caterpillar_bond(cf: GeneralCF) -> CaterpillarBondParams:
    return CaterpillarBondParams(
        (cf.a0,) + tuple(a for _, a in cf.terms), tuple(b for b, _ in cf.terms)
    )


def cycle_to_caterpillar_bond(n: int) -> CaterpillarBondParams:
    """``C_n -> D_{n-1}(1,..,1,2; 2,1,..,1)``."""
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return CaterpillarBondParams((1,) * (n - 2) + (2,), (2,) + (1,) * (n - 3))


def comb_cyclic(n: int, a: int, b: int) -> Multigraph:
    """``C_{n,a,b}``: n-cycle of b-fold bonds, ``a`` pendants on each vertex."""
    _require(n >= 3, f"comb needs n >= 3, got {n}")
    _require(a >= 0, f"comb needs a >= 0, got {a}")
    _require(b >= 1, f"comb needs b >= 1, got {b}")
    ring = [(i, (i + 1) % n, b) for i in range(n)]
    return _with_pendants(ring, [a] * n)


def cv_graph(n: int) -> Multigraph:
    return comb_cyclic(n, 2, 1)


def comb_to_caterpillar_bond(n: int, a: int, b: int) -> CaterpillarBondParams:
    """``C_{n,a,b} -> D_n(a+1,..,a+1; 2b, b,..,b)``."""
    _require(n >= 3, f"comb needs n >= 3, got {n}")
    _require(a >= 0 and b >= 1, f"comb needs a >= 0, b >= 1, got a={a}, b={b}")
    return CaterpillarBondParams((a + 1,) * n, (2 * b,) + (b,) * (n - 2))


def ring_graph(params: RingParams) -> Multigraph:
    """For ``n = 1`` the two ring vertices share a single ``(r + s)``-fold bond."""
    k = 2 * params.n
    if params.n == 1:
        ring = [(0, 1, params.r + params.s)]
    else:
        ring = [(i, (i + 1) % k, params.r if i % 2 == 0 else params.s) for i in range(k)]
    return _with_pendants(ring, [params.m] * k)


def ring_sequence(M: int, rs: int, count: int) -> list[int]:
    """``u_0 .. u_{count-1}`` of ``u_k = M u_{k-1} - rs u_{k-2}``, ``u_0 = 2``, ``u_1 = M``.

    These are the power sums of the roots of ``x^2 - M x + rs``.
    """
    out: list[int] = []
    a, b = 2, M
    for _ in range(count):
        out.append(a)
        a, b = b, M * b - rs * a
    return out


def ring_hosoya_closed(params: RingParams, n: int | None = None) -> int:
    n = params.n if n is None else n
    _require(n >= 0, f"n must be >= 0, got {n}")
    return ring_sequence(params.M, params.rs, n + 1)[n]


def ring_decomposition_parts(
    params: RingParams, n: int | None = None
) -> tuple[CaterpillarBondParams, CaterpillarBondParams]:
    """Split one s-bond off the ring: ``Z(U) = Z(first) + s * Z(second)``.

    ``first`` is the ring with that bond removed, a path with bonds
    ``r, s, .., r``; ``second`` is the ring minus both bond ends, a path with
    bonds ``s, r, .., s``.
    """
    n = params.n if n is None else n
    _require(n >= 2, f"decomposition needs n >= 2, got {n}")
    x = params.m + 1
    r, s = params.r, params.s
    first = CaterpillarBondParams(
        (x,) * (2 * n), tuple(r if i % 2 == 0 else s for i in range(2 * n - 1))
    )
    second = CaterpillarBondParams(
        (x,) * (2 * n - 2), tuple(s if i % 2 == 0 else r for i in range(2 * n - 3))
    )
    return first, second


def remark2_caterpillar_bond(M: int, rs: int, n: int) -> CaterpillarBondParams:
    """``D_{2n-1}(M-1, 1, M-rs-1, .., 1, M-2rs; 1, rs, .., 1, 2rs)``."""
    return cf_to_caterpillar_bond(negative_to_positive(M, rs, n))


def tree_of_spec(spec: TreeCFSpec) -> Multigraph:
    """Root is vertex 0; each node gets its pendants, then a b-fold bond per child."""
    edges: list[tuple[int, int, int]] = []
    count = 1
    stack = [(spec, 0)]
    while stack:
        node, v = stack.pop()
        for _ in range(node.pendants):
            edges.append((v, count, 1))
            count += 1
        for b, child in node.children:
            edges.append((v, count, b))
            stack.append((child, count))
            count += 1
    return Multigraph(count, tuple(edges))


def fibonacci(n: int) -> int:
    _require(n >= 0, f"n must be >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    _require(n >= 0, f"n must be >= 0, got {n}")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def naphthalene_fixture() -> Multigraph:
    # Kekule structure: rings 0-2-5-8-6-3 and 1-3-6-9-7-4 share bond 3-6
    edges = (
        (0, 2, 2), (0, 3, 1), (1, 3, 1), (1, 4, 2),
        (2, 5, 1), (3, 6, 2), (4, 7, 1), (5, 8, 2),
        (6, 8, 1), (6, 9, 1), (7, 9, 2),
    )
    return Multigraph(10, edges)
