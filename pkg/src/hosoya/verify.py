"""Verification suites: the oracle against every continued-fraction route.

Each suite yields :class:`Row` objects in deterministic parameter order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator

from .contfrac import (
    GeneralCF,
    TreeCFSpec,
    chain_spec,
    convergents,
    eval_negative_ring_cf,
    eval_tree_cf,
    negative_to_positive,
    radial_spec,
)
from .families import (
    CaterpillarBondParams,
    RingParams,
    caterpillar_bond,
    caterpillar_bond_cf,
    comb_cyclic,
    comb_to_caterpillar_bond,
    cycle_graph,
    cycle_to_caterpillar_bond,
    lucas,
    remark2_caterpillar_bond,
    ring_graph,
    ring_hosoya_closed,
    tree_of_spec,
)
from .multigraph import Multigraph
from .oracle import hosoya, hosoya_by_definition

SUITES = ("lemma1", "lemma2", "theorem1", "remark2", "radial", "transforms")

# 2 + 2/(3 + 3/3): one radial part of the worked example
RADIAL_PART = GeneralCF(2, ((2, 3), (3, 3)))


@dataclass(frozen=True)
class Row:
    params: str
    oracle: int
    cf: int
    ok: bool

    def format(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.params:<32} {self.oracle:>20} {self.cf:>20}  {status}"


def cf_numerator(cf: GeneralCF) -> int:
    return convergents(cf)[-1].p


def random_caterpillar_bond(
    rng: random.Random, max_spine: int, max_x: int, max_y: int
) -> CaterpillarBondParams:
    n = rng.randint(1, max_spine)
    xs = tuple(rng.randint(1, max_x) for _ in range(n))
    ys = tuple(rng.randint(1, max_y) for _ in range(n - 1))
    return CaterpillarBondParams(xs, ys)


def random_multigraph(rng: random.Random, max_vertices: int, max_multiplicity: int) -> Multigraph:
    """Uniform-ish small multigraph; total multiplicity never exceeds the cap."""
    n = rng.randint(1, max_vertices)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    budget = rng.randint(0, max_multiplicity)
    edges = []
    for u, v in pairs:
        if budget == 0:
            break
        if rng.random() < 0.5:
            m = rng.randint(1, min(3, budget))
            edges.append((u, v, m))
            budget -= m
    return Multigraph(n, tuple(edges))


def random_tree_spec(
    rng: random.Random, depth: int = 4, fanout: int = 3, pendants: int = 3, bond: int = 3
) -> TreeCFSpec:
    kids = ()
    if depth > 1:
        kids = tuple(
            (rng.randint(1, bond), random_tree_spec(rng, depth - 1, fanout, pendants, bond))
            for _ in range(rng.randint(0, fanout))
        )
    return TreeCFSpec(rng.randint(0, pendants), kids)


def lemma2_holds(g: Multigraph) -> bool:
    """Edge, vertex and component identities, plus agreement with brute force."""
    z = hosoya(g)
    if z != hosoya_by_definition(g):
        return False
    for u, v, _ in g.edges:
        if z != hosoya(g.delete_edge_copy(u, v)) + hosoya(g.delete_vertices((u, v))):
            return False
    for v in range(g.n_vertices):
        rhs = hosoya(g.delete_vertices((v,)))
        rhs += sum(m * hosoya(g.delete_vertices((u, v))) for u, m in g.neighbors(v).items())
        if z != rhs:
            return False
    return z == prod(hosoya(c) for c in g.components())


def lemma1(max_spine=5, max_x=3, max_y=3, samples=200, seed=0) -> Iterator[Row]:
    rng = random.Random(seed)
    for _ in range(samples):
        p = random_caterpillar_bond(rng, max_spine, max_x, max_y)
        z = hosoya(caterpillar_bond(p))
        c = cf_numerator(caterpillar_bond_cf(p))
        yield Row(str(p), z, c, z == c)


def lemma2(max_vertices=10, max_multiplicity=18, samples=200, seed=0) -> Iterator[Row]:
    rng = random.Random(seed)
    for i in range(samples):
        g = random_multigraph(rng, max_vertices, max_multiplicity)
        z = hosoya(g)
        brute = hosoya_by_definition(g)
        label = f"#{i} V={g.n_vertices} E={g.total_multiplicity}"
        yield Row(label, z, brute, lemma2_holds(g))


def theorem1(ns: Iterable[int], ms: Iterable[int], rs: Iterable[int], ss: Iterable[int]) -> Iterator[Row]:
    for n, m, r, s in itertools.product(ns, ms, rs, ss):
        p = RingParams(n, m, r, s)
        z = hosoya(ring_graph(p))
        c = eval_negative_ring_cf(p.M, p.rs, n).p
        yield Row(f"n={n} m={m} r={r} s={s}", z, c, z == c == ring_hosoya_closed(p))


def remark2(ns: Iterable[int], ms: Iterable[int], rs: Iterable[int], ss: Iterable[int]) -> Iterator[Row]:
    for n, m, r, s in itertools.product(ns, ms, rs, ss):
        p = RingParams(n, m, r, s)
        if p.M <= 2 * p.rs:
            continue
        z = hosoya(caterpillar_bond(remark2_caterpillar_bond(p.M, p.rs, n)))
        c = cf_numerator(negative_to_positive(p.M, p.rs, n))
        yield Row(f"n={n} m={m} r={r} s={s} M={p.M}", z, c, z == c == ring_hosoya_closed(p))


def radial(ms: Iterable[int], part: TreeCFSpec | None = None) -> Iterator[Row]:
    worked = part is None
    part = chain_spec(RADIAL_PART) if part is None else part
    for m in ms:
        spec = radial_spec(m, part)
        z = hosoya(tree_of_spec(spec))
        c = eval_tree_cf(spec).num
        ok = z == c and (not worked or c == (18 * m + 12) * 12 ** (m - 1))
        yield Row(f"m={m}", z, c, ok)


def transforms(cycle_ns: Iterable[int], comb: Iterable[tuple[int, int, int]] = ()) -> Iterator[Row]:
    for n in cycle_ns:
        z = hosoya(cycle_graph(n))
        c = cf_numerator(caterpillar_bond_cf(cycle_to_caterpillar_bond(n)))
        yield Row(f"cycle n={n}", z, c, z == c == lucas(n))
    for n, a, b in comb:
        z = hosoya(comb_cyclic(n, a, b))
        c = cf_numerator(caterpillar_bond_cf(comb_to_caterpillar_bond(n, a, b)))
        yield Row(f"comb n={n} a={a} b={b}", z, c, z == c)
