import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hosoya.families import (
    CaterpillarBondParams,
    RingParams,
    caterpillar_bond,
    cycle_graph,
    path_graph,
    ring_graph,
    tree_of_spec,
)
from hosoya.contfrac import GeneralCF, chain_spec, radial_spec
from hosoya.multigraph import Multigraph
from hosoya.oracle import (
    SizeLimitError,
    format_trace,
    hosoya,
    hosoya_by_definition,
    hosoya_by_recursion,
    hosoya_forest,
    hosoya_trace,
    matching_count,
    matching_counts,
    replay_trace,
)
from hosoya.verify import lemma2_holds, random_multigraph


def subset_counts(g):
    """p(G, k) by testing every subset of edge copies; tiny graphs only."""
    copies = [(u, v) for u, v, m in g.edges for _ in range(m)]
    counts = []
    for k in range(len(copies) + 1):
        c = 0
        for chosen in itertools.combinations(copies, k):
            ends = [x for e in chosen for x in e]
            c += len(ends) == len(set(ends))
        counts.append(c)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


TRIANGLE = cycle_graph(3)


def test_matching_count_examples():
    assert matching_count(Multigraph(0), 0) == 1
    assert matching_count(TRIANGLE, 0) == 1
    assert matching_count(TRIANGLE, 1) == 3
    assert matching_count(TRIANGLE, 2) == 0
    assert matching_count(Multigraph(2, ((0, 1, 2),)), 1) == 2


@settings(max_examples=80)
@given(st.integers(0, 10**6))
def test_backtracking_matches_subset_enumeration(seed):
    g = random_multigraph(random.Random(seed), 6, 9)
    assert matching_counts(g) == subset_counts(g)


@pytest.mark.parametrize(
    "g, z",
    [(Multigraph(1), 1), (cycle_graph(3), 4), (cycle_graph(6), 18), (path_graph(10), 89)],
)
def test_hosoya_by_definition(g, z):
    assert hosoya_by_definition(g) == z
    assert hosoya(g) == z


def test_size_guard():
    big = Multigraph(30, tuple((0, i, 1) for i in range(1, 30)))
    with pytest.raises(SizeLimitError):
        matching_counts(big)
    # 30 vertices, star: Z = 1 + 29
    assert hosoya(big) == 30
    dense_small = Multigraph(4, ((0, 1, 10), (1, 2, 10), (2, 3, 10)))
    assert hosoya_by_definition(dense_small) == hosoya(dense_small)


def test_paper_anchor_values():
    assert hosoya(ring_graph(RingParams(3, 1, 2, 1))) == 301
    part = chain_spec(GeneralCF(2, ((2, 3), (3, 3))))
    assert hosoya(tree_of_spec(radial_spec(2, part))) == 576


def test_forest_dp_against_recursion():
    g = caterpillar_bond(CaterpillarBondParams((3, 1, 4, 2), (2, 3, 1)))
    assert hosoya_forest(g) == hosoya_by_recursion(g) == hosoya_by_definition(g)
    with pytest.raises(ValueError):
        hosoya_forest(TRIANGLE)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_lemma2_identities(seed):
    g = random_multigraph(random.Random(seed), 8, 14)
    assert lemma2_holds(g)
    assert hosoya_by_recursion(g) == hosoya(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_adding_an_edge_copy_increases_z(seed):
    rng = random.Random(seed)
    g = random_multigraph(rng, 7, 10)
    if g.n_vertices < 2:
        return
    u, v = rng.sample(range(g.n_vertices), 2)
    assert hosoya(g.add_edge_copy(u, v)) > hosoya(g)


def test_isolated_vertices_contribute_one():
    g = Multigraph(5, ((0, 1, 1),))
    assert hosoya(g) == 2


def test_trace_single_edge():
    z, tree = hosoya_trace(Multigraph(2, ((0, 1, 1),)))
    assert z == 2
    assert tree.rule == "edge"
    assert tree.count("edge") + tree.count("cycle-edge") == 1


def test_trace_triangle():
    z, tree = hosoya_trace(TRIANGLE)
    assert z == 4
    assert tree.rule == "cycle-edge"
    assert tree.count("cycle-edge") == 1
    assert replay_trace(tree) == hosoya(TRIANGLE)


def test_trace_short_caterpillar():
    g = caterpillar_bond(CaterpillarBondParams((2, 2), (1,)))
    z, tree = hosoya_trace(g)
    assert z == 5 == replay_trace(tree)
    assert tree.count("components") >= 1
    text = format_trace(tree)
    assert text.splitlines()[0].startswith("Z = 5")


def test_trace_guard():
    with pytest.raises(SizeLimitError):
        hosoya_trace(path_graph(42))


@pytest.mark.parametrize("seed", range(10))
def test_trace_replay_random(seed):
    g = random_multigraph(random.Random(seed), 9, 16)
    z, tree = hosoya_trace(g)
    assert z == replay_trace(tree) == hosoya(g)
