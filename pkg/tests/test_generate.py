import pytest

from opcount import generate, oracle
from opcount.generate import (
    GenerationError,
    catalan,
    enumerate_free_trees,
    enumerate_mops,
    enumerate_mops_canonical,
    free_tree_counts,
    free_tree_key,
    random_avg_degree_graph,
    random_mop,
    random_outerplanar_from_mop,
    random_regular_graph,
    rng_for,
    rooted_tree_counts,
)


def test_mop_counts_are_catalan():
    for n in range(3, 11):
        assert sum(1 for _ in enumerate_mops(n)) == catalan(n - 2)


def test_canonical_counts():
    assert [sum(1 for _ in enumerate_mops_canonical(n)) for n in (4, 5, 6)] == [1, 1, 3]


def test_mops_distinct():
    seen = set(m.chords for m in enumerate_mops(8))
    assert len(seen) == catalan(6)


def test_free_tree_counts_match_otter():
    expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    assert free_tree_counts(10) == expected
    for n in range(1, 11):
        trees = list(enumerate_free_trees(n))
        assert len(trees) == expected[n - 1]
        keys = {free_tree_key(t) for t in trees}
        assert len(keys) == len(trees)
        assert all(t.is_tree() for t in trees)


def test_rooted_tree_counts():
    # classic sequence: 1, 1, 2, 4, 9, 20, 48, 115, 286, 719
    assert rooted_tree_counts(10) == [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


def test_rng_determinism_and_splitting():
    a = rng_for(5, 1).random()
    b = rng_for(5, 1).random()
    c = rng_for(5, 2).random()
    d = rng_for(6, 1).random()
    assert a == b
    assert a != c and a != d


def test_random_mop_deterministic():
    m1 = random_mop(10, rng_for(9, 0))
    m2 = random_mop(10, rng_for(9, 0))
    assert m1 == m2


def test_random_mop_distribution_support():
    # with enough draws every triangulation of the pentagon appears
    seen = set()
    for s in range(200):
        seen.add(random_mop(5, rng_for(11, s)).chords)
    assert len(seen) == catalan(3)


def test_random_outerplanar_subgraph():
    m = random_mop(9, rng_for(2, 0))
    g = random_outerplanar_from_mop(m, 0.3, rng_for(2, 1))
    assert g.n == m.n
    assert set(g.edges()) <= set(m.graph.edges())
    assert random_outerplanar_from_mop(m, 0.0, rng_for(2, 2)) == m.graph
    with pytest.raises(GenerationError):
        random_outerplanar_from_mop(m, 1.5, rng_for(2, 3))


def test_random_avg_degree_graph():
    g = random_avg_degree_graph(10, 4, rng_for(3, 0))
    assert g.edge_count() == 20
    assert sum(g.degrees()) / g.n <= 4


def test_random_regular_graph():
    g = random_regular_graph(10, 3, rng_for(4, 0))
    assert all(d == 3 for d in g.degrees())
    with pytest.raises(GenerationError):
        random_regular_graph(5, 3, rng_for(4, 1))  # odd k*n


def test_range_guards():
    with pytest.raises(GenerationError):
        list(enumerate_mops(2))
    with pytest.raises(GenerationError):
        list(enumerate_mops(generate.MOP_ENUM_MAX_N + 1))
    with pytest.raises(GenerationError):
        list(enumerate_free_trees(0))


def test_regular_equality_examples():
    # complement bijection puts k-regular graphs exactly at i = dk
    c5 = generate.Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert oracle.count_is(c5) == oracle.count_kds(c5, 2) == 11
    k4 = generate.Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert oracle.count_is(k4) == oracle.count_kds(k4, 3) == 5
