import pytest

from opcount import dp, oracle
from opcount.generate import enumerate_free_trees, enumerate_mops, random_mop, rng_for
from opcount.graph import Graph, GraphError
from opcount.mop import Mop


def test_fixed_values():
    fan5 = Mop.from_text("5;0-2,0-3")
    assert dp.count_is_fast(fan5) == 9
    assert [dp.count_kds_fast(fan5, k) for k in range(1, 6)] == [25, 12, 4, 2, 1]
    tri = Mop.new(3, [])
    assert dp.count_is_fast(tri) == 4
    assert dp.count_kds_fast(tri, 4) == 1


def test_matches_oracle_exhaustive_small():
    for n in range(3, 9):
        for m in enumerate_mops(n):
            assert dp.count_is_fast(m) == oracle.count_is(m.graph)
            sweep = oracle.count_kds_all(m.graph, 5)
            for k in range(1, 6):
                assert dp.count_kds_fast(m, k) == sweep[k - 1]


def test_matches_oracle_random_larger():
    rng = rng_for(17, 0)
    for _ in range(15):
        m = random_mop(rng.randint(10, 14), rng)
        assert dp.count_is_fast(m) == oracle.count_is(m.graph)
        assert dp.count_kds_fast(m, 4) == oracle.count_kds(m.graph, 4)


def test_decomposition_shape():
    m = Mop.from_text("7;0-2,2-4,4-6,2-6")
    dec = dp.decomposition_of_mop(m)
    assert len(dec.bags) == m.n - 2
    assert sorted(dec.order) == list(range(len(dec.bags)))
    assert sum(1 for p in dec.parent if p == -1) == 1


def test_tree_dp():
    for n in range(1, 10):
        for t in enumerate_free_trees(n):
            assert dp.count_on_tree(t, "is") == oracle.count_is(t)
            for k in (1, 2, 3):
                assert dp.count_on_tree(t, "kds", k) == oracle.count_kds(t, k)


def test_tree_dp_rejects_non_trees():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(GraphError):
        dp.count_on_tree(g, "is")
    p2 = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        dp.count_on_tree(p2, "nope")
    with pytest.raises(ValueError):
        dp.count_on_tree(p2, "kds", 0)
    with pytest.raises(ValueError):
        dp.count_kds_fast(Mop.new(3, []), 0)
