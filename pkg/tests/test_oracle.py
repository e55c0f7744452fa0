import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opcount import oracle
from opcount.graph import Graph, constrain
from opcount.generate import enumerate_mops, random_mop, rng_for
from opcount.mop import Mop


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def brute_is(g, cond=None):
    total = 0
    for bits in itertools.product([0, 1], repeat=g.n):
        if cond and any(bits[v] == 0 for v in cond.forced_in):
            continue
        if cond and any(bits[v] == 1 for v in cond.forced_out):
            continue
        if all(not (bits[u] and bits[v]) for u, v in g.edges()):
            total += 1
    return total


def brute_kds(g, k):
    total = 0
    for bits in itertools.product([0, 1], repeat=g.n):
        ok = True
        for v in range(g.n):
            if not bits[v]:
                if sum(bits[w] for w in g.neighbors(v)) < k:
                    ok = False
                    break
        total += ok
    return total


def test_small_fixed_values():
    k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert oracle.count_is(k3) == 4
    assert oracle.count_kds(k3, 4) == 1
    assert oracle.count_is(p3) == 5
    assert oracle.count_kds(p3, 2) == 2
    fan5 = Mop.from_text("5;0-2,0-3").graph
    assert oracle.count_is(fan5) == 9
    assert oracle.count_kds(fan5, 4) == 2
    # empty and single-vertex graphs: the empty set counts
    assert oracle.count_is(Graph.empty(0)) == 1
    assert oracle.count_is(Graph.empty(1)) == 2
    assert oracle.count_kds(Graph.empty(1), 2) == 1


def test_cycles_lucas_numbers():
    lucas = [4, 7, 11, 18, 29, 47, 76, 123, 199, 322]
    for n, expect in zip(range(3, 13), lucas):
        assert oracle.count_is(cycle(n)) == expect
        assert oracle.count_kds(cycle(n), 2) == expect


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.data())
def test_matches_pure_python_brute_force(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=12))
    g = Graph.from_edges(n, edges)
    assert oracle.count_is(g) == brute_is(g)
    for k in (1, 2, 4):
        assert oracle.count_kds(g, k) == brute_kds(g, k)


def test_count_kds_all_matches_single_counts():
    g = Mop.from_text("7;0-2,0-3,3-5,0-5").graph
    sweep = oracle.count_kds_all(g, 6)
    assert sweep == [oracle.count_kds(g, k) for k in range(1, 7)]


def test_membership_partition_law():
    g = Mop.from_text("6;0-2,0-4,2-4").graph
    for u in range(g.n):
        assert oracle.count_is(g) == (
            oracle.count_is(g, constrain(forced_in=(u,)))
            + oracle.count_is(g, constrain(forced_out=(u,)))
        )
        assert oracle.count_kds(g, 4) == (
            oracle.count_kds(g, 4, constrain(forced_in=(u,)))
            + oracle.count_kds(g, 4, constrain(forced_out=(u,)))
        )


def test_conditioned_counts():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert oracle.count_is_conditioned(p3, constrain(forced_in=(1,))) == 1
    assert oracle.count_is_conditioned(p3, constrain(forced_out=(1,))) == 4
    assert brute_is(p3, constrain(forced_in=(0,), forced_out=(2,))) == \
        oracle.count_is(p3, constrain(forced_in=(0,), forced_out=(2,)))


def test_profile_convolutions_exhaustive_small():
    for n in range(4, 8):
        for m in enumerate_mops(n):
            i_full = oracle.count_is(m.graph)
            d_full = oracle.count_kds(m.graph, 4)
            for e in m.graph.edges():
                part = m.split_at_edge(e)
                li = oracle.is_profile(part, "left")
                ri = oracle.is_profile(part, "right")
                assert oracle.is_from_profiles(li, ri) == i_full
                ld = oracle.dom_profile(part, "left")
                rd = oracle.dom_profile(part, "right")
                assert oracle.kds_from_profiles(ld, rd) == d_full


def test_profile_accessors_monotone():
    m = Mop.from_text("8;0-2,2-4,4-6,0-6,2-6")
    part = m.split_at_edge((2, 6))
    p = oracle.dom_profile(part, "right")
    for k in range(4):
        assert p.d01(k) <= p.d01(k + 1)
        assert p.d10(k) <= p.d10(k + 1)
        for l in range(4):
            assert p.d00(k, l) <= p.d00(k + 1, l + 1)
    assert sum(p.coeff_10().values()) == p.d10(4)
    assert sum(p.coeff_01().values()) == p.d01(4)
    assert sum(p.coeff_00().values()) == p.d00(4, 4)


def test_oracle_ceiling(monkeypatch):
    monkeypatch.setenv("OPCOUNT_ORACLE_CEILING", "5")
    assert oracle.oracle_ceiling() == 5
    with pytest.raises(oracle.OracleError):
        oracle.count_is(Graph.empty(6))
    monkeypatch.delenv("OPCOUNT_ORACLE_CEILING")
    assert oracle.oracle_ceiling() == oracle.DEFAULT_CEILING


def test_is_profile_total():
    rng = rng_for(3, 0)
    for _ in range(10):
        m = random_mop(8, rng)
        e = rng.choice(m.graph.edges())
        part = m.split_at_edge(e)
        ri = oracle.is_profile(part, "right")
        g, _ = part.side_graph("right")
        assert ri.total() == oracle.count_is(g)
        if len(part.right_vertices) >= 3:
            assert ri.i00 > max(ri.i01, ri.i10)
