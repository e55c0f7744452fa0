import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opcount.graph import (
    Graph,
    GraphError,
    Graph6Error,
    constrain,
    graph_from_graph6,
    graph_to_graph6,
)


def test_k3_graph6():
    g = graph_from_graph6("Bw")
    assert g.n == 3
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]
    assert graph_to_graph6(g) == "Bw"


def test_header_prefix_accepted():
    assert graph_from_graph6(">>graph6<<Bw").edges() == [(0, 1), (0, 2), (1, 2)]


def test_bad_graph6():
    with pytest.raises(Graph6Error):
        graph_from_graph6("")
    with pytest.raises(Graph6Error):
        graph_from_graph6("B")  # truncated body
    with pytest.raises(Graph6Error):
        graph_from_graph6("Bw\x05")


edge_lists = st.integers(2, 12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            ),
            max_size=20,
        ),
    )
)


@settings(max_examples=80)
@given(edge_lists)
def test_graph6_roundtrip_matches_networkx(case):
    n, edges = case
    g = Graph.from_edges(n, edges)
    s = graph_to_graph6(g)
    assert graph_from_graph6(s) == g
    h = nx.from_graph6_bytes(s.encode())
    assert sorted(h.edges()) == g.edges()
    assert h.number_of_nodes() == g.n


@settings(max_examples=50)
@given(edge_lists)
def test_induced_subgraph_consistent(case):
    n, edges = case
    g = Graph.from_edges(n, edges)
    keep = set(range(0, n, 2))
    sub, relabel = g.induced_subgraph(keep)
    assert sub.n == len(keep)
    for u in keep:
        for v in keep:
            if u < v:
                assert sub.has_edge(relabel[u], relabel[v]) == g.has_edge(u, v)


def test_validation():
    with pytest.raises(GraphError):
        Graph(2, (1, 0))  # asymmetric... mask 1 at vertex 0 is a self-loop
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 5)])
    with pytest.raises(GraphError):
        Graph(2, (2, 0))  # 0-1 edge missing the reverse direction


def test_mutators():
    g = Graph.from_edges(3, [(0, 1)])
    g2 = g.add_edge(1, 2)
    assert g2.has_edge(1, 2) and not g.has_edge(1, 2)
    assert g2.delete_edge(1, 2) == g
    with pytest.raises(GraphError):
        g.delete_edge(1, 2)
    with pytest.raises(GraphError):
        g2.add_edge(0, 1)


def test_structure_predicates():
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert path.is_tree() and path.is_connected()
    assert not Graph.from_edges(4, [(0, 1), (2, 3)]).is_connected()
    assert not Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]).is_tree()
    assert path.degrees() == [1, 2, 2, 1]
    assert list(path.neighbors(1)) == [0, 2]


def test_constraint_validation():
    with pytest.raises(GraphError):
        constrain(forced_in=(1,), forced_out=(1,))
    c = constrain(forced_in=(0,), forced_out=(2,))
    assert c.in_mask() == 1 and c.out_mask() == 4
    with pytest.raises(GraphError):
        c.validate_for(Graph.empty(2))
