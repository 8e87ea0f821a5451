import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from graphcert.budget import Budget
from graphcert.errors import BudgetExhausted, InvalidArgument
from graphcert.graph import (Graph, Separation, bridges_of, contract, edge_count, induced_paths,
                             is_cycle, is_induced_path, is_path, iter_bits, mask_of, restrict_edges_at)


def test_basic_queries():
    g = Graph(range(4), [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4 and g.m == 3
    assert g.neighbors(1) == (0, 2)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert 3 in g and 4 not in g
    assert g.shortest_path(0, 3) == (0, 1, 2, 3)
    assert g.without([1]).components() == [1, 0b1100]


def test_rejects_self_loops():
    with pytest.raises(InvalidArgument):
        Graph([0], [(0, 0)])


def test_hashable_and_equal():
    a = Graph(range(3), [(0, 1), (1, 2)])
    b = Graph([2, 1, 0], [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != a.with_edges([(0, 2)])


@given(graphs(max_n=9))
def test_networkx_roundtrip(g):
    h = g.to_networkx()
    assert Graph.from_networkx(h) == g
    assert len(g.components()) == nx.number_connected_components(h) or g.n == 0


@given(graphs(max_n=9), st.data())
def test_components_match_networkx(g, data):
    h = g.to_networkx()
    comps = {frozenset(iter_bits(c)) for c in g.components()}
    assert comps == {frozenset(c) for c in nx.connected_components(h)}


@given(graphs(min_n=2, max_n=9), st.data())
def test_shortest_path_length(g, data):
    s = data.draw(st.sampled_from(g.vertices))
    t = data.draw(st.sampled_from(g.vertices))
    p = g.shortest_path(s, t)
    h = g.to_networkx()
    if nx.has_path(h, s, t):
        assert is_path(g, p) and len(p) - 1 == nx.shortest_path_length(h, s, t)
    else:
        assert p is None


@given(graphs(min_n=2, max_n=7), st.data())
def test_induced_paths_are_exactly_the_induced_paths(g, data):
    s, t = data.draw(st.lists(st.sampled_from(g.vertices), min_size=2, max_size=2, unique=True))
    got = set(induced_paths(g, s, t, g.vertex_mask))
    want = {tuple(p) for p in nx.all_simple_paths(g.to_networkx(), s, t) if is_induced_path(g, p)}
    assert got == want


def test_induced_paths_respects_budget():
    g = Graph(range(8), [(i, j) for i in range(8) for j in range(i + 1, 8) if (i + j) % 3])
    with pytest.raises(BudgetExhausted):
        list(induced_paths(g, 0, 6, g.vertex_mask, Budget(max_nodes=2)))


def test_path_and_cycle_predicates():
    g = Graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert is_path(g, (0, 1, 2)) and not is_path(g, (0, 1, 0))
    assert is_cycle(g, (0, 1, 2, 3)) and not is_cycle(g, (0, 1))
    assert is_induced_path(g, (0, 1, 2)) is False
    assert is_induced_path(g, (0, 1))


@given(graphs(min_n=2, max_n=8), st.data())
def test_contract_matches_networkx(g, data):
    comps = [c for c in g.components() if c.bit_count() >= 1]
    c = data.draw(st.sampled_from(comps))
    verts = sorted(iter_bits(c))
    h = g.to_networkx()
    want = h
    for v in verts[1:]:
        want = nx.contracted_nodes(want, verts[0], v, self_loops=False)
    assert contract(g, verts) == Graph.from_networkx(want)


def test_contract_rejects_disconnected_sets():
    g = Graph(range(3), [(0, 1)])
    with pytest.raises(InvalidArgument):
        contract(g, [0, 2])


def test_restrict_edges_and_edge_count():
    g = Graph(range(5), [(0, i) for i in range(1, 5)] + [(1, 2)])
    r = restrict_edges_at(g, 0, {1, 2})
    assert r.neighbors(0) == (1, 2) and r.has_edge(1, 2)
    assert edge_count(g, 0, {1, 2, 3}) == 3
    assert edge_count(g, 0, g.subgraph([0, 4])) == 1


def test_bridges_of_cycle_with_chord_and_pendant_bridge():
    g = Graph(range(6), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 1), (4, 3), (5, 4)])
    cyc = g.without_edges([(0, 2)]).subgraph(range(4))
    dec = bridges_of(g, cyc)
    chords = [b for b in dec.bridges if b.is_chord]
    others = [b for b in dec.bridges if not b.is_chord]
    assert [b.edges for b in chords] == [frozenset({(0, 2)})]
    assert len(others) == 1
    assert others[0].interior == {4, 5} and others[0].attachments == {1, 3}


@given(graphs(min_n=3, max_n=8))
def test_bridges_partition_the_edges(g):
    l = g.subgraph(g.vertices[: g.n // 2])
    dec = bridges_of(g, l)
    edges = set(l.edges())
    for b in dec.bridges:
        assert not edges & b.edges
        edges |= b.edges
    assert edges == set(g.edges())


def test_separation_sides():
    g = Graph(range(5), [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3), (3, 4), (1, 2)])
    sep = Separation(frozenset({0, 1, 2}), frozenset({1, 2, 3, 4}))
    assert sep.is_separation_of(g) and sep.order == 2
    assert not sep.side_graph(g, 2).has_edge(1, 2)
    assert sep.side_graph(g, 2, boundary_edges=True).has_edge(1, 2)
    assert not Separation(frozenset({0, 1}), frozenset({1, 2, 3, 4})).is_separation_of(g)
    assert mask_of(sep.boundary) == 0b110
