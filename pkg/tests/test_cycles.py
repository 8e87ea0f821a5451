from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import atlas
from graphcert.cycles import (PRISM, SHARED, STAR, WatkinsObstruction, cycle_through_three, find_obstruction,
                              is_two_connected, obstruction_violations, two_cuts, validate_obstruction)
from graphcert.errors import InvalidArgument
from graphcert.graph import Graph, is_cycle
from oracles import has_cycle_through

TWO_CONNECTED = [g for g in atlas(7, 3) if is_two_connected(g)]


def k23():
    return Graph(range(5), [(a, b) for a in (0, 1) for b in (2, 3, 4)])


def subdivided_prism():
    # triangles a0a1a2 and b0b1b2; matching edge a_i b_i subdivided by y_i = 6 + i
    tri = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    return Graph(range(9), tri + [(i, 6 + i) for i in range(3)] + [(3 + i, 6 + i) for i in range(3)])


def test_shared_cut_in_k23():
    o = cycle_through_three(k23(), 2, 3, 4)
    assert isinstance(o, WatkinsObstruction) and o.kind == SHARED
    assert o.cuts == (frozenset({0, 1}),)
    assert not obstruction_violations(k23(), (2, 3, 4), o)


def test_prism_obstruction():
    g = subdivided_prism()
    o = cycle_through_three(g, 6, 7, 8)
    assert o.kind == PRISM
    assert set(o.cuts) == {frozenset({i, 3 + i}) for i in range(3)}
    assert validate_obstruction(g, 6, 7, 8, o)
    assert WatkinsObstruction.from_json(o.to_json()) == o


def test_star_obstruction():
    # centre 0; each y_i sits on a private 2-cut {0, c_i}
    edges = [(1, 2), (2, 3), (3, 1)]
    for i, c in enumerate((1, 2, 3)):
        y = 4 + i
        edges += [(0, y), (y, c)]
    g = Graph(range(7), edges)
    o = cycle_through_three(g, 4, 5, 6)
    assert o.kind == STAR and o.center == 0
    assert not obstruction_violations(g, (4, 5, 6), o)


def test_k4_has_cycles_through_any_triple():
    k4 = Graph(range(4), combinations(range(4), 2))
    for ys in combinations(range(4), 3):
        c = cycle_through_three(k4, *ys)
        assert is_cycle(k4, c) and set(ys) <= set(c)
        assert find_obstruction(k4, *ys) is None


def test_false_obstruction_rejected():
    k4 = Graph(range(4), combinations(range(4), 2))
    fake = WatkinsObstruction(SHARED, (frozenset({0, 1}),), (frozenset({2}), frozenset({3}), frozenset({0})))
    assert obstruction_violations(k4, (2, 3, 0), fake)


def test_preconditions():
    with pytest.raises(InvalidArgument):
        cycle_through_three(Graph(range(3), [(0, 1), (1, 2)]), 0, 1, 2)
    with pytest.raises(InvalidArgument):
        cycle_through_three(k23(), 2, 2, 3)


def test_two_cuts_of_k23():
    assert [c for c, _ in two_cuts(k23())] == [(0, 1)]


@given(st.sampled_from(TWO_CONNECTED), st.data())
def test_cycle_xor_obstruction(g, data):
    ys = data.draw(st.lists(st.sampled_from(g.vertices), min_size=3, max_size=3, unique=True))
    r = cycle_through_three(g, *ys)
    exists = has_cycle_through(g.to_networkx(), ys)
    if exists:
        assert isinstance(r, tuple) and is_cycle(g, r) and set(ys) <= set(r)
    else:
        assert isinstance(r, WatkinsObstruction) and validate_obstruction(g, *ys, r)
