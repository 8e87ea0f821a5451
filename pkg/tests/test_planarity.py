import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import atlas, graphs
from graphcert.errors import InvalidArgument
from graphcert.graph import Graph
from graphcert.harness.corpus import wheel
from graphcert.linkage import two_disjoint_paths
from graphcert.planarity import (PlaneEmbedding, ThreePlanarWitness, cofacial_cycle, fan_to_boundary,
                                 group_violations, has_cyclic_order, is_planar, p_reduction, planar_embed,
                                 plane_with_boundary, plane_with_outer_set, rotation_is_planar,
                                 three_planar_violations, trace_faces)
from oracles import boundary_orders, canon_cycle


def test_trace_faces_of_triangle():
    rot = {0: (1, 2), 1: (2, 0), 2: (0, 1)}
    assert len(trace_faces(rot)) == 2 and rotation_is_planar(rot)


def test_k4_bad_rotation_is_not_planar():
    good = planar_embed(Graph(range(4), combinations(range(4), 2))).rotation
    assert rotation_is_planar(good)
    bad = dict(good)
    bad[0] = (bad[0][1], bad[0][0], bad[0][2])
    assert not rotation_is_planar(bad)


@pytest.mark.parametrize("g", atlas(7), ids=str)
def test_planar_embed_is_checked_by_euler(g):
    emb = planar_embed(g)
    assert (emb is not None) == nx.check_planarity(g.to_networkx())[0]
    if emb is not None:
        assert emb.is_valid_for(g)


def test_k5_and_k33_are_not_planar():
    assert not is_planar(Graph(range(5), combinations(range(5), 2)))
    assert not is_planar(Graph(range(6), [(i, j) for i in range(3) for j in range(3, 6)]))


def test_has_cyclic_order():
    assert has_cyclic_order([0, 1, 2, 3], [2, 3, 0])
    assert has_cyclic_order([0, 1, 2, 3], [3, 1, 0])
    assert not has_cyclic_order([0, 1, 2, 3], [0, 2, 1, 3])
    assert not has_cyclic_order([0, 1], [0, 5])


@given(graphs(min_n=1, max_n=6), st.data())
def test_plane_with_boundary_agrees_with_enumeration(g, data):
    b = data.draw(st.lists(st.sampled_from(g.vertices), unique=True))
    emb = plane_with_boundary(g, b)
    want = canon_cycle(b) in boundary_orders(g.to_networkx(), set(b))
    assert (emb is not None) == want
    if emb is not None:
        assert emb.is_valid_for(g)
        assert has_cyclic_order([v for v, _ in emb.outer], b)


def test_plane_with_boundary_rejects_bad_arguments():
    g = Graph(range(3), [(0, 1)])
    with pytest.raises(InvalidArgument):
        plane_with_boundary(g, [0, 0])
    with pytest.raises(InvalidArgument):
        plane_with_boundary(g, [7])


def test_wheel_rim_order():
    w = wheel(5)
    assert plane_with_boundary(w, [1, 2, 3, 4, 5]) is not None
    assert plane_with_boundary(w, [1, 3, 2, 4, 5]) is None
    assert plane_with_boundary(w, [0, 1, 2]) is not None


def test_outer_set_any_order():
    g = Graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    emb = plane_with_outer_set(g, [0, 1, 2, 3])
    assert emb is not None and set(emb.outer_vertices) == {0, 1, 2, 3}
    assert plane_with_outer_set(wheel(4), [0, 1, 2, 3, 4]) is None


def test_embedding_json_roundtrip():
    emb = plane_with_boundary(wheel(4), [1, 2, 3, 4])
    assert PlaneEmbedding.from_json(emb.to_json()) == emb


def test_p_reduction_and_groups():
    g = Graph(range(6), [(0, 4), (1, 4), (2, 4), (4, 5), (5, 0), (0, 1), (1, 2), (2, 3), (3, 0)])
    red = p_reduction(g, [{4, 5}])
    assert set(red.vertices) == {0, 1, 2, 3}
    assert red.has_edge(0, 2) and red.has_edge(1, 2)
    assert group_violations(g, [{4, 5}], boundary=[4])
    assert group_violations(g, [{4}, {5}])
    with pytest.raises(InvalidArgument):
        p_reduction(g, [{0}])


def test_three_planar_witness_and_mutations():
    cube = Graph.from_networkx(nx.convert_node_labels_to_integers(nx.hypercube_graph(3)))
    emb = planar_embed(cube)
    face = [a for a, _ in emb.faces()[0]]
    assert len(face) == 4
    w = two_disjoint_paths(cube, face[0], face[1], face[2], face[3])
    assert isinstance(w, ThreePlanarWitness)
    assert not three_planar_violations(cube, w)
    swapped = ThreePlanarWitness(w.groups, w.reduced, w.embedding,
                                 (face[0], face[2], face[1], face[3]))
    assert three_planar_violations(cube, swapped)
    wrong = ThreePlanarWitness(w.groups, w.reduced.with_edges([(face[0], face[2])]), w.embedding, w.boundary)
    assert three_planar_violations(cube, wrong)


def test_cofacial_cycle_and_fan_in_wheel():
    w = wheel(6)
    emb = plane_with_boundary(w, [1, 2, 3, 4, 5, 6])
    assert cofacial_cycle(emb, w, 0) == (1, 2, 3, 4, 5, 6)
    fan = fan_to_boundary(emb, w, 0, [1, 3, 5])
    assert fan is not None and sorted(p[-1] for p in fan) == [1, 3, 5]
    with pytest.raises(InvalidArgument):
        cofacial_cycle(emb, w, 1)


def test_random_planar_graphs_embed():
    rng = random.Random(3)
    for _ in range(30):
        pts = nx.random_labeled_tree(9, seed=rng.randrange(10 ** 6))
        g = Graph.from_networkx(pts)
        emb = planar_embed(g)
        assert emb.is_valid_for(g)
