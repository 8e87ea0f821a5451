"""Plane embeddings as rotation systems, boundary-constrained planarity and 3-planar witnesses.

A rotation system maps each vertex to the cyclic order of its neighbours.
Faces are traced with the rule "after arriving at ``v`` from ``u``, leave
along the successor of ``u`` in the rotation at ``v``". A rotation system is
planar when every connected component satisfies ``V - E + F = 2``.

The outer face of a :class:`PlaneEmbedding` is given as a cyclic sequence of
*corners*. A corner ``(v, w)`` is the angle at ``v`` that directly follows
the neighbour ``w`` in the rotation at ``v`` (``w`` is None for an isolated
vertex). Corners pin down a face even when a vertex occurs on several faces,
and they let the checker confirm the claim independently: joining a new
vertex to all listed corners, in order, must keep the rotation system planar.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx

from .errors import InvalidArgument
from .graph import Graph, iter_bits, mask_of

_HUB = -1


# rotation systems ----------------------------------------------------------


def trace_faces(rotation):
    """All faces of a rotation system, each as a list of darts ``(u, v)``."""
    pos = {v: {w: i for i, w in enumerate(nb)} for v, nb in rotation.items()}
    seen = set()
    faces = []
    for u in sorted(rotation):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            face = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                face.append(d)
                a, b = d
                nb = rotation[b]
                d = (b, nb[(pos[b][a] + 1) % len(nb)])
            faces.append(face)
    return faces


def _components(rotation):
    left = set(rotation)
    comps = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in rotation[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        left -= comp
        comps.append(comp)
    return comps


def rotation_is_planar(rotation):
    """Euler check: each component of the rotation system has genus zero."""
    for v, nb in rotation.items():
        if len(set(nb)) != len(nb) or v in nb:
            return False
        for w in nb:
            if v not in rotation.get(w, ()):
                return False
    faces = trace_faces(rotation)
    face_of = {}
    for i, f in enumerate(faces):
        for d in f:
            face_of[d] = i
    for comp in _components(rotation):
        edges = sum(len(rotation[v]) for v in comp) // 2
        if edges == 0:
            continue
        nfaces = len({face_of[(v, w)] for v in comp for w in rotation[v]})
        if len(comp) - edges + nfaces != 2:
            return False
    return True


def face_corners(face):
    """Corners of a face given as darts, in walk order."""
    return [(b, a) for a, b in face]


def _insert_hub(rotation, corners, reverse=False):
    rot = {v: list(nb) for v, nb in rotation.items()}
    order = []
    for v, after in corners:
        if v in order:
            continue
        nb = rot[v]
        if after is None:
            if nb:
                return None
            nb.append(_HUB)
        else:
            if after not in nb:
                return None
            nb.insert(nb.index(after) + 1, _HUB)
        order.append(v)
    rot[_HUB] = order[::-1] if reverse else order
    return rot


@dataclass(frozen=True)
class PlaneEmbedding:
    """A planar rotation system plus the corners of its outer face."""

    rotation: dict
    outer: tuple

    @property
    def outer_vertices(self):
        out = []
        for v, _ in self.outer:
            if v not in out:
                out.append(v)
        return tuple(out)

    def faces(self):
        return trace_faces(self.rotation)

    def outer_face_vertices(self):
        """Vertices lying on a face that contains one of the outer corners."""
        found = set()
        darts = set()
        for v, after in self.outer:
            if after is None:
                found.add(v)
            else:
                darts.add((after, v))
        for f in self.faces():
            if darts.intersection(f):
                found.update(a for a, _ in f)
        return found

    def is_valid_for(self, g):
        """Rotation matches ``g``, is planar, and the outer corners share one face."""
        if set(self.rotation) != set(g.vertices):
            return False
        for v, nb in self.rotation.items():
            if sorted(nb) != list(g.neighbors(v)):
                return False
        if not rotation_is_planar(self.rotation):
            return False
        if not self.outer:
            return True
        return any(
            (rot := _insert_hub(self.rotation, self.outer, rev)) is not None and rotation_is_planar(rot)
            for rev in (False, True)
        )

    def to_json(self):
        return {
            "rotation": {str(v): list(nb) for v, nb in sorted(self.rotation.items())},
            "outer": [[v, w] for v, w in self.outer],
        }

    @classmethod
    def from_json(cls, data):
        return cls({int(v): tuple(nb) for v, nb in data["rotation"].items()},
                   tuple((v, w) for v, w in data["outer"]))


def has_cyclic_order(sequence, boundary):
    """True when ``boundary`` occurs as a cyclic subsequence of ``sequence`` in either direction."""
    seq = list(sequence)
    b = list(boundary)
    if not b:
        return True
    if len(set(b)) != len(b) or not set(b) <= set(seq):
        return False
    for cand in (seq, seq[::-1]):
        for start in range(len(cand)):
            rotated = cand[start:] + cand[:start]
            it = iter(rotated)
            if all(x in it for x in b):
                return True
    return False


# planarity tests -------------------------------------------------------------


def _nx(g, extra_edges=(), extra_nodes=()):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_nodes_from(extra_nodes)
    h.add_edges_from(g.edges())
    h.add_edges_from(extra_edges)
    return h


def _rotation_from_nx(emb, vertices):
    return {v: tuple(emb.neighbors_cw_order(v)) if v in emb else () for v in vertices}


def is_planar(g):
    return nx.check_planarity(_nx(g))[0]


def planar_embed(g):
    """A plane embedding of ``g`` or None when ``g`` is not planar."""
    ok, emb = nx.check_planarity(_nx(g))
    if not ok:
        return None
    rot = _rotation_from_nx(emb, g.vertices)
    faces = trace_faces(rot)
    outer = []
    for comp in _components(rot):
        v0 = min(comp)
        if not rot[v0]:
            outer.append((v0, None))
            continue
        dart = (v0, rot[v0][0])
        face = next(f for f in faces if dart in f)
        seen = set()
        for v, w in face_corners(face):
            if v not in seen:
                seen.add(v)
                outer.append((v, w))
    return PlaneEmbedding(rot, tuple(outer))


def _canonical_cycle(seq):
    """Rotation/reflection representative of a cyclic sequence."""
    seq = list(seq)
    if len(seq) <= 2:
        return tuple(seq)
    best = None
    for cand in (seq, seq[::-1]):
        i = cand.index(min(cand))
        r = tuple(cand[i:] + cand[:i])
        best = r if best is None or r < best else best
    return best


def plane_with_boundary(g, boundary):
    """Embed ``g`` in a disc with ``boundary`` on its rim in this cyclic order, or None.

    A hub joined to the boundary vertices plus the rim cycle through them is
    added and the augmented graph is tested for planarity; the hub's rotation
    then fixes the boundary order. The order is matched up to reflection, so
    results are shared between a boundary and its rotations and reversal.
    """
    boundary = list(boundary)
    if len(set(boundary)) != len(boundary):
        raise InvalidArgument("boundary vertices must be distinct")
    if any(b not in g for b in boundary):
        raise InvalidArgument("boundary vertices must belong to the graph")
    if not boundary:
        return planar_embed(g)
    return _plane_with_rim(g, _canonical_cycle(boundary))


@lru_cache(maxsize=1 << 14)
def _plane_with_rim(g, boundary):
    boundary = list(boundary)
    hub = g.max_vertex() + 1
    spokes = [(hub, b) for b in boundary]
    rim = []
    if len(boundary) >= 3:
        rim = [(a, b) for a, b in zip(boundary, boundary[1:] + boundary[:1]) if not g.has_edge(a, b)]
    ok, emb = nx.check_planarity(_nx(g, spokes + rim))
    if not ok:
        return None
    rim_only = {frozenset(e) for e in rim}
    rot = {}
    for v in g.vertices:
        rot[v] = tuple(w for w in emb.neighbors_cw_order(v) if frozenset((v, w)) not in rim_only)
    outer = []
    for b in emb.neighbors_cw_order(hub):
        nb = rot[b]
        i = nb.index(hub)
        rest = nb[i + 1:] + nb[:i]
        outer.append((b, rest[-1] if rest else None))
    rot = {v: tuple(w for w in nb if w != hub) for v, nb in rot.items()}
    return PlaneEmbedding(rot, tuple(outer))


def planar_with_outer_set(g, a):
    """True when ``g`` has a plane drawing with every vertex of ``a`` on the outer face."""
    a = list(a)
    if not a:
        return is_planar(g)
    hub = g.max_vertex() + 1
    return nx.check_planarity(_nx(g, [(hub, v) for v in a]))[0]


def plane_with_outer_set(g, a):
    """An embedding with every vertex of ``a`` on the outer face (in some order), or None.

    Tries each cyclic order of ``a`` up to reversal, so the result always
    carries a checkable boundary order.
    """
    a = sorted(a)
    if len(a) <= 3:
        return plane_with_boundary(g, a)
    if not planar_with_outer_set(g, a):
        return None
    first, rest = a[0], a[1:]
    for perm in permutations(rest):
        if perm[0] > perm[-1]:
            continue
        emb = plane_with_boundary(g, (first,) + perm)
        if emb is not None:
            return emb
    return None


# 3-planar reductions -----------------------------------------------------------


def group_violations(g, groups, boundary=()):
    masks = [mask_of(a) for a in groups]
    bm = mask_of(boundary)
    out = []
    for i, m in enumerate(masks):
        if m & ~g.vertex_mask:
            out.append(f"group {i} contains non-vertices")
        if m & bm:
            out.append(f"group {i} contains a boundary vertex")
        if g.neighborhood(m & g.vertex_mask).bit_count() > 3:
            out.append(f"group {i} has more than 3 neighbours")
    for i, j in combinations(range(len(masks)), 2):
        if masks[i] & masks[j]:
            out.append(f"groups {i} and {j} intersect")
    for i, mi in enumerate(masks):
        ni = g.neighborhood(mi & g.vertex_mask)
        for j, mj in enumerate(masks):
            if i != j and ni & mj:
                out.append(f"group {j} meets the neighbourhood of group {i}")
    return out


def p_reduction(g, groups):
    """Delete each group and make its neighbourhood a clique."""
    bad = group_violations(g, groups)
    if bad:
        raise InvalidArgument("; ".join(bad))
    removed = 0
    cliques = []
    for a in groups:
        m = mask_of(a)
        removed |= m
        nb = list(iter_bits(g.neighborhood(m)))
        cliques += [(u, v) for u, v in combinations(nb, 2)]
    return g.without(removed).with_edges(cliques)


@dataclass(frozen=True)
class ThreePlanarWitness:
    groups: tuple
    reduced: Graph
    embedding: PlaneEmbedding
    boundary: tuple

    def to_json(self):
        return {
            "groups": [sorted(a) for a in self.groups],
            "boundary": list(self.boundary),
            "embedding": self.embedding.to_json(),
        }


def three_planar_violations(g, w):
    out = group_violations(g, w.groups, w.boundary)
    if out:
        return out
    if any(b not in g for b in w.boundary) or len(set(w.boundary)) != len(w.boundary):
        return ["boundary vertices must be distinct vertices of the graph"]
    if p_reduction(g, w.groups) != w.reduced:
        out.append("reduced graph differs from p(G, groups)")
    elif not w.embedding.is_valid_for(w.reduced):
        out.append("embedding is not a plane embedding of the reduced graph")
    elif not has_cyclic_order([v for v, _ in w.embedding.outer], w.boundary):
        out.append("boundary does not appear on the outer face in the given order")
    return out


def validate_three_planar(g, w):
    return not three_planar_violations(g, w)


# faces around an interior vertex -----------------------------------------------


def cofacial_cycle(e, g, w):
    """The cycle induced by the vertices sharing a face with ``w``, or None.

    Returns the cycle as a vertex tuple starting at its smallest vertex and
    continuing towards the smaller of that vertex's two cycle neighbours.
    """
    if w not in g:
        raise InvalidArgument(f"{w} is not a vertex")
    if w in e.outer_face_vertices():
        raise InvalidArgument(f"{w} lies on the outer face")
    cof = set()
    for f in e.faces():
        verts = {a for a, _ in f}
        if w in verts:
            cof |= verts
    cof.discard(w)
    if len(cof) < 3:
        return None
    cm = mask_of(cof)
    if any((g.nbrs(v) & cm).bit_count() != 2 for v in cof) or not g.is_connected(cm):
        return None
    start = min(cof)
    cyc = [start]
    prev = None
    cur = start
    nxt = min(iter_bits(g.nbrs(start) & cm))
    while nxt != start:
        cyc.append(nxt)
        prev, cur = cur, nxt
        nxt = next(x for x in iter_bits(g.nbrs(cur) & cm) if x != prev)
    return tuple(cyc)


def fan_to_boundary(e, g, w, a):
    """Three paths from ``w`` into ``a`` that pairwise meet only at ``w`` and cross the cofacial cycle once.

    Each path uses exactly one vertex of the cycle around ``w`` and exactly
    one vertex of ``a`` (its last). Returns a tuple of three paths or None.
    """
    from .connectivity import _VertexFlow

    cyc = cofacial_cycle(e, g, w)
    if cyc is None:
        raise InvalidArgument(f"the vertices cofacial with {w} do not induce a cycle")
    cm = mask_of(cyc)
    am = mask_of(a) & g.vertex_mask
    if (am >> w) & 1:
        raise InvalidArgument("w must not be a target")
    inner = g.vertex_mask & ~cm & ~(1 << w)

    def succ(v):
        if v == w:
            return iter_bits(g.nbrs(w))
        return iter_bits(g.nbrs(v) & inner)

    flow = _VertexFlow(w, succ, set(iter_bits(am)))
    if flow.run(limit=3) < 3:
        return None
    return tuple(sorted(flow.paths()))
