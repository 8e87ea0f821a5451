"""Two disjoint paths and crossing societies, each with a 3-planar alternative.

The positive side is an exact search: enumerate induced paths for the first
pair (a chord could always be short-cut, so induced paths suffice) and test
whether the second pair stays connected in what is left.

When no linkage exists the witness is built by folding. Repeatedly pick the
largest vertex set that avoids the terminals and has at most three
neighbours, delete it and make its neighbourhood a clique. Each folded set is
connected, so a linkage in the folded graph lifts back to the original;
hence the fully folded graph has no linkage either and, having no small
separations left, must embed in a disc with the terminals on its rim.
Failure to embed would contradict that argument and is reported as an
internal error.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import InternalConsistencyError, InvalidArgument
from .graph import induced_paths, is_path, iter_bits, lowest, mask_of
from .planarity import ThreePlanarWitness, p_reduction, plane_with_boundary, three_planar_violations


@dataclass(frozen=True)
class Linkage:
    paths: tuple
    terminals: tuple

    def violations(self, g):
        out = []
        if len(self.paths) != len(self.terminals):
            return ["one path per terminal pair is required"]
        used = 0
        for i, (p, (s, t)) in enumerate(zip(self.paths, self.terminals)):
            if not is_path(g, p):
                out.append(f"path {i} is not a path of the graph")
                continue
            if {p[0], p[-1]} != {s, t} or (s == t) != (len(p) == 1):
                out.append(f"path {i} does not join {s} and {t}")
            pm = mask_of(p)
            if pm & used:
                out.append(f"path {i} meets an earlier path")
            used |= pm
        return out

    def to_json(self):
        return {"paths": [list(p) for p in self.paths], "terminals": [list(t) for t in self.terminals]}


@dataclass(frozen=True)
class CrossingQuadruple:
    """Positions ``i < j < k < l`` in the society order with disjoint paths ``v_i``-``v_k``, ``v_j``-``v_l``.

    Positions are zero-based.
    """

    indices: tuple
    linkage: Linkage

    def violations(self, g, order):
        i, j, k, l = self.indices
        if not 0 <= i < j < k < l < len(order):
            return ["indices are not strictly increasing positions"]
        if self.linkage.terminals != ((order[i], order[k]), (order[j], order[l])):
            return ["linkage terminals do not match the indices"]
        return self.linkage.violations(g)

    def to_json(self):
        return {"indices": list(self.indices), "linkage": self.linkage.to_json()}


def find_two_linkage(g, s1, t1, s2, t2, budget=None):
    """Disjoint ``s1``-``t1`` and ``s2``-``t2`` paths as a pair, or None."""
    full = g.vertex_mask
    if not g.reach(s1, full & ~mask_of((s2, t2))) >> t1 & 1:
        return None
    if not g.reach(s2, full & ~mask_of((s1, t1))) >> t2 & 1:
        return None

    def guard(pm):
        return g.reach(s2, full & ~pm) >> t2 & 1

    for p in induced_paths(g, s1, t1, full & ~mask_of((s2, t2)), budget, guard):
        rest = full & ~mask_of(p)
        if g.reach(s2, rest) >> t2 & 1:
            return p, g.shortest_path(s2, t2, rest)
    return None


@lru_cache(maxsize=4096)
def _fold(g, keep):
    """Fold maximal keep-free sets with at most three neighbours; return the groups as bitsets."""
    groups = []
    cur = g
    while True:
        best = None
        verts = cur.vertices
        for size in range(4):
            for x in combinations(verts, size):
                xm = mask_of(x)
                for comp in cur.components(cur.vertex_mask & ~xm):
                    if comp & keep:
                        continue
                    key = (-comp.bit_count(), comp & -comp, comp)
                    if best is None or key < best[0]:
                        best = (key, comp)
        if best is None:
            break
        s = best[1]
        nb = cur.neighborhood(s)
        absorbed = [a for a in groups if g.neighborhood(a) & s]
        new = s
        for a in absorbed:
            new |= a
        groups = [a for a in groups if a not in absorbed] + [new]
        clique = [(u, v) for u, v in combinations(iter_bits(nb), 2)]
        cur = cur.without(s).with_edges(clique)
    return tuple(sorted(groups, key=lowest)), cur


def three_planar_witness(g, boundary):
    """Build and self-check a 3-planar witness for ``(g, boundary)``.

    Only call this once the linkage side has been refuted.
    """
    masks, folded = _fold(g, mask_of(boundary))
    groups = tuple(frozenset(iter_bits(a)) for a in masks)
    reduced = p_reduction(g, groups)
    if reduced != folded:
        raise InternalConsistencyError("folding produced a graph different from p(G, A)")
    emb = plane_with_boundary(reduced, boundary)
    if emb is None:
        raise InternalConsistencyError(
            f"no linkage, yet the folded graph does not embed with boundary {tuple(boundary)}")
    w = ThreePlanarWitness(groups, reduced, emb, tuple(boundary))
    bad = three_planar_violations(g, w)
    if bad:
        raise InternalConsistencyError("constructed witness is invalid: " + "; ".join(bad))
    return w


def two_disjoint_paths(g, s1, s2, t1, t2, budget=None):
    """A :class:`Linkage` ``s1``-``t1``, ``s2``-``t2`` or a 3-planar witness for ``(g, s1, s2, t1, t2)``."""
    terms = (s1, s2, t1, t2)
    if len(set(terms)) != 4:
        raise InvalidArgument("terminals must be distinct")
    if any(v not in g for v in terms):
        raise InvalidArgument("terminals must be vertices of the graph")
    found = find_two_linkage(g, s1, t1, s2, t2, budget)
    if found is not None:
        return Linkage(found, ((s1, t1), (s2, t2)))
    return three_planar_witness(g, terms)


def society_dichotomy(g, order, budget=None):
    """A crossing of the society ``(g, order)`` or a 3-planar witness with ``order`` on the rim."""
    order = tuple(order)
    if len(order) < 4:
        raise InvalidArgument("a society needs at least four vertices")
    if len(set(order)) != len(order) or any(v not in g for v in order):
        raise InvalidArgument("society vertices must be distinct vertices of the graph")
    for i, j, k, l in combinations(range(len(order)), 4):
        found = find_two_linkage(g, order[i], order[k], order[j], order[l], budget)
        if found is not None:
            return CrossingQuadruple((i, j, k, l),
                                     Linkage(found, ((order[i], order[k]), (order[j], order[l]))))
    return three_planar_witness(g, order)
