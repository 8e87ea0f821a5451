"""Blocks, chains of blocks and the nonseparating induced-path searches.

A chain of blocks from ``u`` to ``v`` is a sequence of blocks in which
consecutive blocks share exactly one vertex, non-consecutive blocks are
disjoint, and ``u``/``v`` sit in the end blocks away from the shared vertices.
The searches below ask whether a whole residual graph is such a chain.
"""

from dataclasses import dataclass
from itertools import combinations

from .connectivity import is_k_A_connected
from .errors import InternalConsistencyError, InvalidArgument
from .graph import Separation, induced_paths, is_induced_path, is_path, iter_bits, mask_of
from .planarity import plane_with_outer_set


@dataclass(frozen=True)
class BlockStructure:
    """Blocks (vertex sets, ascending by smallest vertex) and cut vertices."""

    blocks: tuple
    cut_vertices: frozenset

    def nontrivial(self, block):
        return len(block) >= 3

    def blocks_of(self, v):
        return [b for b in self.blocks if v in b]


def block_decomposition(g):
    """Blocks and cut vertices of ``g`` (iterative Hopcroft–Tarjan).

    An isolated vertex forms a trivial one-vertex block.
    """
    disc = {}
    low = {}
    blocks = []
    cuts = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if g.degree(root) == 0:
            blocks.append(frozenset((root,)))
            continue
        edge_stack = []
        root_children = 0
        stack = [(root, None, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if parent is not None:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        if stack[-1][1] is not None:
                            cuts.add(parent)
                        comp = set()
                        while True:
                            a, b = edge_stack.pop()
                            comp.update((a, b))
                            if (a, b) == (parent, v):
                                break
                        blocks.append(frozenset(comp))
                continue
            if w == parent:
                continue
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((v, w))
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(g.neighbors(w))))
            elif disc[w] < disc[v]:
                low[v] = min(low[v], disc[w])
                edge_stack.append((v, w))
        if root_children >= 2:
            cuts.add(root)
    blocks.sort(key=lambda b: (min(b), sorted(b)))
    return BlockStructure(tuple(blocks), frozenset(cuts))


@dataclass(frozen=True)
class BlockChain:
    blocks: tuple
    u: int
    v: int

    @property
    def vertices(self):
        out = set()
        for b in self.blocks:
            out |= b
        return frozenset(out)

    def to_json(self):
        return {"blocks": [sorted(b) for b in self.blocks], "u": self.u, "v": self.v}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(frozenset(b) for b in data["blocks"]), data["u"], data["v"])


def chain_violations(g, chain, whole=False):
    """Reasons ``chain`` is not a chain of blocks of ``g`` from ``chain.u`` to ``chain.v``.

    With ``whole`` set the chain must also cover every vertex of ``g``.
    """
    bs = block_decomposition(g)
    known = set(bs.blocks)
    blocks = [frozenset(b) for b in chain.blocks]
    out = []
    if not blocks:
        return ["a chain needs at least one block"]
    for i, b in enumerate(blocks):
        if b not in known or len(b) < 2:
            out.append(f"block {i} is not a block of the graph")
    k = len(blocks)
    for i in range(k - 1):
        if len(blocks[i] & blocks[i + 1]) != 1:
            out.append(f"blocks {i} and {i + 1} do not share exactly one vertex")
    for i, j in combinations(range(k), 2):
        if j >= i + 2 and blocks[i] & blocks[j]:
            out.append(f"blocks {i} and {j} intersect")
    u, v = chain.u, chain.v
    if k == 1:
        if u == v or u not in blocks[0] or v not in blocks[0]:
            out.append("endpoints are not distinct vertices of the single block")
    else:
        if u not in blocks[0] - blocks[1]:
            out.append("u is not in the first block away from the second")
        if v not in blocks[-1] - blocks[-2]:
            out.append("v is not in the last block away from the previous one")
    if whole and set().union(*blocks) != set(g.vertices):
        out.append("the chain does not cover the graph")
    return out


def chain_of_blocks(g, u, v):
    """The chain of blocks from ``u`` to ``v`` formed by all of ``g``, or None."""
    if u == v:
        raise InvalidArgument("a chain of blocks needs distinct endpoints")
    if u not in g or v not in g or not g.is_connected():
        return None
    bs = block_decomposition(g)
    first = bs.blocks_of(u)
    if len(first) != 1:
        return None
    seq = [first[0]]
    prev_cut = None
    while True:
        cur = seq[-1]
        nxt_cuts = [c for c in cur & bs.cut_vertices if c != prev_cut]
        if not nxt_cuts:
            break
        if len(nxt_cuts) > 1:
            return None
        c = nxt_cuts[0]
        around = [b for b in bs.blocks_of(c) if b != cur]
        if len(around) != 1:
            return None
        seq.append(around[0])
        prev_cut = c
    if len(seq) != len(bs.blocks):
        return None
    chain = BlockChain(tuple(seq), u, v)
    return chain if not chain_violations(g, chain) else None


def _require(cond, message):
    if not cond:
        raise InvalidArgument(message)


def _check_roles(g, x1, x2, y1, y2):
    roles = (x1, x2, y1, y2)
    _require(len(set(roles)) == 4 and all(r in g for r in roles), "roles must be four distinct vertices")
    for a, b in combinations(roles, 2):
        want = {a, b} != {y1, y2}
        _require(g.has_edge(a, b) == want,
                 f"the roles must induce K4^- missing exactly y1y2 (pair {a}-{b})")


def chain_dichotomy_search(g, x1, x2, y1, y2, x, b, budget=None):
    """An induced ``x1``-``x2`` path leaving a chain of blocks, or a planar 4-separation.

    Returns ``(path, chain)`` for the path outcome, ``(separation, embedding)``
    for the separation outcome, or None if neither is found.
    """
    a = (x1, x2, y1, y2)
    _require(len(set(a)) == 4 and all(r in g for r in a), "x1, x2, y1, y2 must be distinct vertices")
    _require(is_k_A_connected(g, 4, a), "g must be (4, {x1, x2, y1, y2})-connected")
    x = tuple(x)
    _require(is_path(g, x) and x[0] == x1 and x[-1] == x2 and len(x) >= 3,
             "x must be an x1-x2 path avoiding the edge x1x2")
    rest = g.without(x)
    _require(not chain_violations(rest, b), "b must be a chain of blocks of g - X")
    _require((b.u, b.v) == (y1, y2), "b must run from y1 to y2")
    bmask = mask_of(b.vertices)
    h = g.without_edges([(x1, x2)]) if g.has_edge(x1, x2) else g
    for p in induced_paths(h, x1, x2, h.vertex_mask & ~bmask, budget):
        if len(p) < 3:
            continue
        chain = chain_of_blocks(g.without(p), y1, y2)
        if chain is None:
            continue
        if not is_induced_path(h, p) or not b.vertices <= chain.vertices:
            raise InternalConsistencyError("induced-path search returned an invalid path")
        return p, chain
    keep = bmask | (1 << x1) | (1 << x2)
    full = g.vertex_mask
    for s in combinations(g.vertices, 4):
        if budget is not None:
            budget.tick()
        sm = mask_of(s)
        comps = g.components(full & ~sm)
        movable = [c for c in comps if not c & keep]
        if not movable:
            continue
        found = planar_far_side(g, s, sm, movable, 6)
        if found is not None:
            return found
    return None


def planar_far_side(g, s, sm, movable, min_size, drop=()):
    """First (largest-first) union of ``movable`` components giving a planar far side."""
    full = g.vertex_mask
    subsets = []
    for r in range(len(movable), 0, -1):
        subsets.extend(combinations(movable, r))
    for pick in subsets:
        d = 0
        for c in pick:
            d |= c
        if (d | sm).bit_count() < min_size or d | sm == full:
            continue
        sep = Separation(frozenset(iter_bits(full & ~d)), frozenset(iter_bits(d | sm)))
        side = sep.side_graph(g, 2).without(drop)
        emb = plane_with_outer_set(side, [v for v in s if v not in drop])
        if emb is not None:
            return sep, emb
    return None


def classify_path_search(g, x1, x2, y1, y2, z0, z1, budget=None):
    """``(i, X, chain)`` with ``X`` an induced ``z_i``-``x2`` path of ``g - x1`` leaving a good chain.

    The residual ``(g - x1) - X`` must be a chain of blocks from ``y1`` to
    ``y2`` with ``y1`` or ``y2`` in a nontrivial block, and ``X`` must avoid
    ``z_{1-i}``. Returns None when no such path exists.
    """
    _check_roles(g, x1, x2, y1, y2)
    zs = (z0, z1)
    _require(z0 != z1, "z0 and z1 must be distinct")
    for z in zs:
        _require(z in g and g.has_edge(x1, z) and z not in (x2, y1, y2),
                 f"z = {z} must be a neighbour of x1 other than x2, y1, y2")
    h = g.without([x1])
    for i in (0, 1):
        within = h.vertex_mask & ~mask_of((zs[1 - i], y1, y2))
        for p in induced_paths(h, zs[i], x2, within, budget):
            res = h.without(p)
            chain = chain_of_blocks(res, y1, y2)
            if chain is None or not _end_nontrivial(chain, y1, y2):
                continue
            if not is_induced_path(h, p) or zs[1 - i] in p:
                raise InternalConsistencyError("induced-path search returned an invalid path")
            return i, p, chain
    return None


def _end_nontrivial(chain, y1, y2):
    return any(len(b) >= 3 and (y1 in b or y2 in b) for b in chain.blocks)
