"""Immutable simple graphs over small integer vertex ids.

Adjacency is kept as one Python ``int`` bitset per vertex (bit ``v`` set means
adjacent to ``v``), so neighbourhood unions and intersections are single
integer operations. Every method that "changes" a graph returns a new one.
"""

from dataclasses import dataclass, field

from .errors import InvalidArgument


def iter_bits(mask):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask):
    return (mask & -mask).bit_length() - 1


class Graph:
    """A finite simple undirected graph.

    Vertices are non-negative integers and are always iterated in ascending
    order. Instances are hashable and compare equal when vertex sets and edge
    sets coincide.
    """

    __slots__ = ("_vmask", "_adj", "_vertices", "_hash")

    def __init__(self, vertices=(), edges=()):
        vmask = mask_of(vertices)
        adj = {}
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"self-loop at {u}")
            if u < 0 or v < 0:
                raise InvalidArgument("vertex ids must be non-negative")
            vmask |= (1 << u) | (1 << v)
            adj[u] = adj.get(u, 0) | (1 << v)
            adj[v] = adj.get(v, 0) | (1 << u)
        self._set(vmask, adj)

    def _set(self, vmask, adj):
        self._vmask = vmask
        self._adj = {v: adj.get(v, 0) for v in iter_bits(vmask)}
        self._vertices = tuple(self._adj)
        self._hash = None

    @classmethod
    def _raw(cls, vmask, adj):
        g = cls.__new__(cls)
        g._set(vmask, adj)
        return g

    # basic queries -------------------------------------------------------

    @property
    def vertices(self):
        return self._vertices

    @property
    def vertex_mask(self):
        return self._vmask

    @property
    def n(self):
        return len(self._vertices)

    @property
    def m(self):
        return sum(a.bit_count() for a in self._adj.values()) // 2

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v >= 0 and (self._vmask >> v) & 1 == 1

    def __iter__(self):
        return iter(self._vertices)

    def nbrs(self, v):
        """Neighbourhood of ``v`` as a bitset."""
        return self._adj[v]

    def neighbors(self, v):
        return tuple(iter_bits(self._adj[v]))

    def degree(self, v):
        return self._adj[v].bit_count()

    def has_edge(self, u, v):
        a = self._adj.get(u)
        return a is not None and (a >> v) & 1 == 1

    def edges(self):
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, a in self._adj.items():
            for v in iter_bits(a >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def neighborhood(self, mask):
        """Vertices outside ``mask`` adjacent to some vertex of ``mask``."""
        out = 0
        for v in iter_bits(mask):
            out |= self._adj[v]
        return out & ~mask

    def max_vertex(self):
        return self._vertices[-1] if self._vertices else -1

    # derived graphs ------------------------------------------------------

    def induced(self, mask):
        """Subgraph induced by the vertex bitset ``mask``."""
        mask &= self._vmask
        return Graph._raw(mask, {v: self._adj[v] & mask for v in iter_bits(mask)})

    def subgraph(self, vertices):
        return self.induced(mask_of(vertices))

    def without(self, vertices):
        """Delete a vertex set (iterable or bitset)."""
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        return self.induced(self._vmask & ~mask)

    def without_edges(self, edges):
        adj = dict(self._adj)
        for u, v in edges:
            if u in adj and v in adj:
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
        return Graph._raw(self._vmask, adj)

    def with_edges(self, edges, vertices=()):
        adj = dict(self._adj)
        vmask = self._vmask | mask_of(vertices)
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"self-loop at {u}")
            vmask |= (1 << u) | (1 << v)
            adj[u] = adj.get(u, 0) | (1 << v)
            adj[v] = adj.get(v, 0) | (1 << u)
        return Graph._raw(vmask, adj)

    def relabel(self, mapping):
        """Rename vertices through the injective ``mapping``."""
        if len(set(mapping[v] for v in self._vertices)) != self.n:
            raise InvalidArgument("relabel mapping must be injective")
        return Graph((mapping[v] for v in self._vertices),
                     ((mapping[u], mapping[v]) for u, v in self.edges()))

    def compact(self):
        """Relabel vertices to ``0..n-1`` preserving their order."""
        return self.relabel({v: i for i, v in enumerate(self._vertices)})

    # connectivity helpers ------------------------------------------------

    def reach(self, start, within=None):
        """Bitset of vertices reachable from ``start`` inside ``within``."""
        within = self._vmask if within is None else within & self._vmask
        seen = frontier = (1 << start) & within
        adj = self._adj
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def components(self, within=None):
        """Connected components (bitsets) of the subgraph induced by ``within``."""
        rest = self._vmask if within is None else within & self._vmask
        out = []
        while rest:
            c = self.reach(lowest(rest), rest)
            out.append(c)
            rest &= ~c
        return out

    def is_connected(self, within=None):
        rest = self._vmask if within is None else within & self._vmask
        return rest == 0 or self.reach(lowest(rest), rest) == rest

    def shortest_path(self, s, t, within=None):
        """A shortest ``s``-``t`` path inside ``within`` (ties: lowest ids), or None."""
        within = (self._vmask if within is None else within) | (1 << s) | (1 << t)
        parent = {s: None}
        frontier = [s]
        seen = 1 << s
        while frontier:
            nxt = []
            for v in frontier:
                for w in iter_bits(self._adj[v] & within & ~seen):
                    seen |= 1 << w
                    parent[w] = v
                    if w == t:
                        path = [t]
                        while parent[path[-1]] is not None:
                            path.append(parent[path[-1]])
                        return tuple(reversed(path))
                    nxt.append(w)
            frontier = nxt
        return (s,) if s == t else None

    # dunder --------------------------------------------------------------

    def _key(self):
        return (self._vmask, tuple(self._adj.values()))

    def __eq__(self, other):
        return isinstance(other, Graph) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(self._vertices)
        h.add_edges_from(self.edges())
        return h

    @classmethod
    def from_networkx(cls, h):
        return cls(h.nodes(), h.edges())


# paths -------------------------------------------------------------------


def is_path(g, p):
    """True if ``p`` is a sequence of distinct, consecutively adjacent vertices of ``g``."""
    if not p or len(set(p)) != len(p) or any(v not in g for v in p):
        return False
    return all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


def is_cycle(g, c):
    """True if ``c`` (listed without repeating the first vertex) is a cycle of ``g``."""
    return len(c) >= 3 and is_path(g, c) and g.has_edge(c[-1], c[0])


def is_induced_path(g, p):
    if not is_path(g, p):
        return False
    pm = mask_of(p)
    for i, v in enumerate(p):
        allowed = 0
        if i > 0:
            allowed |= 1 << p[i - 1]
        if i + 1 < len(p):
            allowed |= 1 << p[i + 1]
        if g.nbrs(v) & pm & ~allowed:
            return False
    return True


def induced_paths(g, s, t, within, budget=None, guard=None):
    """Yield every induced ``s``-``t`` path whose vertices lie in ``within``.

    Depth-first with chord pruning: the walk only extends to vertices with no
    neighbour among earlier path vertices other than the tip, and a branch is
    abandoned once ``t`` is unreachable through unblocked vertices.
    ``budget.tick`` is called once per extension step. ``guard``, when given,
    receives the bitset of the partial path and may return False to prune.
    """
    if s == t:
        yield (s,)
        return
    within = (within & g.vertex_mask) | (1 << s) | (1 << t)
    adj = g._adj
    tbit = 1 << t

    def options(tip, blocked):
        nb = adj[tip] & within & ~blocked
        if nb & tbit:
            return iter((t,))
        if not g.reach(tip, within & ~blocked | (1 << tip)) & tbit:
            return iter(())
        return iter_bits(nb)

    path = [s]
    stack = [(options(s, 1 << s), 1 << s)]
    while stack:
        it, blk = stack[-1]
        nxt = next(it, None)
        if nxt is None:
            stack.pop()
            path.pop()
            continue
        if budget is not None:
            budget.tick()
        if nxt == t:
            yield tuple(path) + (t,)
            continue
        nblk = blk | adj[path[-1]] | (1 << nxt)
        if guard is not None and not guard(mask_of(path) | (1 << nxt)):
            continue
        path.append(nxt)
        stack.append((options(nxt, nblk), nblk))


# separations and bridges -------------------------------------------------


@dataclass(frozen=True)
class Separation:
    """A pair of vertex sets covering the graph with no edge between the private parts."""

    side1: frozenset
    side2: frozenset

    @property
    def boundary(self):
        return self.side1 & self.side2

    @property
    def order(self):
        return len(self.boundary)

    def is_separation_of(self, g):
        if self.side1 | self.side2 != frozenset(g.vertices):
            return False
        only1 = mask_of(self.side1 - self.side2)
        only2 = mask_of(self.side2 - self.side1)
        return g.neighborhood(only1) & only2 == 0

    def side_graph(self, g, which, boundary_edges=False):
        """The side ``which`` (1 or 2) as a graph.

        Edges with both ends in the boundary are assigned to the other side
        unless ``boundary_edges`` is set.
        """
        side = self.side1 if which == 1 else self.side2
        h = g.subgraph(side)
        if not boundary_edges:
            b = sorted(self.boundary)
            h = h.without_edges([(u, v) for i, u in enumerate(b) for v in b[i + 1:]])
        return h

    def to_json(self):
        return {"side1": sorted(self.side1), "side2": sorted(self.side2)}


@dataclass(frozen=True)
class Bridge:
    interior: frozenset
    edges: frozenset
    attachments: frozenset

    @property
    def is_chord(self):
        return not self.interior


@dataclass(frozen=True)
class BridgeDecomposition:
    host: Graph
    skeleton: Graph
    bridges: tuple = field(default_factory=tuple)


def _check_subgraph(g, sub):
    if any(v not in g for v in sub.vertices) or any(not g.has_edge(u, v) for u, v in sub.edges()):
        raise InvalidArgument("skeleton is not a subgraph of the host")


def bridges_of(g, l):
    """All ``l``-bridges of ``g``.

    Each edge of ``g`` with both ends on ``l`` but not in ``l`` is a one-edge
    bridge; each component of ``g - V(l)`` together with its edges into ``l``
    is another.
    """
    _check_subgraph(g, l)
    lmask = l.vertex_mask
    bridges = []
    for u, v in g.edges():
        if (lmask >> u) & 1 and (lmask >> v) & 1 and not l.has_edge(u, v):
            bridges.append(Bridge(frozenset(), frozenset({(u, v)}), frozenset({u, v})))
    for comp in g.components(g.vertex_mask & ~lmask):
        edges = set()
        att = 0
        for v in iter_bits(comp):
            for w in iter_bits(g.nbrs(v)):
                if (comp >> w) & 1 and w < v:
                    continue
                edges.add((min(v, w), max(v, w)))
                if (lmask >> w) & 1:
                    att |= 1 << w
        bridges.append(Bridge(frozenset(iter_bits(comp)), frozenset(edges),
                              frozenset(iter_bits(att))))
    return BridgeDecomposition(g, l, tuple(bridges))


# elementary operations ---------------------------------------------------


def contract(g, m):
    """Contract the connected vertex set ``m`` to its smallest vertex."""
    mm = mask_of(m)
    if not mm:
        raise InvalidArgument("cannot contract an empty set")
    if mm & ~g.vertex_mask:
        raise InvalidArgument("contracted set contains non-vertices")
    if not g.is_connected(mm):
        raise InvalidArgument("contracted set does not induce a connected subgraph")
    z = lowest(mm)
    nz = g.neighborhood(mm)
    adj = {}
    keep = g.vertex_mask & ~mm
    for v in iter_bits(keep):
        a = g.nbrs(v) & keep
        if (nz >> v) & 1:
            a |= 1 << z
        adj[v] = a
    adj[z] = nz
    return Graph._raw(keep | (1 << z), adj)


def restrict_edges_at(g, x, keep):
    """Drop every edge ``xv`` of ``g`` with ``v`` outside ``keep``."""
    if x not in g:
        raise InvalidArgument(f"{x} is not a vertex")
    km = mask_of(keep)
    return g.without_edges([(x, v) for v in iter_bits(g.nbrs(x) & ~km)])


def edge_count(g, x, s):
    """Number of edges from ``x`` to the vertex set (or subgraph) ``s``."""
    if x not in g:
        raise InvalidArgument(f"{x} is not a vertex")
    sm = s.vertex_mask if isinstance(s, Graph) else mask_of(s)
    return (g.nbrs(x) & sm & ~(1 << x)).bit_count()
