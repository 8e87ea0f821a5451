"""Menger-type machinery: vertex connectivity, (k, A)-connectivity and path fans.

All flows here have unit vertex capacities and are computed by breadth-first
augmentation on the vertex-split network, exploring lower ids first, so the
paths returned are reproducible.

(k, A)-connectivity uses the fan definition: every vertex outside ``A`` has
``k`` paths to distinct vertices of ``A`` that share only their start and meet
``A`` only at their ends.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidArgument, NoSuchFan
from .graph import iter_bits, mask_of

_SINK = -1


class _VertexFlow:
    """Unit vertex-capacity flow from one source vertex to a set of sinks.

    ``succ(v)`` lists the vertices ``v`` may forward flow to. Every vertex
    other than the source can carry ``cap.get(v, 1)`` units. A vertex in
    ``sinks`` drains into the super-sink and forwards nothing.
    """

    def __init__(self, source, succ, sinks, cap=None):
        self.source = source
        self.succ = succ
        self.sinks = sinks
        self.cap = cap or {}
        self.flow = {}  # (a, b) -> units on the arc; nodes are ("i"/"o", v)
        self.value = 0

    def _arcs(self, node):
        if node == _SINK:
            return
        side, v = node
        if side == "i":
            yield ("o", v), self.cap.get(v, 1)
        elif v in self.sinks:
            yield _SINK, self.cap.get(v, 1)
        else:
            for w in self.succ(v):
                if w != self.source:
                    yield ("i", w), 1

    def _residual(self, node, preds):
        # forward residual arcs, then backward arcs carrying flow into node
        for nxt, c in self._arcs(node):
            if self.flow.get((node, nxt), 0) < c:
                yield nxt
        for prev in preds.get(node, ()):
            if self.flow.get((prev, node), 0) > 0:
                yield prev

    def _augment(self):
        start = ("o", self.source)
        parent = {start: None}
        preds = self._preds()
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt in self._residual(node, preds):
                if nxt in parent:
                    continue
                parent[nxt] = node
                if nxt == _SINK:
                    self._apply(parent)
                    return True
                queue.append(nxt)
        return False

    def _preds(self):
        preds = {}
        for (a, b), f in self.flow.items():
            if f > 0:
                preds.setdefault(b, []).append(a)
        for b in preds:
            preds[b].sort(key=lambda x: (x[1], x[0]) if x != _SINK else (-1, ""))
        return preds

    def _apply(self, parent):
        node = _SINK
        while parent[node] is not None:
            prev = parent[node]
            back = self.flow.get((node, prev), 0)
            if back > 0:
                self.flow[(node, prev)] = back - 1
            else:
                self.flow[(prev, node)] = self.flow.get((prev, node), 0) + 1
            node = prev
        self.value += 1

    def seed(self, paths):
        for p in paths:
            nodes = [("o", p[0])]
            for v in p[1:]:
                nodes += [("i", v), ("o", v)]
            nodes.append(_SINK)
            for a, b in zip(nodes, nodes[1:]):
                self.flow[(a, b)] = self.flow.get((a, b), 0) + 1
            self.value += 1

    def run(self, limit=None):
        while limit is None or self.value < limit:
            if not self._augment():
                break
        return self.value

    def paths(self):
        out_arcs = {}
        for (a, b), f in sorted(self.flow.items(), key=_arc_key):
            for _ in range(f):
                out_arcs.setdefault(a, []).append(b)
        paths = []
        start = ("o", self.source)
        while out_arcs.get(start):
            node = out_arcs[start].pop(0)
            path = [self.source]
            while node != _SINK:
                if node[0] == "i":
                    path.append(node[1])
                node = out_arcs[node].pop(0)
            paths.append(tuple(path))
        return paths


def _arc_key(item):
    (a, b), _ = item
    key = lambda x: (-1, "") if x == _SINK else (x[1], x[0])
    return key(a), key(b)


def _fan_flow(g, u, amask, blocked=0):
    """Flow network for ``u``-to-``A`` fans whose paths meet ``A`` only at their ends."""
    amask &= ~(1 << u)
    usable = g.vertex_mask & ~blocked

    def succ(v):
        return iter_bits(g.nbrs(v) & usable)

    return _VertexFlow(u, succ, set(iter_bits(amask)))


def local_connectivity(g, s, t):
    """Maximum number of internally disjoint ``s``-``t`` paths (``s``, ``t`` nonadjacent)."""
    big = g.n + 1

    def succ(v):
        return iter_bits(g.nbrs(v))

    return _VertexFlow(s, succ, {t}, cap={t: big}).run()


def vertex_connectivity(g):
    """Smallest number of vertices whose deletion disconnects ``g`` or leaves one vertex."""
    n = g.n
    if n < 2:
        raise InvalidArgument("vertex connectivity needs at least two vertices")
    if not g.is_connected():
        return 0
    best = n - 1
    vs = g.vertices
    # some vertex of any minimum cut's complement lies among the first best+1 vertices
    for i, s in enumerate(vs):
        if i > best:
            break
        for t in vs:
            if t != s and not g.has_edge(s, t):
                best = min(best, local_connectivity(g, s, t))
    return best


def max_fan_size(g, u, a):
    return _fan_flow(g, u, mask_of(a)).run()


def is_k_A_connected(g, k, a):
    """True when every vertex outside ``a`` has ``k`` independent paths into ``a``."""
    if k < 1:
        raise InvalidArgument("k must be positive")
    am = mask_of(a)
    if am & ~g.vertex_mask:
        raise InvalidArgument("A must be a subset of V(G)")
    for v in iter_bits(g.vertex_mask & ~am):
        if _fan_flow(g, v, am).run(limit=k) < k:
            return False
    return True


@dataclass(frozen=True)
class PathFan:
    center: int
    targets: tuple
    paths: tuple

    def violations(self, g, a):
        """Reasons this fan is not an independent ``center``-to-``a`` fan in ``g``."""
        from .graph import is_path

        am = mask_of(a)
        out = []
        if len(self.targets) != len(self.paths):
            out.append("targets and paths differ in length")
        if len(set(self.targets)) != len(self.targets):
            out.append("targets not distinct")
        seen = {}
        for i, p in enumerate(self.paths):
            if not is_path(g, p):
                out.append(f"path {i} is not a path of the graph")
                continue
            if p[0] != self.center:
                out.append(f"path {i} does not start at the center")
            if i < len(self.targets) and p[-1] != self.targets[i]:
                out.append(f"path {i} does not end at its target")
            if not (am >> p[-1]) & 1:
                out.append(f"path {i} ends outside A")
            if mask_of(p[:-1]) & am:
                out.append(f"path {i} meets A before its end")
            for v in p[1:]:
                if v in seen:
                    out.append(f"paths {seen[v]} and {i} share vertex {v}")
                seen[v] = i
        return out


def _as_fan(u, paths):
    return PathFan(u, tuple(p[-1] for p in paths), tuple(paths))


def independent_fan(g, u, a, n):
    """``n`` independent paths from ``u`` to distinct vertices of ``a``, or None."""
    if n < 1:
        raise InvalidArgument("fan size must be positive")
    am = mask_of(a)
    if (am >> u) & 1:
        raise InvalidArgument("the fan center must lie outside A")
    flow = _fan_flow(g, u, am)
    if flow.run(limit=n) < n:
        return None
    return _as_fan(u, sorted(flow.paths()))


def reroute_fan(g, u, a, required, n):
    """An ``n``-fan from ``u`` into ``a`` whose first ``len(required)`` paths end at ``required``.

    Flow is seeded with a fan onto the required targets and augmented from
    there; augmenting paths never release a sink arc, so the pinned targets
    survive.
    """
    required = list(required)
    am = mask_of(a)
    if (am >> u) & 1:
        raise InvalidArgument("the fan center must lie outside A")
    if len(set(required)) != len(required) or mask_of(required) & ~am:
        raise InvalidArgument("required targets must be distinct vertices of A")
    if n < len(required):
        raise InvalidArgument("n must be at least the number of required targets")
    # required fan: other A-vertices stay off-limits as interior vertices
    rm = mask_of(required)
    pinned = _fan_flow(g, u, rm, blocked=am & ~rm)
    if pinned.run(limit=len(required)) < len(required):
        raise NoSuchFan("required", "no independent paths onto the required targets")
    flow = _fan_flow(g, u, am)
    flow.seed(pinned.paths())
    if flow.run(limit=n) < n:
        raise NoSuchFan("size", f"fewer than {n} independent paths into A")
    by_end = {p[-1]: p for p in flow.paths()}
    ordered = [by_end.pop(t) for t in required]
    ordered += sorted(by_end.values())
    return _as_fan(u, ordered[:n])


def k_sets_witness_connectivity(g, k):
    """Check ``kappa(g) >= k`` through fans: every ``k``-set ``A`` makes ``g`` (k, A)-connected."""
    return all(is_k_A_connected(g, k, a) for a in combinations(g.vertices, k))
