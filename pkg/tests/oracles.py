"""Brute-force reference implementations used only by the tests.

Everything here works on networkx graphs or plain Python structures and
shares no code with the package, so agreement is a genuine second route.
"""

from itertools import combinations, permutations

import networkx as nx


def nxg(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


# linkage -----------------------------------------------------------------------


def has_two_linkage(h, s1, t1, s2, t2):
    rest = set(h) - {s2, t2}
    for p in nx.all_simple_paths(h.subgraph(rest), s1, t1):
        if nx.has_path(h.subgraph(set(h) - set(p)), s2, t2):
            return True
    return False


# cycles --------------------------------------------------------------------------


def has_cycle_through(h, ys):
    ys = set(ys)
    return any(ys <= set(c) for c in nx.simple_cycles(h))


# fans --------------------------------------------------------------------------------


def fan_number(h, u, a):
    """Max number of ``u``-to-``a`` paths sharing only ``u``, meeting ``a`` only at their ends."""
    a = set(a) - {u}
    d = nx.DiGraph()
    d.add_nodes_from(h)
    for x, y in h.edges():
        for p, q in ((x, y), (y, x)):
            if p not in a:
                d.add_edge(p, q)
    sink = ("sink",)
    for v in a:
        d.add_edge(v, sink)
    if not a:
        return 0
    return nx.node_connectivity(d, u, sink)


# subdivisions ------------------------------------------------------------------------


def has_tk5(h, forbidden=(), required_edge=None):
    """Exhaustive K5-subdivision test: every branch path over all simple paths."""
    nodes = list(h)
    forbidden = set(forbidden)
    req = frozenset(required_edge) if required_edge else None
    for b in combinations(nodes, 5):
        if forbidden & set(b) or any(h.degree(v) < 4 for v in b):
            continue
        extra = set(nodes) - set(b)
        cands = []
        for x, y in combinations(b, 2):
            cands.append(sorted(nx.all_simple_paths(h.subgraph(extra | {x, y}), x, y), key=len))

        def bt(i, used, hit):
            if i == len(cands):
                return req is None or hit
            for p in cands[i]:
                inner = set(p[1:-1])
                if inner & used:
                    continue
                h2 = hit or (req is not None and any(frozenset(e) == req for e in zip(p, p[1:])))
                if bt(i + 1, used | inner, h2):
                    return True
            return False

        if bt(0, set(), False):
            return True
    return False


def k4_minus_quads(h, degree2=None, avoid=None, induced=False):
    out = []
    for q in combinations(sorted(h), 4):
        if avoid in q:
            continue
        for m in combinations(q, 2):
            pairs = [e for e in combinations(q, 2) if set(e) != set(m)]
            if not all(h.has_edge(*e) for e in pairs):
                continue
            if induced and h.has_edge(*m):
                continue
            if degree2 is not None and degree2 not in m:
                continue
            out.append((q, m))
    return out


# plane embeddings ------------------------------------------------------------------


def _faces(rot):
    seen = set()
    faces = []
    for u in rot:
        for v in rot[u]:
            if (u, v) in seen:
                continue
            face = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                face.append(d)
                a, b = d
                nb = rot[b]
                d = (b, nb[(nb.index(a) + 1) % len(nb)])
            faces.append(face)
    return faces


def _canon(rot):
    out = []
    for v in sorted(rot):
        nb = list(rot[v])
        if nb:
            i = nb.index(min(nb))
            nb = nb[i:] + nb[:i]
        out.append((v, tuple(nb)))
    return tuple(out)


def _corners_by_face(rot):
    """Map vertex -> list of (face id, neighbour after which to insert)."""
    faces = _faces(rot)
    corners = {v: [] for v in rot}
    for i, f in enumerate(faces):
        for a, b in f:
            # arriving at b from a, the angle after a in the rotation at b
            corners[b].append((i, a))
    for v, nb in rot.items():
        if not nb:
            corners[v].append((("iso", v), None))
    return corners


def _comp(rot, v):
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in rot[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def planar_embeddings(nodes, edges):
    """All planar rotation systems of the graph, built by inserting edges one at a time."""
    current = {_canon({v: () for v in nodes})}
    for u, v in edges:
        nxt = set()
        for c in current:
            rot = {x: list(nb) for x, nb in c}
            corners = _corners_by_face(rot)
            same = v in _comp(rot, u)
            for fu, au in corners[u]:
                for fv, av in corners[v]:
                    if same and fu != fv:
                        continue
                    r2 = {x: list(nb) for x, nb in rot.items()}
                    r2[u].insert(r2[u].index(au) + 1 if au is not None else 0, v)
                    r2[v].insert(r2[v].index(av) + 1 if av is not None else 0, u)
                    nxt.add(_canon(r2))
        current = nxt
    return [dict(c) for c in current]


def boundary_orders(h, boundary_set):
    """Cyclic orders (canonical, up to reversal) in which ``boundary_set`` can lie on one face."""
    hub = max(h) + 1 if len(h) else 0
    edges = list(h.edges()) + [(hub, b) for b in sorted(boundary_set)]
    orders = set()
    for rot in planar_embeddings(list(h) + [hub], edges):
        orders.add(canon_cycle(rot[hub]))
    return orders


def canon_cycle(seq):
    seq = list(seq)
    if len(seq) <= 2:
        return tuple(sorted(seq))
    best = None
    for cand in (seq, seq[::-1]):
        i = cand.index(min(cand))
        r = tuple(cand[i:] + cand[:i])
        best = r if best is None or r < best else best
    return best


def cyclic_orders(vertices):
    """Every cyclic order of ``vertices`` up to rotation and reversal."""
    vs = sorted(vertices)
    if len(vs) <= 2:
        return [tuple(vs)]
    out = set()
    for perm in permutations(vs[1:]):
        out.add(canon_cycle((vs[0],) + perm))
    return sorted(out)
