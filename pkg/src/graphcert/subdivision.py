"""K5 subdivisions and K4^- subgraphs: search, assembly and verification.

A TK5 search fixes five branch vertices and routes the ten branch paths by
backtracking over free vertices. Two reductions keep it small without losing
completeness:

* an adjacent branch pair can always use its edge directly (any other path
  for it only occupies vertices);
* a branch path may be taken chordless, since a chord short-cuts it onto a
  subset of its own vertices.

A required edge is pinned to a designated carrier pair whose path is routed
as two chordless segments joined by that edge.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .budget import ensure
from .errors import AssemblyError, InvalidArgument
from .graph import induced_paths, is_path, iter_bits, mask_of, restrict_edges_at

PAIRS = tuple(combinations(range(5), 2))


@dataclass(frozen=True)
class SubdivisionWitness:
    """A subdivision of K5: ``branch[i]`` hosts pattern vertex ``i``.

    ``paths[(i, j)]`` (``i < j``) runs from ``branch[i]`` to ``branch[j]``.
    """

    branch: tuple
    paths: dict = field(hash=False, compare=True)

    def path_between(self, u, v):
        i, j = self.branch.index(u), self.branch.index(v)
        p = self.paths[(min(i, j), max(i, j))]
        return p if i < j else p[::-1]

    def edges(self):
        return {tuple(sorted(e)) for p in self.paths.values() for e in zip(p, p[1:])}

    def to_json(self):
        paths = {}
        for (i, j), p in sorted(self.paths.items()):
            u, v = self.branch[i], self.branch[j]
            paths[f"{min(u, v)}-{max(u, v)}"] = list(p if u < v else p[::-1])
        return {"branch": list(self.branch), "paths": paths}

    @classmethod
    def from_json(cls, data):
        branch = tuple(data["branch"])
        paths = {}
        for key, p in data["paths"].items():
            u, v = (int(x) for x in key.split("-"))
            i, j = branch.index(u), branch.index(v)
            p = tuple(p)
            paths[(min(i, j), max(i, j))] = p if i < j else p[::-1]
        return cls(branch, paths)


def tk5_violations(g, w):
    """Every reason ``w`` fails to be a K5 subdivision in ``g`` (empty when valid)."""
    out = []
    b = tuple(w.branch)
    if len(b) != 5 or len(set(b)) != 5:
        return ["five distinct branch vertices are required"]
    missing = [v for v in b if v not in g]
    if missing:
        return [f"branch vertex {v} is not a vertex" for v in missing]
    if set(w.paths) != set(PAIRS):
        return ["exactly one path per pair of branch vertices is required"]
    bm = mask_of(b)
    owner = {}
    for (i, j) in PAIRS:
        p = tuple(w.paths[(i, j)])
        if not is_path(g, p):
            out.append(f"path {b[i]}-{b[j]} is not a path of the graph")
            continue
        if p[0] != b[i] or p[-1] != b[j]:
            out.append(f"path {b[i]}-{b[j]} has the wrong endpoints")
            continue
        for v in p[1:-1]:
            if (bm >> v) & 1:
                out.append(f"path {b[i]}-{b[j]} passes through branch vertex {v}")
            elif v in owner:
                out.append(f"paths {owner[v]} and {b[i]}-{b[j]} share vertex {v}")
            else:
                owner[v] = f"{b[i]}-{b[j]}"
    return out


def verify_tk5(g, w):
    return not tk5_violations(g, w)


@dataclass(frozen=True)
class TKConstraints:
    """Side conditions for :func:`find_tk5`.

    ``restrict = (x, keep)`` searches in ``restrict_edges_at(g, x, keep)``.
    """

    forbidden_branch: frozenset = frozenset()
    required_branch: frozenset = frozenset()
    required_edge: tuple = None
    restrict: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "forbidden_branch", frozenset(self.forbidden_branch))
        object.__setattr__(self, "required_branch", frozenset(self.required_branch))
        if self.required_branch & self.forbidden_branch:
            raise InvalidArgument("a vertex cannot be both required and forbidden as a branch vertex")
        if len(self.required_branch) > 5:
            raise InvalidArgument("at most five branch vertices can be required")
        if self.required_edge is not None:
            u, v = self.required_edge
            if u == v:
                raise InvalidArgument("the required edge must join distinct vertices")
            object.__setattr__(self, "required_edge", (min(u, v), max(u, v)))

    def host(self, g):
        if self.restrict is None:
            return g
        x, keep = self.restrict
        return restrict_edges_at(g, x, keep)

    def violations(self, g, w):
        """Constraint failures of a witness (structural validity is checked separately)."""
        out = []
        b = set(w.branch)
        if b & self.forbidden_branch:
            out.append(f"forbidden branch vertices used: {sorted(b & self.forbidden_branch)}")
        if not self.required_branch <= b:
            out.append(f"required branch vertices missing: {sorted(self.required_branch - b)}")
        if self.required_edge is not None and self.required_edge not in w.edges():
            out.append(f"required edge {self.required_edge} is on no branch path")
        return out

    def to_json(self):
        out = {"forbidden_branch": sorted(self.forbidden_branch),
               "required_branch": sorted(self.required_branch)}
        if self.required_edge is not None:
            out["required_edge"] = list(self.required_edge)
        if self.restrict is not None:
            out["restrict"] = {"vertex": self.restrict[0], "keep": sorted(self.restrict[1])}
        return out


class _Router:
    """Backtracking routing of the branch paths of one quintuple."""

    def __init__(self, g, branch, budget):
        self.g = g
        self.branch = branch
        self.bm = mask_of(branch)
        self.budget = budget

    def _free_nbrs(self, v, free):
        return (self.g.nbrs(v) & free).bit_count()

    def feasible(self, free, todo):
        g = self.g
        demand = {}
        for a, b in todo:
            demand[a] = demand.get(a, 0) + 1
            demand[b] = demand.get(b, 0) + 1
        for v, d in demand.items():
            if self._free_nbrs(v, free) < d:
                return False
        for a, b in todo:
            if not (g.reach(a, free | (1 << a) | (1 << b)) >> b) & 1:
                return False
        return True

    def _paths(self, pair, free):
        a, b = pair
        return induced_paths(self.g, a, b, free | (1 << a) | (1 << b), self.budget)

    def _carrier_paths(self, pair, free, edge):
        g = self.g
        a, b = pair
        for p, q in (edge, edge[::-1]):
            if (p != a and not (free >> p) & 1) or (q != b and not (free >> q) & 1):
                continue
            if p == a:
                firsts = [(a,)]
            else:
                firsts = induced_paths(g, a, p, (free & ~(1 << q)) | (1 << a), self.budget)
            for s1 in firsts:
                rest = free & ~mask_of(s1)
                if q == b:
                    yield s1 + (b,)
                    continue
                for s2 in induced_paths(g, q, b, rest | (1 << b), self.budget):
                    yield s1 + s2

    def route(self, todo, free, carrier=None, edge=None):
        """Map pair -> path for ``todo`` using interiors from ``free``, or None."""
        if carrier is not None:
            gen = self._carrier_paths(carrier, free, edge)
            rest = [p for p in todo if p != carrier]
            for path in gen:
                nfree = free & ~mask_of(path[1:-1])
                if not self.feasible(nfree, rest):
                    continue
                sub = self.route(rest, nfree)
                if sub is not None:
                    sub[carrier] = path
                    return sub
            return None
        if not todo:
            return {}
        pair = min(todo, key=lambda p: (self._slack(p, free, todo), p))
        rest = [p for p in todo if p != pair]
        for path in self._paths(pair, free):
            nfree = free & ~mask_of(path[1:-1])
            if not self.feasible(nfree, rest):
                continue
            sub = self.route(rest, nfree)
            if sub is not None:
                sub[pair] = path
                return sub
        return None

    def _slack(self, pair, free, todo):
        s = 0
        for v in pair:
            d = sum(1 for p in todo if v in p)
            s += self._free_nbrs(v, free) - d
        return s


def _witness(branch, routed):
    paths = {}
    for i, j in PAIRS:
        u, v = branch[i], branch[j]
        p = routed.get((u, v)) or routed.get((v, u))
        paths[(i, j)] = p if p[0] == u else p[::-1]
    return SubdivisionWitness(tuple(branch), paths)


def find_tk5(g, c=None, budget=None):
    """A K5 subdivision honouring ``c``, or None when none exists.

    Raises :class:`~graphcert.errors.BudgetExhausted` when the budget runs out
    before the search space is covered.
    """
    c = c or TKConstraints()
    budget = ensure(budget)
    h = c.host(g)
    for v in c.required_branch:
        if v not in h:
            raise InvalidArgument(f"required branch vertex {v} is not a vertex")
    edge = c.required_edge
    if edge is not None and not h.has_edge(*edge):
        return None
    cand = [v for v in h.vertices if h.degree(v) >= 4 and v not in c.forbidden_branch]
    req = sorted(c.required_branch)
    if any(h.degree(v) < 4 for v in req):
        return None
    pool = [v for v in cand if v not in c.required_branch]
    for extra in combinations(pool, 5 - len(req)):
        budget.tick()
        branch = tuple(sorted(req + list(extra)))
        found = _route_quintuple(h, branch, edge, budget)
        if found is not None:
            return _witness(branch, found)
    return None


def _route_quintuple(h, branch, edge, budget):
    bm = mask_of(branch)
    free = h.vertex_mask & ~bm
    pairs = [(branch[i], branch[j]) for i, j in PAIRS]
    todo = [p for p in pairs if not h.has_edge(*p)]
    if len(todo) > free.bit_count():
        return None
    router = _Router(h, branch, budget)
    if edge is None or edge in pairs:
        if not router.feasible(free, todo):
            return None
        routed = router.route(todo, free)
        if routed is None:
            return None
        for p in pairs:
            routed.setdefault(p, p)
        return routed
    # the required edge rides on one designated pair's path
    for carrier in pairs:
        if (bm >> edge[0]) & 1 and edge[0] not in carrier:
            continue
        if (bm >> edge[1]) & 1 and edge[1] not in carrier:
            continue
        rest = [p for p in todo if p != carrier]
        if not router.feasible(free, rest):
            continue
        routed = router.route(rest + [carrier], free, carrier, edge)
        if routed is not None:
            for p in pairs:
                routed.setdefault(p, p)
            return routed
    return None


@dataclass(frozen=True)
class K4MinusWitness:
    """Four vertices spanning K4 minus (at most) the edge ``missing_pair``."""

    vertices: tuple
    missing_pair: tuple

    def to_json(self):
        return {"vertices": list(self.vertices), "missing_pair": list(self.missing_pair)}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["vertices"]), tuple(data["missing_pair"]))


def k4_minus_violations(g, w, induced=False):
    vs = tuple(w.vertices)
    mp = tuple(w.missing_pair)
    if len(set(vs)) != 4 or any(v not in g for v in vs):
        return ["four distinct vertices are required"]
    if len(set(mp)) != 2 or not set(mp) <= set(vs):
        return ["the missing pair must be two of the four vertices"]
    out = []
    for u, v in combinations(vs, 2):
        if {u, v} == set(mp):
            if induced and g.has_edge(u, v):
                out.append(f"missing pair {u}-{v} is adjacent")
        elif not g.has_edge(u, v):
            out.append(f"edge {u}-{v} is absent")
    return out


def find_k4_minus(g, degree2_vertex=None, avoid_vertex=None, induced=False):
    """First K4^- in ``g`` by (spine edge, missing pair), or None.

    The spine is the edge between the two vertices of degree 3. With
    ``degree2_vertex`` set, that vertex must lie in the missing pair; with
    ``avoid_vertex`` set, it must not be used at all. ``induced`` additionally
    requires the missing pair to be nonadjacent.
    """
    if degree2_vertex is not None and degree2_vertex == avoid_vertex:
        raise InvalidArgument("degree2_vertex and avoid_vertex must differ")
    allowed = g.vertex_mask
    if avoid_vertex is not None:
        allowed &= ~(1 << avoid_vertex)
    for u, v in g.edges():
        if not (allowed >> u) & 1 or not (allowed >> v) & 1:
            continue
        if degree2_vertex in (u, v):
            continue
        common = g.nbrs(u) & g.nbrs(v) & allowed
        if degree2_vertex is not None:
            if not (common >> degree2_vertex) & 1:
                continue
            firsts = [degree2_vertex]
        else:
            firsts = list(iter_bits(common))
        for a in firsts:
            for b in iter_bits(common & ~(1 << a)):
                if degree2_vertex is None and b < a:
                    continue
                if induced and g.has_edge(a, b):
                    continue
                return K4MinusWitness(tuple(sorted((u, v, a, b))), (min(a, b), max(a, b)))
    return None


def _split_at(p, bm):
    pieces = []
    start = 0
    for k in range(1, len(p) - 1):
        if (bm >> p[k]) & 1:
            pieces.append(tuple(p[start:k + 1]))
            start = k
    pieces.append(tuple(p[start:]))
    return pieces


def assemble_tk5(g, branch_vertices, fragments):
    """Glue path fragments into the ten branch paths on ``branch_vertices``.

    Fragments are split at interior branch vertices and joined at shared
    non-branch endpoints. Raises :class:`AssemblyError` naming the first
    problem, including any failed witness invariant.
    """
    branch = tuple(branch_vertices)
    if len(branch) != 5 or len(set(branch)) != 5:
        raise AssemblyError("five distinct branch vertices are required")
    bm = mask_of(branch)
    pieces = []
    for f in fragments:
        f = tuple(f)
        if not is_path(g, f):
            raise AssemblyError(f"fragment {list(f)} is not a path of the graph")
        if len(f) >= 2:
            pieces.extend(_split_at(f, bm))
    # join pieces meeting at a non-branch end until none remain
    while True:
        ends = {}
        for idx, p in enumerate(pieces):
            for v in (p[0], p[-1]):
                if not (bm >> v) & 1:
                    ends.setdefault(v, []).append(idx)
        joint = next((v for v in sorted(ends) if len(ends[v]) >= 2), None)
        if joint is None:
            break
        i, j = ends[joint][:2]
        if len(ends[joint]) > 2 or i == j:
            raise AssemblyError(f"fragments branch or close up at non-branch vertex {joint}")
        a, b = pieces[i], pieces[j]
        a = a if a[-1] == joint else a[::-1]
        b = b if b[0] == joint else b[::-1]
        pieces = [p for k, p in enumerate(pieces) if k not in (i, j)] + [a + b[1:]]
    routed = {}
    for p in pieces:
        for v in (p[0], p[-1]):
            if not (bm >> v) & 1:
                raise AssemblyError(f"dangling fragment end at non-branch vertex {v}")
        if p[0] == p[-1]:
            raise AssemblyError(f"fragment closes a loop at branch vertex {p[0]}")
        key = (min(p[0], p[-1]), max(p[0], p[-1]))
        if key in routed:
            raise AssemblyError(f"duplicate pair {key[0]}-{key[1]}")
        routed[key] = p
    for i, j in PAIRS:
        u, v = sorted((branch[i], branch[j]))
        if (u, v) not in routed:
            raise AssemblyError(f"missing pair {u}-{v}")
    w = _witness(branch, routed)
    bad = tk5_violations(g, w)
    if bad:
        raise AssemblyError(bad[0])
    return w
