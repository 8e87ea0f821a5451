"""Disjunction verification with certificates.

Each statement has a hypothesis checker, a list of disjunct checkers and an
evaluation order. A verdict names the first disjunct certified in that
order; exhausted budgets are reported as such and never as refutations.

By default the exact, cheap K4^- disjunct is tried before the TK5 searches.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from ..budget import Budget
from ..connectivity import is_k_A_connected, vertex_connectivity
from ..cycles import is_two_connected
from ..errors import BudgetExhausted, InvalidArgument
from ..g6 import decode_graph6, encode_graph6
from ..graph import Separation, induced_paths, is_induced_path, is_path, iter_bits, mask_of
from ..planarity import PlaneEmbedding, is_planar, planar_with_outer_set
from ..structure import BlockChain, chain_violations, classify_path_search, planar_far_side
from ..subdivision import (K4MinusWitness, SubdivisionWitness, TKConstraints, find_k4_minus,
                           find_tk5, k4_minus_violations, tk5_violations)
from .roles import RoleAssignment, iter_roles

STATEMENTS = ("theorem-1.1", "lemma-2.5", "lemma-2.7", "lemma-2.8", "lemma-2.9", "lemma-2.10", "lemma-3.1")
COUNTEREXAMPLE = "counterexample"
EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class Verdict:
    graph_id: str
    graph6: str
    statement: str
    roles: dict
    satisfied_disjunct: str
    certificate: dict = None
    mode_flags: dict = field(default_factory=dict)
    incidental: dict = field(default_factory=dict)
    nodes: int = 0
    detail: str = ""

    def to_json(self):
        return {
            "graph_id": self.graph_id, "graph6": self.graph6, "statement": self.statement,
            "roles": self.roles, "satisfied_disjunct": self.satisfied_disjunct,
            "certificate": self.certificate, "mode_flags": self.mode_flags,
            "incidental": self.incidental, "nodes": self.nodes, "detail": self.detail,
        }

    @classmethod
    def from_json(cls, data):
        return cls(**data)


# hypothesis helpers --------------------------------------------------------------


@lru_cache(maxsize=1024)
def _kappa(g):
    return vertex_connectivity(g)


@lru_cache(maxsize=1024)
def _planar(g):
    return is_planar(g)


def _require(cond, message):
    if not cond:
        raise InvalidArgument(message)


def _five_connected_nonplanar(g):
    _require(g.n >= 6 and _kappa(g) >= 5, "G must be 5-connected")
    _require(not _planar(g), "G must be nonplanar")


def _roles(g, params, with_z=False):
    r = RoleAssignment.from_json(params)
    bad = r.violations(g)
    _require(not bad, "role assignment invalid: " + "; ".join(bad))
    _require(not with_z or r.z0 is not None, "z0 and z1 are required")
    return r


def _separation(g, params, order, min_side):
    sep = Separation(frozenset(params["side1"]), frozenset(params["side2"]))
    _require(sep.is_separation_of(g), "side1/side2 do not form a separation")
    _require(sep.side1 - sep.side2 and sep.side2 - sep.side1, "both sides need private vertices")
    _require(sep.order == order, f"the separation must have order {order}")
    _require(len(sep.side1) >= min_side and len(sep.side2) >= min_side,
             f"both sides need at least {min_side} vertices")
    return sep


# disjunct checkers ----------------------------------------------------------------


def _k4_disjunct(g, a, budget):
    budget.tick()
    w = find_k4_minus(g, avoid_vertex=a)
    where = "avoid"
    if w is None:
        w = find_k4_minus(g, degree2_vertex=a)
        where = "degree-2"
    if w is None:
        return None
    return {"kind": "k4-minus", "vertex": a, "where": where, "mode": "subgraph", "witness": w.to_json()}


def _tk5_disjunct(g, c, budget):
    w = find_tk5(g, c, budget)
    if w is None:
        return None
    return {"kind": "tk5", "constraints": c.to_json(), "witness": w.to_json()}


def _family_cases(g, x, fixed, k):
    pool = sorted(set(g.neighbors(x)) - set(fixed))
    return [list(c) for c in combinations(pool, k)]


def _family(g, x, fixed, k, budget):
    """TK5 in every host keeping at ``x`` only the edges to ``fixed`` plus ``k`` more neighbours."""
    cases = []
    for others in _family_cases(g, x, fixed, k):
        c = TKConstraints(restrict=(x, frozenset(fixed) | frozenset(others)))
        w = find_tk5(g, c, budget)
        if w is None:
            return None
        cases.append({"others": others, "witness": w.to_json()})
    return {"kind": "restricted-tk5-family", "vertex": x, "fixed": list(fixed), "k": k, "cases": cases}


def _avoiding_family(g, x1, budget):
    for r in iter_roles(g):
        if r.x1 != x1:
            continue
        cert = _family(g, x1, (r.x2, r.y1, r.y2), 2, budget)
        if cert is not None:
            return cert
    return None


def _separation_disjunct(g, a_set, a, budget):
    full = g.vertex_mask
    am = mask_of(a_set)
    for s in combinations(g.vertices, 5):
        if a not in s:
            continue
        budget.tick()
        sm = mask_of(s)
        movable = [c for c in g.components(full & ~sm) if not c & am]
        if not movable:
            continue
        found = planar_far_side(g, s, sm, movable, 7, drop=(a,))
        if found is not None:
            sep, emb = found
            return {"kind": "separation", "vertex": a, "A": sorted(a_set),
                    "separation": sep.to_json(), "embedding": emb.to_json()}
    return None


def _classify_disjunct(g, r, budget):
    found = classify_path_search(g, r.x1, r.x2, r.y1, r.y2, r.z0, r.z1, budget)
    if found is None:
        return None
    i, path, chain = found
    return {"kind": "classified-path", "i": i, "path": list(path), "chain": chain.to_json()}


# statements ------------------------------------------------------------------------


class _Statement:
    """Hypothesis check, disjuncts and default order for one statement."""

    order = ()

    def check(self, g, params):
        raise NotImplementedError

    def disjuncts(self, g, params):
        """Map label -> callable(budget) returning a certificate or None."""
        raise NotImplementedError

    def expected_tk5(self, g, params, label):
        """Constraints a TK5 certificate for ``label`` must carry."""
        return None


class _MainDichotomy(_Statement):
    order = ("ii", "i", "iii")

    def check(self, g, params):
        _five_connected_nonplanar(g)
        _roles(g, params)

    def disjuncts(self, g, params):
        x1 = params["x1"]
        return {
            "i": lambda b: _tk5_disjunct(g, TKConstraints(forbidden_branch={x1}), b),
            "ii": lambda b: _k4_disjunct(g, x1, b),
            "iii": lambda b: _avoiding_family(g, x1, b),
        }

    def expected_tk5(self, g, params, label):
        return TKConstraints(forbidden_branch={params["x1"]})


class _PathEdgeSubdivision(_Statement):
    order = ("conclusion",)

    def check(self, g, params):
        _five_connected_nonplanar(g)
        r = _roles(g, params)
        x = tuple(params["path"])
        h = g.without_edges([(r.x1, r.x2)])
        _require(len(x) >= 3 and is_path(h, x) and x[0] == r.x1 and x[-1] == r.x2,
                 "X must be an x1-x2 path of G - x1x2")
        _require(is_two_connected(g.without(x)), "G - X must be 2-connected")
        _require(is_induced_path(g, x[:-1]), "X - x2 must be induced in G")
        _require(r.y1 not in x and r.y2 not in x, "y1 and y2 must avoid X")

    def _constraints(self, params):
        x = params["path"]
        quad = (params["x1"], params["x2"], params["y1"], params["y2"])
        return TKConstraints(required_branch=frozenset(quad), required_edge=(x[-1], x[-2]))

    def disjuncts(self, g, params):
        return {"conclusion": lambda b: _tk5_disjunct(g, self._constraints(params), b)}

    def expected_tk5(self, g, params, label):
        return self._constraints(params)


class _PlanarSideSeparation(_Statement):
    order = ("ii", "i")

    def check(self, g, params):
        _five_connected_nonplanar(g)
        sep = _separation(g, params, 5, 7)
        a = params["a"]
        _require(a in sep.boundary, "a must lie in the separator")
        g2 = sep.side_graph(g, 2).without([a])
        _require(planar_with_outer_set(g2, sep.boundary - {a}), "(G2 - a, S - a) must be planar")

    def disjuncts(self, g, params):
        a = params["a"]
        return {
            "i": lambda b: _tk5_disjunct(g, TKConstraints(forbidden_branch={a}), b),
            "ii": lambda b: _k4_disjunct(g, a, b),
        }

    def expected_tk5(self, g, params, label):
        return TKConstraints(forbidden_branch={params["a"]})


class _TriangleSeparation(_PlanarSideSeparation):
    order = ("ii", "i", "iii")

    def check(self, g, params):
        _require(g.n >= 6 and _kappa(g) >= 5, "G must be 5-connected")
        sep = _separation(g, params, 5, 7)
        tri = (params["a"], params["a1"], params["a2"])
        _require(len(set(tri)) == 3 and set(tri) <= sep.boundary, "a, a1, a2 must be distinct separator vertices")
        _require(all(g.has_edge(u, v) for u, v in combinations(tri, 2)), "a a1 a2 must be a triangle")

    def disjuncts(self, g, params):
        out = super().disjuncts(g, params)
        out["iii"] = lambda b: _family(g, params["a"], (params["a1"], params["a2"]), 3, b)
        return out


class _PlanarBoundarySet(_Statement):
    order = ("i", "ii")

    def check(self, g, params):
        a_set, a = tuple(params["A"]), params["a"]
        _require(len(set(a_set)) == 6 and all(v in g for v in a_set), "A must be six vertices of G")
        _require(a in a_set, "a must belong to A")
        _require(g.n >= 8, "G needs at least 8 vertices")
        _require(planar_with_outer_set(g.without([a]), set(a_set) - {a}), "(G - a, A - a) must be planar")
        _require(is_k_A_connected(g, 5, a_set), "G must be (5, A)-connected")

    def disjuncts(self, g, params):
        a = params["a"]
        return {
            "i": lambda b: _k4_disjunct(g, a, b),
            "ii": lambda b: _separation_disjunct(g, params["A"], a, b),
        }


class _PlanarMinusVertex(_Statement):
    order = ("ii", "i")

    def check(self, g, params):
        _five_connected_nonplanar(g)
        _require(params["a"] in g and _planar(g.without([params["a"]])), "G - a must be planar")

    disjuncts = _PlanarSideSeparation.disjuncts
    expected_tk5 = _PlanarSideSeparation.expected_tk5


class _NeighbourClassification(_Statement):
    order = ("ii", "i", "iii")

    def check(self, g, params):
        _five_connected_nonplanar(g)
        _roles(g, params, with_z=True)

    def disjuncts(self, g, params):
        r = RoleAssignment.from_json(params)
        return {
            "i": lambda b: _tk5_disjunct(g, TKConstraints(forbidden_branch={r.x1}), b),
            "ii": lambda b: _k4_disjunct(g, r.x1, b),
            "iii": lambda b: _classify_disjunct(g, r, b),
        }

    def expected_tk5(self, g, params, label):
        return TKConstraints(forbidden_branch={params["x1"]})


_STATEMENTS = {
    "theorem-1.1": _MainDichotomy(), "lemma-2.5": _PathEdgeSubdivision(), "lemma-2.7": _PlanarSideSeparation(),
    "lemma-2.8": _TriangleSeparation(), "lemma-2.9": _PlanarBoundarySet(), "lemma-2.10": _PlanarMinusVertex(),
    "lemma-3.1": _NeighbourClassification(),
}


def _statement(statement_id):
    try:
        return _STATEMENTS[statement_id]
    except KeyError:
        raise InvalidArgument(f"unknown statement {statement_id!r}; expected one of {', '.join(STATEMENTS)}")


def _graph6(g):
    _require(g.vertices == tuple(range(g.n)), "harness graphs must use vertex ids 0..n-1")
    return encode_graph6(g)


def check_hypothesis(g, statement_id, params):
    """Raise :class:`InvalidArgument` naming the first failed hypothesis clause."""
    _statement(statement_id).check(g, params)


def verify_lemma(g, statement_id, params, budget_nodes=None, graph_id="g", order=None):
    """Check the hypothesis, then certify the first satisfiable disjunct in ``order``."""
    st = _statement(statement_id)
    g6 = _graph6(g)
    st.check(g, params)
    order = tuple(order or st.order)
    checkers = st.disjuncts(g, params)
    _require(set(order) <= set(checkers), f"unknown disjunct in {order}")
    nodes = 0
    exhausted, refuted = [], []
    flags = {"order": list(order), "k4_minus_mode": "subgraph"}
    for label in order:
        budget = Budget(max_nodes=budget_nodes)
        try:
            cert = checkers[label](budget)
        except BudgetExhausted:
            exhausted.append(label)
            cert = None
        nodes += budget.used
        if cert is not None:
            incidental = {}
            if cert["kind"] == "k4-minus":
                v = cert["vertex"]
                induced = find_k4_minus(g, avoid_vertex=v, induced=True) or \
                    find_k4_minus(g, degree2_vertex=v, induced=True)
                incidental["induced_k4_minus"] = induced is not None
            return Verdict(graph_id, g6, statement_id, dict(params), label, cert, flags, incidental, nodes,
                           detail=_detail(refuted, exhausted))
        if label not in exhausted:
            refuted.append(label)
    outcome = EXHAUSTED if exhausted else COUNTEREXAMPLE
    return Verdict(graph_id, g6, statement_id, dict(params), outcome, None, flags, {}, nodes,
                   detail=_detail(refuted, exhausted))


def _detail(refuted, exhausted):
    parts = []
    if refuted:
        parts.append("refuted: " + ",".join(refuted))
    if exhausted:
        parts.append("exhausted: " + ",".join(exhausted))
    return "; ".join(parts)


def verify_theorem_1_1(g, roles, budget_nodes=None, graph_id="g", order=None):
    params = roles.to_json() if isinstance(roles, RoleAssignment) else dict(roles)
    return verify_lemma(g, "theorem-1.1", params, budget_nodes, graph_id, order)


# certificate re-validation ---------------------------------------------------------


def _recheck_k4(g, cert, vertex):
    w = K4MinusWitness.from_json(cert["witness"])
    out = k4_minus_violations(g, w, induced=cert.get("mode") == "induced")
    if cert.get("vertex") != vertex:
        out.append("certificate is about the wrong vertex")
    if cert.get("where") == "avoid":
        if vertex in w.vertices:
            out.append("K4^- should avoid the special vertex")
    elif cert.get("where") == "degree-2":
        if vertex not in w.missing_pair:
            out.append("special vertex is not of degree 2 in the K4^-")
    else:
        out.append("unknown K4^- placement")
    return out


def _constraints_from_json(data):
    restrict = None
    if "restrict" in data:
        restrict = (data["restrict"]["vertex"], frozenset(data["restrict"]["keep"]))
    edge = tuple(data["required_edge"]) if "required_edge" in data else None
    return TKConstraints(frozenset(data["forbidden_branch"]), frozenset(data["required_branch"]), edge, restrict)


def _recheck_tk5(g, cert, expected):
    c = _constraints_from_json(cert["constraints"])
    if expected is not None and c != expected:
        return ["TK5 certificate carries constraints other than the statement's"]
    host = c.host(g)
    w = SubdivisionWitness.from_json(cert["witness"])
    return tk5_violations(host, w) + c.violations(host, w)


def _recheck_family(g, cert, vertex, fixed_ok, k):
    out = []
    x = cert["vertex"]
    fixed = tuple(cert["fixed"])
    if x != vertex or not fixed_ok(fixed) or cert["k"] != k:
        return ["restricted-TK5 family is about the wrong vertices"]
    want = _family_cases(g, x, fixed, k)
    got = [case["others"] for case in cert["cases"]]
    if sorted(got) != sorted(want):
        out.append("restricted-TK5 family does not cover every choice")
    for case in cert["cases"]:
        c = TKConstraints(restrict=(x, frozenset(fixed) | frozenset(case["others"])))
        host = c.host(g)
        w = SubdivisionWitness.from_json(case["witness"])
        out += [f"case {case['others']}: {m}" for m in tk5_violations(host, w)]
    return out


def _recheck_separation(g, cert, params):
    sep = Separation(frozenset(cert["separation"]["side1"]), frozenset(cert["separation"]["side2"]))
    a = params["a"]
    out = []
    if not sep.is_separation_of(g) or sep.order != 5:
        return ["not a 5-separation of G"]
    if a not in sep.boundary:
        out.append("a is not in the separator")
    if not set(params["A"]) <= sep.side1:
        out.append("A is not inside G1")
    if len(sep.side2) < 7:
        out.append("G2 has fewer than 7 vertices")
    g2 = sep.side_graph(g, 2).without([a])
    emb = PlaneEmbedding.from_json(cert["embedding"])
    if not emb.is_valid_for(g2):
        out.append("embedding of G2 - a does not validate")
    elif not sep.boundary - {a} <= set(emb.outer_vertices):
        out.append("separator vertices are not on the outer face")
    return out


def _recheck_path(g, cert, params):
    r = RoleAssignment.from_json(params)
    i = cert["i"]
    zs = (r.z0, r.z1)
    p = tuple(cert["path"])
    h = g.without([r.x1])
    out = []
    if i not in (0, 1) or not p or p[0] != zs[i] or p[-1] != r.x2:
        return ["path does not run from z_i to x2"]
    if not is_induced_path(h, p):
        out.append("path is not induced in G - x1")
    if zs[1 - i] in p:
        out.append("path meets z_{1-i}")
    chain = BlockChain.from_json(cert["chain"])
    res = h.without(p)
    out += chain_violations(res, chain, whole=True)
    if (chain.u, chain.v) != (r.y1, r.y2):
        out.append("chain does not run from y1 to y2")
    if not any(len(b) >= 3 and (r.y1 in b or r.y2 in b) for b in chain.blocks):
        out.append("neither y1 nor y2 lies in a nontrivial block")
    return out


def recheck(verdict):
    """Re-validate a verdict's certificate from its serialized form; returns problems."""
    st = _statement(verdict.statement)
    if verdict.satisfied_disjunct in (COUNTEREXAMPLE, EXHAUSTED):
        return [] if verdict.certificate is None else ["unsatisfied verdict carries a certificate"]
    if verdict.satisfied_disjunct not in st.order:
        return [f"{verdict.satisfied_disjunct!r} is not a disjunct of {verdict.statement}"]
    g = decode_graph6(verdict.graph6)
    cert = verdict.certificate or {}
    p = verdict.roles
    kind = cert.get("kind")
    label = verdict.satisfied_disjunct
    special = p.get("x1", p.get("a"))
    if kind == "k4-minus":
        return _recheck_k4(g, cert, special)
    if kind == "tk5":
        return _recheck_tk5(g, cert, st.expected_tk5(g, p, label))
    if kind == "restricted-tk5-family":
        if verdict.statement == "theorem-1.1":
            def fixed_ok(f):
                return len(f) == 3 and not RoleAssignment(special, *f).violations(g)
            return _recheck_family(g, cert, special, fixed_ok, 2)
        return _recheck_family(g, cert, special, lambda f: sorted(f) == sorted((p["a1"], p["a2"])), 3)
    if kind == "separation":
        return _recheck_separation(g, cert, p)
    if kind == "classified-path":
        return _recheck_path(g, cert, p)
    return [f"unknown certificate kind {kind!r}"]


# instance enumeration ----------------------------------------------------------------


def separations(g, k, min_side):
    """Ordered separations ``(G1, G2)`` of order ``k`` with both sides of size >= ``min_side``."""
    full = g.vertex_mask
    for s in combinations(g.vertices, k):
        sm = mask_of(s)
        comps = g.components(full & ~sm)
        if len(comps) < 2:
            continue
        for bits in range(1, (1 << len(comps)) - 1):
            d = 0
            for i, c in enumerate(comps):
                if (bits >> i) & 1:
                    d |= c
            sep = Separation(frozenset(iter_bits(full & ~d)), frozenset(iter_bits(d | sm)))
            if len(sep.side1) >= min_side and len(sep.side2) >= min_side:
                yield sep


def instances(g, statement_id, limit=64):
    """Parameter sets satisfying the statement's hypothesis, in deterministic order."""
    st = _statement(statement_id)
    out = []
    for params in _candidates(g, statement_id):
        if limit is not None and len(out) >= limit:
            break
        try:
            st.check(g, params)
        except InvalidArgument:
            continue
        out.append(params)
    return out


def hypothesis_failure(g, statement_id):
    """Why the first candidate parameter set fails the hypothesis (for skipped graphs)."""
    st = _statement(statement_id)
    for params in _candidates(g, statement_id):
        try:
            st.check(g, params)
        except InvalidArgument as exc:
            return str(exc)
        return ""
    return "no candidate parameters"


def _candidates(g, statement_id):
    if statement_id == "theorem-1.1":
        for r in iter_roles(g):
            yield r.to_json()
    elif statement_id == "lemma-3.1":
        for r in iter_roles(g):
            pool = sorted(set(g.neighbors(r.x1)) - {r.x2, r.y1, r.y2})
            for z0, z1 in combinations(pool, 2):
                yield RoleAssignment(*r.quad, z0, z1).to_json()
    elif statement_id == "lemma-2.10":
        for a in g.vertices:
            yield {"a": a}
    elif statement_id in ("lemma-2.7", "lemma-2.8"):
        for sep in separations(g, 5, 7):
            base = {"side1": sorted(sep.side1), "side2": sorted(sep.side2)}
            for a in sorted(sep.boundary):
                if statement_id == "lemma-2.7":
                    yield dict(base, a=a)
                    continue
                for a1, a2 in combinations(sorted(sep.boundary - {a}), 2):
                    yield dict(base, a=a, a1=a1, a2=a2)
    elif statement_id == "lemma-2.9":
        for a in g.vertices:
            if not _planar(g.without([a])):
                continue
            rest = [v for v in g.vertices if v != a]
            for others in combinations(rest, 5):
                yield {"A": sorted((a,) + others), "a": a}
    elif statement_id == "lemma-2.5":
        for r in iter_roles(g):
            yield from _edge_paths(g, r)


def _edge_paths(g, r, per_roles=4):
    found = 0
    avoid = mask_of((r.x2, r.y1, r.y2))
    for v in g.neighbors(r.x2):
        if v in (r.x1, r.y1, r.y2):
            continue
        for p in induced_paths(g, r.x1, v, g.vertex_mask & ~avoid):
            x = p + (r.x2,)
            if is_two_connected(g.without(x)):
                yield dict(r.to_json(), path=list(x))
                found += 1
                break
        if found >= per_roles:
            return
