"""Graph corpora: graph6/sparse6 ingestion and named generators."""

import random
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from ..connectivity import vertex_connectivity
from ..errors import GraphCertError, InvalidArgument
from ..g6 import decode
from ..graph import Graph
from ..planarity import is_planar


@dataclass(frozen=True)
class Entry:
    graph_id: str
    graph: Graph


@dataclass(frozen=True)
class Diagnostic:
    line: int
    message: str


@dataclass
class IngestResult:
    entries: list
    diagnostics: list

    @property
    def graphs(self):
        return [e.graph for e in self.entries]


def ingest(source):
    """Parse one graph per line from a path, a file object or an iterable of lines.

    Blank lines are skipped. A malformed line becomes a :class:`Diagnostic`
    and parsing continues; ids are ``line<N>`` with 1-based line numbers.
    """
    if isinstance(source, str):
        with open(source, encoding="ascii", errors="replace") as fh:
            return ingest(fh.readlines())
    entries, diags = [], []
    for lineno, line in enumerate(source, 1):
        text = line.strip()
        if not text:
            continue
        try:
            entries.append(Entry(f"line{lineno}", decode(text)))
        except GraphCertError as exc:
            diags.append(Diagnostic(lineno, str(exc)))
    return IngestResult(entries, diags)


# generators ------------------------------------------------------------------


def complete(n):
    return Graph(range(n), combinations(range(n), 2))


def complete_minus_matching(n, k=1):
    """K_n minus ``k`` disjoint edges, taken from the top: (n-2, n-1), (n-4, n-3), ..."""
    if not 1 <= k <= n // 2:
        raise InvalidArgument("k must be between 1 and n/2")
    drop = [(n - 2 - 2 * i, n - 1 - 2 * i) for i in range(k)]
    return complete(n).without_edges(drop)


def complete_multipartite(parts):
    edges = []
    labels = []
    for i, size in enumerate(parts):
        labels += [i] * size
    for u, v in combinations(range(len(labels)), 2):
        if labels[u] != labels[v]:
            edges.append((u, v))
    return Graph(range(len(labels)), edges)


def circulant(n, jumps):
    edges = {(min(i, (i + j) % n), max(i, (i + j) % n)) for i in range(n) for j in jumps if j % n}
    return Graph(range(n), sorted(edges))


def antiprism(k):
    outer = [(i, (i + 1) % k) for i in range(k)]
    inner = [(k + i, k + (i + 1) % k) for i in range(k)]
    rungs = [(i, k + i) for i in range(k)] + [(i, k + (i + 1) % k) for i in range(k)]
    return Graph(range(2 * k), outer + inner + rungs)


PLANAR_BASES = {
    "octahedron": lambda: Graph.from_networkx(nx.octahedral_graph()),
    "icosahedron": lambda: Graph.from_networkx(nx.icosahedral_graph()),
    "antiprism4": lambda: antiprism(4),
    "antiprism5": lambda: antiprism(5),
    "antiprism6": lambda: antiprism(6),
}


def add_apex(g):
    a = g.n
    return g.with_edges([(a, v) for v in g.vertices], vertices=[a])


def petersen():
    return Graph.from_networkx(nx.petersen_graph())


def wheel(k):
    """Hub 0 joined to the rim cycle 1..k."""
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph(range(k + 1), rim + [(0, i) for i in range(1, k + 1)])


def apex_gadget():
    """Apex 0 over the 8-cycle a1 b1 a2 b2 a3 b3 a4 b4 (ids 1..8) plus the 4-cycle on the b's."""
    cyc = [(i, i % 8 + 1) for i in range(1, 9)]
    bs = [2, 4, 6, 8]
    square = [(bs[i], bs[(i + 1) % 4]) for i in range(4)]
    return Graph(range(9), cyc + square + [(0, b) for b in bs])


def five_connected_nonplanar(g):
    return g.n >= 6 and vertex_connectivity(g) >= 5 and not is_planar(g)


PREDICATES = {"5-connected-nonplanar": five_connected_nonplanar, "any": lambda g: True}


def random_filtered(n, p, count, seed=0, predicate="5-connected-nonplanar", max_tries=10000):
    """``count`` seeded G(n, p) samples passing ``predicate`` (a name or a callable)."""
    test = PREDICATES[predicate] if isinstance(predicate, str) else predicate
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count and tries < max_tries:
        tries += 1
        g = Graph(range(n), [e for e in combinations(range(n), 2) if rng.random() < p])
        if test(g):
            out.append(g)
    return out


FAMILIES = ("complete", "complete-minus-edge", "complete-multipartite", "circulant",
            "apex-over-planar", "random-filtered", "sweep")

SWEEP_PARTS = ((2, 2, 2, 2), (3, 3, 3), (2, 2, 2, 2, 2), (3, 3, 3, 3), (2, 2, 2, 2, 2, 2), (1, 2, 3, 4))
SWEEP_JUMPS = ((1, 2, 3), (1, 2, 4), (1, 3, 4))


def sweep_corpus(seed=0, random_count=12):
    """The mixed corpus of 5-connected nonplanar graphs on at most 13 vertices used for sweeps.

    Complete graphs minus matchings, apex graphs over 4-connected planar
    graphs, complete multipartite graphs, circulants and seeded random
    graphs; members failing the 5-connected nonplanar filter are dropped.
    """
    out = []
    for n in range(7, 14):
        for k in range(1, n // 2 + 1):
            out += corpus_generate("complete-minus-edge", n=n, k=k)
    for base in PLANAR_BASES:
        out += corpus_generate("apex-over-planar", base=base)
    for parts in SWEEP_PARTS:
        out += corpus_generate("complete-multipartite", parts=parts)
    for n in range(9, 14):
        for jumps in SWEEP_JUMPS:
            out += corpus_generate("circulant", n=n, jumps=jumps)
    for i, n in enumerate((10, 11, 12, 13)):
        out += corpus_generate("random-filtered", n=n, p=0.65, count=random_count // 4, seed=seed + i)
    return [e for e in out if five_connected_nonplanar(e.graph)]


def corpus_generate(family, **params):
    """Graphs of a named family as :class:`Entry` objects with descriptive ids."""
    if family == "complete":
        n = params["n"]
        return [Entry(f"complete-n{n}", complete(n))]
    if family == "complete-minus-edge":
        n, k = params["n"], params.get("k", 1)
        return [Entry(f"complete-minus-edge-n{n}-k{k}", complete_minus_matching(n, k))]
    if family == "complete-multipartite":
        parts = tuple(params["parts"])
        return [Entry("complete-multipartite-" + "-".join(map(str, parts)), complete_multipartite(parts))]
    if family == "circulant":
        n, jumps = params["n"], tuple(params["jumps"])
        return [Entry(f"circulant-n{n}-" + "-".join(map(str, jumps)), circulant(n, jumps))]
    if family == "apex-over-planar":
        base = params.get("base", "icosahedron")
        if base not in PLANAR_BASES:
            raise InvalidArgument(f"unknown planar base {base!r}")
        return [Entry(f"apex-over-{base}", add_apex(PLANAR_BASES[base]()))]
    if family == "random-filtered":
        n, p = params["n"], params.get("p", 0.6)
        count, seed = params.get("count", 10), params.get("seed", 0)
        gs = random_filtered(n, p, count, seed, params.get("predicate", "5-connected-nonplanar"))
        return [Entry(f"random-n{n}-p{p}-s{seed}-{i:03d}", g) for i, g in enumerate(gs)]
    if family == "sweep":
        return sweep_corpus(params.get("seed", 0), params.get("count", 12))
    raise InvalidArgument(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
