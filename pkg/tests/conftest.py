"""Shared fixtures, corpora and hypothesis strategies."""

from functools import lru_cache
from itertools import combinations
from pathlib import Path

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from graphcert.graph import Graph

DATA = Path(__file__).parent / "data"

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def from_nx(h):
    return Graph(h.nodes, h.edges)


@lru_cache(maxsize=None)
def atlas(max_n, min_n=0):
    """Every graph (up to isomorphism) on ``min_n..max_n`` vertices."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g()
                 if min_n <= h.number_of_nodes() <= max_n)


@lru_cache(maxsize=None)
def graphs8():
    """Every graph on exactly eight vertices, one per isomorphism class."""
    with open(DATA / "graphs8.g6", "rb") as fh:
        return tuple(from_nx(nx.from_graph6_bytes(line.strip())) for line in fh if line.strip())


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(range(n), [e for e, keep in zip(pairs, mask) if keep])
    if connected and n > 1 and not g.is_connected():
        comps = [min(c) for c in (list(nx.connected_components(g.to_networkx())))]
        g = g.with_edges(list(zip(comps, comps[1:])))
    return g


# acceptance criteria append one line each; shown after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
