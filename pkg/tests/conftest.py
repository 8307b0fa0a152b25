import sys
from functools import lru_cache
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from codis.graph import Graph  # noqa: E402


def pair(G: Graph):
    return G.n, list(G.edges)


def from_nx(g: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(g.nodes)}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in g.edges])


@lru_cache(maxsize=None)
def atlas(max_n: int, min_n: int = 1) -> tuple[Graph, ...]:
    """Every graph on ``min_n..max_n`` vertices (``max_n <= 7``), from networkx's atlas."""
    return tuple(from_nx(g) for g in nx.graph_atlas_g() if min_n <= g.number_of_nodes() <= max_n)


@pytest.fixture(scope="session")
def small_graphs():
    return atlas(6)


# acceptance criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
