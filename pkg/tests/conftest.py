"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own search machinery:
chromatic index by plain input-order backtracking without pruning or
symmetry breaking, even factors by full subset enumeration, barriers and
components via networkx.  Expected values frozen into the tests were
produced by these oracles.
"""

import itertools
import os
from functools import lru_cache

import networkx as nx
import pytest

from critlab import Edge, Graph, from_edges, parse_graph6

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


@lru_cache(maxsize=None)
def fixture_lines(name: str) -> tuple:
    path = fixture_path(name)
    if not os.path.exists(path):
        pytest.skip(f"fixture {name} missing — run scripts/gen_fixtures.py")
    with open(path) as fh:
        return tuple(line.strip() for line in fh if line.strip())


@lru_cache(maxsize=None)
def fixture_graphs(name: str) -> tuple:
    return tuple(parse_graph6(s) for s in fixture_lines(name))


# -- named graphs ---------------------------------------------------------


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n > 2
                      else [(0, 1)] if n == 2 else [])


def complete(n: int) -> Graph:
    return from_edges(n, list(itertools.combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    return from_edges(10, sorted(tuple(sorted(e))
                                 for e in nx.petersen_graph().edges()))


def petersen_minus_vertex() -> Graph:
    """Vertex-deleted Petersen graph on 9 vertices (3-critical)."""
    h = nx.petersen_graph()
    h.remove_node(0)
    relabel = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return from_edges(9, sorted(tuple(sorted((relabel[a], relabel[b])))
                                for a, b in h.edges()))


def subdivided_k4() -> Graph:
    """K4 with one edge subdivided; vertex 4 is the divalent subdivision."""
    return from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                          (0, 4), (1, 4)])


def k23() -> Graph:
    return from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def k13() -> Graph:
    return from_edges(4, [(0, 1), (0, 2), (0, 3)])


def prism() -> Graph:
    return from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                          (0, 3), (1, 4), (2, 5)])


def double_star() -> Graph:
    """Two K1,3 stars whose leaves are joined by a 3-matching."""
    return from_edges(8, [(0, 1), (0, 2), (0, 3), (7, 4), (7, 5), (7, 6),
                          (1, 4), (2, 5), (3, 6)])


def subk4_plus_cycle(m: int) -> Graph:
    """Disjoint union of the subdivided K4 and C_m.

    Class 2 with k = 3; the two edges at the subdivision vertex stay
    critical and every cycle vertex is a divalent x with d(x) < k, which
    makes these the workhorse hosts for missing-color alignment.
    """
    base = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    cyc = [tuple(sorted((5 + i, 5 + (i + 1) % m))) for i in range(m)]
    return from_edges(5 + m, base + cyc)


# -- oracles --------------------------------------------------------------


def nx_of(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(tuple(e) for e in g.edges)
    return h


def oracle_colorable(g: Graph, k: int) -> bool:
    """Plain backtracking in input edge order; no pruning tricks."""
    edges = list(g.edges)
    used = [0] * g.n

    def rec(i: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in range(k):
            bit = 1 << c
            if not (used[u] & bit) and not (used[v] & bit):
                used[u] |= bit
                used[v] |= bit
                if rec(i + 1):
                    return True
                used[u] &= ~bit
                used[v] &= ~bit
        return False

    return rec(0)


def oracle_chi(g: Graph) -> int:
    if g.m == 0:
        return 0
    delta = g.max_degree()
    return delta if oracle_colorable(g, delta) else delta + 1


def oracle_even_factor(g: Graph):
    """First even factor by exhaustive subset search, largest first."""
    for r in range(g.m, -1, -1):
        for sub in itertools.combinations(g.edges, r):
            deg = [0] * g.n
            for e in sub:
                deg[e.u] += 1
                deg[e.v] += 1
            if all(d >= 2 and d % 2 == 0 for d in deg):
                return sub
    return None


def oracle_deficiency(g: Graph, x) -> int:
    h = nx_of(g)
    xs = set(x)
    h.remove_nodes_from(xs)
    q = 0
    for comp in nx.connected_components(h):
        boundary = sum(1 for u in comp for v in g.neighbors(u) if v in xs)
        if boundary % 2 == 1:
            q += 1
    return sum(g.degree(v) - 2 for v in xs) - q


def oracle_barrier(g: Graph):
    """Minimum-cardinality deficient proper subset, or None."""
    for size in range(g.n):
        for xs in itertools.combinations(range(g.n), size):
            if oracle_deficiency(g, xs) < 0:
                return xs
    return None


# -- acceptance reporting ---------------------------------------------------

ACCEPTANCE_LINES: dict = {}


def record_criterion(num: int, ok: bool, detail: str) -> None:
    """Register one acceptance line; emitted in the terminal summary."""
    ACCEPTANCE_LINES[num] = (ok, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_LINES):
        ok, detail = ACCEPTANCE_LINES[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict} — {detail}")


def oracle_is_minimal_cut(g: Graph, cut) -> bool:
    cset = set(Edge.of(*e) for e in cut)
    h = nx_of(g)
    if not nx.is_connected(h):
        return False
    h.remove_edges_from(tuple(e) for e in cset)
    if nx.number_connected_components(h) != 2:
        return False
    for r in range(1, len(cset)):
        for sub in itertools.combinations(cset, r):
            h2 = nx_of(g)
            h2.remove_edges_from(tuple(e) for e in sub)
            if not nx.is_connected(h2):
                return False
    return True
