"""Simple undirected graphs, graph6 ingestion, and set-level primitives.

Vertices are dense integers 0..n-1.  Edges are canonical (u, v) pairs with
u < v.  Vertex sets and edge sets returned by any operation are sorted
tuples, so outputs are deterministic and certificates diff cleanly.

Derived graphs (edge deletions, induced edge subgraphs) keep the full vertex
range of the original graph; vertices outside the kept set simply become
isolated.  That keeps vertex identity stable across every operation in the
library, which the coloring and cut machinery relies on.
"""

from typing import Iterable, NamedTuple

from .errors import Graph6Error, UsageError

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62  # short form only


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        """Canonical edge for the unordered pair {a, b}."""
        if a == b:
            raise UsageError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise UsageError(f"vertex {w} is not an endpoint of {self}")


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "adj", "edges", "_deg", "_eindex")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise UsageError("graphs must have at least one vertex")
        canon = set()
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise UsageError(f"edge ({a},{b}) out of range for n={n}")
            canon.add(Edge.of(a, b))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(ns)) for ns in nbrs)
        self._deg = tuple(len(ns) for ns in self.adj)
        self._eindex = {e: i for i, e in enumerate(self.edges)}

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._deg[v]

    def max_degree(self) -> int:
        return max(self._deg) if self.n else 0

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def has_edge(self, a: int, b: int) -> bool:
        if a == b:
            return False
        return Edge.of(a, b) in self._eindex

    def edge_index(self, e: Edge) -> int:
        try:
            return self._eindex[e]
        except KeyError:
            raise UsageError(f"edge {tuple(e)} not in graph") from None

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise UsageError(f"vertex {v} out of range for n={self.n}")

    # -- derived graphs (vertex range preserved) -------------------------

    def delete_edge(self, e: Edge) -> "Graph":
        return self.delete_edges([e])

    def delete_edges(self, es: Iterable[tuple[int, int]]) -> "Graph":
        drop = {Edge.of(a, b) for a, b in es}
        missing = drop - set(self.edges)
        if missing:
            raise UsageError(f"edges not in graph: {sorted(tuple(e) for e in missing)}")
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def induced_edges(self, keep: Iterable[int]) -> "Graph":
        """Subgraph with only the edges inside `keep`; vertex range unchanged."""
        ks = set(keep)
        for v in ks:
            self._check_vertex(v)
        return Graph(self.n, [e for e in self.edges if e.u in ks and e.v in ks])

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def compact(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Drop isolated vertices, relabeling densely.

    Returns (graph, kept) with kept[i] = the original index of new vertex i.
    """
    kept = tuple(v for v in range(g.n) if g.degree(v) > 0)
    if not kept:
        raise UsageError("cannot compact an edgeless graph")
    remap = {v: i for i, v in enumerate(kept)}
    return Graph(len(kept), [(remap[e.u], remap[e.v]) for e in g.edges]), kept


# -- graph6 ----------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line (short form, 1 <= n <= 62).

    An optional ">>graph6<<" header is stripped.  Errors report the byte
    offset within the line after header removal.
    """
    s = text.rstrip("\r\n")
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line", 0)
    vals = []
    for off, ch in enumerate(s):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 alphabet", off)
        vals.append(o - 63)
    n = vals[0]
    if n == 0:
        raise Graph6Error("graph order 0 not supported", 0)
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - 1
    if have < need:
        raise Graph6Error(f"truncated: {need} data characters required, found {have}", len(s))
    if have > need:
        raise Graph6Error("trailing garbage after graph data", 1 + need)
    edges = []
    t = 0
    # upper triangle in column order: pair (i, j) for j = 1..n-1, i = 0..j-1
    for j in range(1, n):
        for i in range(j):
            if (vals[1 + t // 6] >> (5 - t % 6)) & 1:
                edges.append((i, j))
            t += 1
    if nbits % 6:
        pad = vals[need] & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", need)
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode to graph6 short form; inverse of parse_graph6."""
    if not 1 <= g.n <= GRAPH6_MAX_N:
        raise UsageError(f"graph6 short form requires 1 <= n <= {GRAPH6_MAX_N}, got n={g.n}")
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for t in range(0, len(bits), 6):
        word = 0
        for b in bits[t:t + 6]:
            word = (word << 1) | b
        out.append(chr(word + 63))
    return "".join(out)


# -- set-level primitives ----------------------------------------------------


def _check_subset(g: Graph, vs: Iterable[int], name: str) -> tuple[int, ...]:
    out = tuple(sorted(set(vs)))
    for v in out:
        if not (0 <= v < g.n):
            raise UsageError(f"{name} contains vertex {v} outside 0..{g.n - 1}")
    return out


def components(g: Graph, removed: Iterable[int] = ()) -> list[tuple[int, ...]]:
    """Connected components of G - removed, sorted, listed by smallest member."""
    gone = set(_check_subset(g, removed, "removed"))
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def boundary_edges(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[Edge, ...]:
    """E_G(A, B): the edges with one end in each of the disjoint sets."""
    sa = set(_check_subset(g, a, "a"))
    sb = set(_check_subset(g, b, "b"))
    if sa & sb:
        raise UsageError(f"vertex sets overlap: {sorted(sa & sb)}")
    return tuple(e for e in g.edges
                 if (e.u in sa and e.v in sb) or (e.u in sb and e.v in sa))


def boundary_edge_count(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """e_G(A, B), the count variant of boundary_edges."""
    return len(boundary_edges(g, a, b))


def neighborhood(g: Graph, a: Iterable[int]) -> tuple[int, ...]:
    """N(A): vertices outside A adjacent to some member of A."""
    sa = set(_check_subset(g, a, "a"))
    out = set()
    for v in sa:
        out.update(g.adj[v])
    return tuple(sorted(out - sa))


def is_stable(g: Graph, x: Iterable[int]) -> bool:
    """True iff x induces no edge."""
    sx = set(_check_subset(g, x, "x"))
    return all(not (e.u in sx and e.v in sx) for e in g.edges)


def divalent_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if g._deg[v] == 2)


def bridges(g: Graph) -> tuple[Edge, ...]:
    """All bridges, via iterative depth-first lowpoint search."""
    disc = [-1] * g.n
    low = [0] * g.n
    out = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack = [(root, -1, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pv, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                elif w != pv:
                    # simple graph: exactly one edge to the parent, skip it once
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if pv != -1:
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        out.append(Edge.of(pv, v))
    return tuple(sorted(out))


def is_bridgeless(g: Graph) -> bool:
    return not bridges(g)


def is_minimal_edge_cut(g: Graph, cut: Iterable[tuple[int, int]]) -> bool:
    """True iff cut is an inclusion-minimal edge cut of the connected graph g.

    Equivalent to: removing the cut leaves exactly two components and every
    cut edge has one endpoint on each side.
    """
    if not is_connected(g):
        raise UsageError("minimal-cut test requires a connected graph")
    es = tuple(Edge.of(a, b) for a, b in cut)
    if not es:
        return False
    rest = g.delete_edges(es)  # validates membership
    comps = components(rest)
    if len(comps) != 2:
        return False
    side = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            side[v] = idx
    return all(side[e.u] != side[e.v] for e in es)
