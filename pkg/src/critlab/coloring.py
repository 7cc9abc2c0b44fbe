"""Proper k-edge-colorings: Kempe chains, fan construction, exact search.

Colors are integers 1..k; 0 marks an uncolored edge in partial states.
EdgeColoring values are immutable; every mutating-looking operation returns
a fresh value.  All searches are deterministic: fixed edge orders, colors
tried ascending, no randomness anywhere.
"""

from dataclasses import dataclass
from typing import Iterator

from .errors import FalsificationError, HypothesisError, UsageError
from .graphs import Edge, Graph

DEFAULT_COLOR_BUDGET = 10 ** 8


class EdgeColoring:
    """A (possibly partial) proper assignment of colors 1..k to the host's edges."""

    __slots__ = ("graph", "k", "colors")

    def __init__(self, graph: Graph, k: int, colors: tuple[int, ...]):
        if k < 1:
            raise UsageError("a coloring needs k >= 1")
        if len(colors) != graph.m:
            raise UsageError(f"expected {graph.m} edge colors, got {len(colors)}")
        for c in colors:
            if not 0 <= c <= k:
                raise UsageError(f"color {c} outside 0..{k}")
        self.graph = graph
        self.k = k
        self.colors = tuple(colors)
        self._check_proper()

    @classmethod
    def uncolored(cls, graph: Graph, k: int) -> "EdgeColoring":
        return cls(graph, k, (0,) * graph.m)

    @classmethod
    def from_map(cls, graph: Graph, k: int, assignment: dict) -> "EdgeColoring":
        colors = [0] * graph.m
        for e, c in assignment.items():
            colors[graph.edge_index(Edge.of(*e))] = c
        return cls(graph, k, tuple(colors))

    def _check_proper(self) -> None:
        g = self.graph
        for v in range(g.n):
            seen = 0
            for w in g.adj[v]:
                c = self.colors[g.edge_index(Edge.of(v, w))]
                if c:
                    bit = 1 << c
                    if seen & bit:
                        raise UsageError(f"color {c} repeated at vertex {v}: not proper")
                    seen |= bit

    # -- queries ----------------------------------------------------------

    def color_of(self, e) -> int:
        return self.colors[self.graph.edge_index(Edge.of(*e))]

    def present_colors(self, v: int) -> frozenset:
        g = self.graph
        return frozenset(c for w in g.adj[v]
                         if (c := self.colors[g.edge_index(Edge.of(v, w))]))

    def missing_colors(self, v: int) -> frozenset:
        return frozenset(range(1, self.k + 1)) - self.present_colors(v)

    def edge_at(self, v: int, color: int):
        """The unique edge at v carrying `color`, or None."""
        g = self.graph
        for w in g.adj[v]:
            e = Edge.of(v, w)
            if self.colors[g.edge_index(e)] == color:
                return e
        return None

    def is_total(self) -> bool:
        return all(self.colors) if self.colors else True

    def uncolored_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e, c in zip(self.graph.edges, self.colors) if c == 0)

    # -- derived colorings --------------------------------------------------

    def assign(self, e, color: int) -> "EdgeColoring":
        idx = self.graph.edge_index(Edge.of(*e))
        colors = list(self.colors)
        colors[idx] = color
        return EdgeColoring(self.graph, self.k, tuple(colors))

    def relabel(self, mapping: dict) -> "EdgeColoring":
        """Apply a color bijection; colors absent from `mapping` stay fixed."""
        table = {c: c for c in range(1, self.k + 1)}
        table.update(mapping)
        if sorted(table.values()) != list(range(1, self.k + 1)):
            raise UsageError(f"relabeling {mapping} is not a bijection on 1..{self.k}")
        return EdgeColoring(self.graph, self.k,
                            tuple(table[c] if c else 0 for c in self.colors))

    def to_json_obj(self) -> dict:
        return {"k": self.k,
                "edges": [[e.u, e.v, c] for e, c in zip(self.graph.edges, self.colors) if c]}

    def __eq__(self, other) -> bool:
        return (isinstance(other, EdgeColoring) and self.graph == other.graph
                and self.k == other.k and self.colors == other.colors)

    def __hash__(self) -> int:
        return hash((self.graph, self.k, self.colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(k={self.k}, colored={sum(1 for c in self.colors if c)}/{len(self.colors)})"


def present_colors(c: EdgeColoring, v: int) -> frozenset:
    return c.present_colors(v)


def missing_colors(c: EdgeColoring, v: int) -> frozenset:
    return c.missing_colors(v)


# -- Kempe chains ------------------------------------------------------------


@dataclass(frozen=True)
class KempeChain:
    colors: tuple[int, int]
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    edge_colors: tuple[int, ...]  # snapshot, used to detect stale swaps
    kind: str                     # "path" | "circuit"


def kempe_chain(c: EdgeColoring, v: int, i: int, j: int, start: int | None = None) -> KempeChain:
    """The maximal (i,j)-alternating chain through v.

    Paths are listed from the smallest-index endpoint unless `start` pins an
    endpoint.  Circuits are listed from `start` (or the smallest chain
    vertex), stepping first toward the smaller-indexed chain neighbor.
    """
    if i == j:
        raise UsageError("kempe chain needs two distinct colors")
    for col in (i, j):
        if not 1 <= col <= c.k:
            raise UsageError(f"color {col} outside 1..{c.k}")
    c.graph._check_vertex(v)
    ei, ej = c.edge_at(v, i), c.edge_at(v, j)
    if ei is None and ej is None:
        raise UsageError(f"both colors {i},{j} missing at vertex {v}: chain undefined")

    def walk(v0: int, first: Edge) -> tuple[list[int], list[Edge]]:
        verts, edges = [v0], []
        cur, e = v0, first
        while e is not None:
            edges.append(e)
            cur = e.other(cur)
            verts.append(cur)
            if cur == v0:
                break
            nxt = j if c.color_of(e) == i else i
            e = c.edge_at(cur, nxt)
        return verts, edges

    if ei is not None and ej is not None:
        verts1, edges1 = walk(v, ei)
        if verts1[-1] == v:  # closed up: circuit through v
            verts, edges, kind = verts1, edges1, "circuit"
        else:
            verts2, edges2 = walk(v, ej)
            verts = list(reversed(verts2)) + verts1[1:]
            edges = list(reversed(edges2)) + edges1
            kind = "path"
    else:
        verts, edges = walk(v, ei if ei is not None else ej)
        kind = "path"

    if kind == "path":
        ends = (verts[0], verts[-1])
        anchor = min(ends) if start is None else start
        if anchor not in ends:
            raise UsageError(f"start vertex {start} is not an endpoint of the chain")
        if verts[0] != anchor:
            verts.reverse()
            edges.reverse()
    else:
        cyc = verts[:-1]
        anchor = min(cyc) if start is None else start
        if anchor not in cyc:
            raise UsageError(f"start vertex {start} is not on the chain")
        at = cyc.index(anchor)
        cyc = cyc[at:] + cyc[:at]
        if cyc[-1] < cyc[1]:  # deterministic direction
            cyc = [cyc[0]] + list(reversed(cyc[1:]))
        verts = cyc + [anchor]
        edges = [Edge.of(a, b) for a, b in zip(verts, verts[1:])]

    return KempeChain(colors=(i, j), vertices=tuple(verts), edges=tuple(edges),
                      edge_colors=tuple(c.color_of(e) for e in edges), kind=kind)


def kempe_swap(c: EdgeColoring, chain: KempeChain) -> EdgeColoring:
    """Exchange the chain's two colors along its edges."""
    i, j = chain.colors
    swap = {i: j, j: i}
    colors = list(c.colors)
    for e, snap in zip(chain.edges, chain.edge_colors):
        idx = c.graph.edge_index(e)
        if colors[idx] != snap:
            raise UsageError(f"stale chain: edge {tuple(e)} no longer carries color {snap}")
        colors[idx] = swap[snap]
    return EdgeColoring(c.graph, c.k, tuple(colors))


# -- Vizing fan construction -------------------------------------------------


def vizing_color(g: Graph) -> EdgeColoring:
    """Total proper (Δ+1)-edge-coloring by the classical fan construction.

    Fan extensions pick the smallest-index neighbor, so the result is
    deterministic.  Always succeeds on simple graphs.
    """
    delta = g.max_degree()
    k = max(delta + 1, 1)
    m = g.m
    col = [0] * m                      # edge index -> color (0 = uncolored)
    at = [[-1] * (k + 1) for _ in range(g.n)]  # at[v][c] = edge index or -1

    def free(v: int, c: int) -> bool:
        return at[v][c] == -1

    def smallest_free(v: int) -> int:
        for c in range(1, k + 1):
            if at[v][c] == -1:
                return c
        raise AssertionError("no free color: fan invariant broken")

    def set_color(idx: int, c: int) -> None:
        u, v = g.edges[idx]
        old = col[idx]
        if old:
            at[u][old] = at[v][old] = -1
        col[idx] = c
        if c:
            at[u][c] = at[v][c] = idx

    def invert_path(v0: int, c: int, d: int) -> None:
        # maximal alternating path from v0 starting with its d-edge (c free at v0)
        cur, want = v0, d
        run = []
        while True:
            idx = at[cur][want]
            if idx == -1:
                break
            run.append(idx)
            cur = g.edges[idx].other(cur)
            want = c if want == d else d
        # two phases keep the at-table consistent while neighbors swap colors
        plan = [(idx, c if col[idx] == d else d) for idx in run]
        for idx, _ in plan:
            set_color(idx, 0)
        for idx, new in plan:
            set_color(idx, new)

    for base_idx, (u, v) in enumerate(g.edges):
        if col[base_idx]:
            continue
        # maximal fan of u starting at v
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = -1
            for z in g.adj[u]:
                if z in in_fan:
                    continue
                cz = col[g.edge_index(Edge.of(u, z))]
                if cz and free(last, cz):
                    nxt = z
                    break
            if nxt == -1:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = smallest_free(u)
        d = smallest_free(fan[-1])
        if c != d and not free(u, d):
            invert_path(u, c, d)
        # first fan prefix that is still a fan and has d free at its tip
        w_pos = -1
        for t, z in enumerate(fan):
            if t > 0:
                cz = col[g.edge_index(Edge.of(u, fan[t]))]
                if not cz or not free(fan[t - 1], cz):
                    break
            if free(z, d):
                w_pos = t
                break
        if w_pos == -1:
            raise AssertionError("no rotatable fan prefix: construction invariant broken")
        idxs = [g.edge_index(Edge.of(u, fan[t])) for t in range(w_pos + 1)]
        plan = [(idxs[t], col[idxs[t + 1]]) for t in range(w_pos)] + [(idxs[w_pos], d)]
        for idx, _ in plan:
            set_color(idx, 0)
        for idx, new in plan:
            set_color(idx, new)

    out = EdgeColoring(g, k, tuple(col))
    if m and not out.is_total():
        raise AssertionError("fan construction left an edge uncolored")
    return out


# -- exact search ------------------------------------------------------------


@dataclass(frozen=True)
class ColorResult:
    status: str                      # "colored" | "unsatisfiable" | "budget_exceeded"
    coloring: EdgeColoring | None
    nodes: int


def _search_order(g: Graph) -> list[Edge]:
    # max endpoint degree descending, ties by canonical edge order
    deg = [g.degree(v) for v in range(g.n)]
    return sorted(g.edges, key=lambda e: (-max(deg[e.u], deg[e.v]), e))


def _iter_colorings(g: Graph, k: int, order: list[Edge], budget: int,
                    symmetry: bool, stats: list) -> Iterator[dict]:
    """Backtracking core.  Yields {edge: color} maps for each total coloring.

    stats[0] accumulates nodes (color assignments tried); stats[1] is set to
    True iff the search space was exhausted within budget.  With `symmetry`
    on, colors above (max used so far)+1 are skipped: they produce only
    relabelings of colorings reachable anyway, so satisfiability and
    exhaustion verdicts are unaffected while refutations get k! cheaper.
    """
    m = len(order)
    eu = [e.u for e in order]
    ev = [e.v for e in order]
    used = [0] * g.n
    col = [0] * m
    maxc = [0] * (m + 1)
    nodes = 0
    d = 0
    while d >= 0:
        if d == m:
            stats[0] = nodes
            yield {order[t]: col[t] for t in range(m)}
            d -= 1
            continue
        u, v = eu[d], ev[d]
        prev = col[d]
        if prev:
            bit = 1 << (prev - 1)
            used[u] ^= bit
            used[v] ^= bit
        lim = maxc[d] + 1 if symmetry else k
        if lim > k:
            lim = k
        avail = ~(used[u] | used[v]) & ((1 << lim) - 1) & ~((1 << prev) - 1)
        if avail:
            c = (avail & -avail).bit_length()
            col[d] = c
            bit = 1 << (c - 1)
            used[u] |= bit
            used[v] |= bit
            nodes += 1
            if nodes > budget:
                stats[0] = nodes
                stats[1] = False
                return
            maxc[d + 1] = c if c > maxc[d] else maxc[d]
            d += 1
        else:
            col[d] = 0
            d -= 1
    stats[0] = nodes
    stats[1] = True


def color_exact(g: Graph, k: int, budget: int = DEFAULT_COLOR_BUDGET) -> ColorResult:
    """Total proper k-coloring, or an exhaustion verdict that none exists.

    Edges are processed in a fixed order (max endpoint degree descending,
    canonical tiebreak), colors ascending; a matching-capacity bound prunes
    at the root (each color class is a matching, so k classes cannot cover
    more than k*floor(active/2) edges).  Budget exhaustion is reported as
    its own verdict, never conflated with unsatisfiability.
    """
    if k < 1:
        raise UsageError("color_exact requires k >= 1")
    if budget < 1:
        raise UsageError("budget must be positive")
    if g.m == 0:
        return ColorResult("colored", EdgeColoring.uncolored(g, k), 0)
    active = sum(1 for v in range(g.n) if g.degree(v) > 0)
    if g.m > k * (active // 2):
        return ColorResult("unsatisfiable", None, 0)
    order = _search_order(g)
    stats = [0, False]
    for sol in _iter_colorings(g, k, order, budget, True, stats):
        return ColorResult("colored", EdgeColoring.from_map(g, k, sol), stats[0])
    if stats[1]:
        return ColorResult("unsatisfiable", None, stats[0])
    return ColorResult("budget_exceeded", None, stats[0])


def enumerate_colorings(g: Graph, k: int, budget: int = DEFAULT_COLOR_BUDGET) -> Iterator[EdgeColoring]:
    """All total proper k-colorings, in deterministic search order.

    No symmetry reduction: color-relabeled variants are distinct outputs.
    Raises UsageError if the budget runs out mid-enumeration, because a
    truncated enumeration must never masquerade as an exhaustive one.
    """
    if k < 1:
        raise UsageError("enumerate_colorings requires k >= 1")
    if g.m == 0:
        yield EdgeColoring.uncolored(g, k)
        return
    order = _search_order(g)
    stats = [0, False]
    for sol in _iter_colorings(g, k, order, budget, False, stats):
        yield EdgeColoring.from_map(g, k, sol)
    if not stats[1]:
        raise UsageError(f"coloring enumeration exceeded budget {budget}")


def chromatic_index(g: Graph, budget: int = DEFAULT_COLOR_BUDGET) -> "ChiResult":
    """χ′(G) via exact search at k = Δ; Δ+1 on refutation (the fan bound)."""
    delta = g.max_degree()
    if g.m == 0:
        return ChiResult("determined", 0, 0, 0, None)
    res = color_exact(g, delta, budget)
    if res.status == "colored":
        return ChiResult("determined", delta, delta, res.nodes, res.coloring)
    if res.status == "unsatisfiable":
        return ChiResult("determined", delta + 1, delta, res.nodes, None)
    return ChiResult("unknown", None, delta, res.nodes, None)


@dataclass(frozen=True)
class ChiResult:
    status: str               # "determined" | "unknown"
    chi: int | None
    delta: int
    nodes: int
    coloring: EdgeColoring | None  # a Δ-coloring when class 1


def color_minus_edge(g: Graph, e, k: int, budget: int = DEFAULT_COLOR_BUDGET) -> ColorResult:
    """Proper k-coloring of G−e, or an exhaustion verdict."""
    edge = Edge.of(*e)
    if not g.has_edge(edge.u, edge.v):
        raise UsageError(f"edge {tuple(edge)} not in graph")
    return color_exact(g.delete_edge(edge), k, budget)


# -- missing-color alignment (the recoloring step traces start from) ---------


def align_missing(c: EdgeColoring, w_prime: int, w: int, x: int) -> EdgeColoring:
    """Recolor so the color missing at w′ is present at w, is missing at x, and is 1.

    `c` must be a total proper k-coloring of a graph obtained by deleting
    the edge w′w, where w had degree 2 before the deletion.  In that setting
    the missing set at w′ and the present set at w are forced to be equal
    singletons {i}; one alternating-path swap moves i to a color missing at
    x, and a final relabel makes that color 1.
    """
    g = c.graph
    for v, name in ((w_prime, "w'"), (w, "w"), (x, "x")):
        g._check_vertex(v)
    if x in (w, w_prime):
        raise HypothesisError(f"x must differ from w and w', got x={x}")
    if g.has_edge(w_prime, w):
        raise HypothesisError("host graph still contains the edge w'w")
    if not c.is_total():
        raise HypothesisError("coloring must be total on the edge-deleted graph")
    if g.degree(w) != 1:
        raise HypothesisError(f"hypothesis 'w divalent' violated: w has host degree {g.degree(w)}, need 1")
    if g.degree(x) >= c.k:
        raise HypothesisError(f"hypothesis d(x)<k violated: d(x)={g.degree(x)}, k={c.k}")
    miss_wp = c.missing_colors(w_prime)
    pres_w = c.present_colors(w)
    if len(miss_wp) != 1 or miss_wp != pres_w:
        raise HypothesisError(
            f"missing set at w' must equal present set at w as singletons; "
            f"got missing(w')={sorted(miss_wp)}, present(w)={sorted(pres_w)} "
            f"(holds automatically when w'w is critical)")
    i = next(iter(miss_wp))
    miss_x = c.missing_colors(x)
    j = i if i in miss_x else min(miss_x)
    out = c
    if i != j:
        chain = kempe_chain(c, w_prime, i, j, start=w_prime)
        if chain.kind != "path" or chain.vertices[-1] != w:
            raise FalsificationError(
                "alternating path from w' did not end at w (contradicts the "
                "critical-edge path property)",
                bundle={"colors": [i, j], "w_prime": w_prime, "w": w,
                        "chain": [list(v) if isinstance(v, tuple) else v for v in chain.vertices],
                        "coloring": c.to_json_obj()})
        out = kempe_swap(c, chain)
        i = j
    if i != 1:
        out = out.relabel({i: 1, 1: i})
    assert out.missing_colors(w_prime) == frozenset({1}) == out.present_colors(w)
    assert 1 in out.missing_colors(x)
    return out
