"""Even factors and the deficiency barrier that certifies their absence.

An even factor is a spanning subgraph in which every vertex has even degree
at least 2.  When none exists, some X ⊂ V(G) has

    sum_{v in X} (d(v)-2)  -  q(G;X)  <  0

where q counts the components of G-X joined to X by an odd number of edges;
such an X is a barrier, and a minimum one can be normalized until it
satisfies the five structural properties (a)-(e) checked here.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import FalsificationError, UsageError
from .graphs import (Edge, Graph, boundary_edge_count, components,
                     encode_graph6, is_connected, _check_subset)

DEFAULT_FACTOR_BUDGET = 10 ** 7
DEFAULT_BARRIER_BUDGET = 2 ** 24


@dataclass(frozen=True)
class EvenFactor:
    edges: tuple[Edge, ...]

    def to_json_obj(self) -> dict:
        return {"even_factor": [[e.u, e.v] for e in self.edges]}


@dataclass(frozen=True)
class Barrier:
    x: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]   # vertex sets of G-X
    odd_flags: tuple[bool, ...]               # e_G(D_i, X) odd?
    q: int
    deficiency: int

    @property
    def is_valid(self) -> bool:
        return self.deficiency < 0

    def to_json_obj(self) -> dict:
        return {"barrier": {"X": list(self.x),
                            "components": [list(d) for d in self.components],
                            "q": self.q,
                            "deficiency": self.deficiency}}


def is_even_factor(g: Graph, edges) -> bool:
    """True iff `edges` spans g with every degree even and >= 2."""
    deg = [0] * g.n
    seen = set()
    for e in edges:
        edge = Edge.of(*e)
        if not g.has_edge(edge.u, edge.v):
            raise UsageError(f"edge {tuple(edge)} not in graph")
        if edge in seen:
            raise UsageError(f"duplicate edge {tuple(edge)}")
        seen.add(edge)
        deg[edge.u] += 1
        deg[edge.v] += 1
    return all(d >= 2 and d % 2 == 0 for d in deg)


# -- search -------------------------------------------------------------------


@dataclass(frozen=True)
class FactorResult:
    status: str                 # "found" | "none" | "budget_exceeded"
    factor: EvenFactor | None
    nodes: int


class _Budget(Exception):
    pass


def find_even_factor(g: Graph, budget: int = DEFAULT_FACTOR_BUDGET) -> FactorResult:
    """Backtracking over edge in/out decisions with parity propagation.

    At each vertex: chosen + undecided < 2 is a dead end; zero undecided
    forces even count >= 2; one undecided is parity-forced; chosen+undecided
    == 2 with chosen < 2 forces all remaining edges in.  Branches on the
    vertex with fewest undecided edges, trying "in" before "out".  "none"
    means the whole space was exhausted.
    """
    if budget < 1:
        raise UsageError("budget must be positive")
    m = g.m
    inc = [[] for _ in range(g.n)]   # vertex -> incident edge indices
    for idx, e in enumerate(g.edges):
        inc[e.u].append(idx)
        inc[e.v].append(idx)
    nodes = [0]

    def propagate(state: list, cnt: list, und: list) -> bool:
        changed = True
        while changed:
            changed = False
            for v in range(g.n):
                c, u = cnt[v], und[v]
                if c + u < 2:
                    return False
                if u == 0:
                    if c % 2:
                        return False
                    continue
                if u == 1:
                    forced = 1 if c % 2 else -1
                elif c + u == 2 and c < 2:
                    forced = 1
                else:
                    continue
                for idx in inc[v]:
                    if state[idx] == 0:
                        state[idx] = forced
                        for w in g.edges[idx]:
                            und[w] -= 1
                            if forced == 1:
                                cnt[w] += 1
                changed = True
        return True

    def search(state: list, cnt: list, und: list) -> list | None:
        if not propagate(state, cnt, und):
            return None
        pick = -1
        best = m + 1
        for v in range(g.n):
            if 0 < und[v] < best:
                best, pick = und[v], v
        if pick == -1:
            return state  # fully decided; propagate already validated parity
        eidx = next(idx for idx in inc[pick] if state[idx] == 0)
        for val in (1, -1):
            nodes[0] += 1
            if nodes[0] > budget:
                raise _Budget
            st2, c2, u2 = state[:], cnt[:], und[:]
            st2[eidx] = val
            for w in g.edges[eidx]:
                u2[w] -= 1
                if val == 1:
                    c2[w] += 1
            out = search(st2, c2, u2)
            if out is not None:
                return out
        return None

    try:
        state = search([0] * m, [0] * g.n, [g.degree(v) for v in range(g.n)])
    except _Budget:
        return FactorResult("budget_exceeded", None, nodes[0])
    if state is None:
        return FactorResult("none", None, nodes[0])
    factor = EvenFactor(tuple(e for idx, e in enumerate(g.edges) if state[idx] == 1))
    assert is_even_factor(g, factor.edges)
    return FactorResult("found", factor, nodes[0])


# -- barriers -----------------------------------------------------------------


def deficiency(g: Graph, x) -> Barrier:
    """The barrier record for X: components of G-X, odd-boundary count, value."""
    xs = _check_subset(g, x, "x")
    if len(xs) == g.n:
        raise UsageError("x must be a proper subset of the vertices")
    comps = tuple(components(g, removed=xs))
    odd = tuple(boundary_edge_count(g, d, xs) % 2 == 1 for d in comps)
    q = sum(odd)
    value = sum(g.degree(v) - 2 for v in xs) - q
    return Barrier(xs, comps, odd, q, value)


@dataclass(frozen=True)
class BarrierResult:
    status: str                 # "found" | "none" | "budget_exceeded"
    barrier: Barrier | None
    subsets_checked: int


def find_barrier(g: Graph, budget: int = DEFAULT_BARRIER_BUDGET) -> BarrierResult:
    """First deficient X in size-then-lexicographic order (hence minimum size)."""
    if budget < 1:
        raise UsageError("budget must be positive")
    checked = 0
    for size in range(g.n):
        for xs in combinations(range(g.n), size):
            if checked >= budget:
                return BarrierResult("budget_exceeded", None, checked)
            checked += 1
            b = deficiency(g, xs)
            if b.deficiency < 0:
                return BarrierResult("found", b, checked)
    return BarrierResult("none", None, checked)


@dataclass(frozen=True)
class PropertyReport:
    a: bool   # deficiency < 0
    b: bool   # e_G(D_i, v) <= 1 for every component and every v in X
    c: bool   # X stable
    d: bool   # every e_G(D_i, X) odd
    e: bool   # sum_{v in X, d(v) != 2} (d(v)-3) + (1/2) sum_i (e_G(D_i,X)-3) < #divalent in X
    barrier: Barrier

    def all_hold(self) -> bool:
        return self.a and self.b and self.c and self.d and self.e


def check_properties(g: Graph, x) -> PropertyReport:
    """Evaluate (a)-(e) for X; (e) in exact rational arithmetic."""
    b = deficiency(g, x)
    xs = b.x
    prop_a = b.deficiency < 0
    prop_b = all(boundary_edge_count(g, d, (v,)) <= 1 for d in b.components for v in xs)
    xset = set(xs)
    prop_c = not any(e.u in xset and e.v in xset for e in g.edges)
    prop_d = all(b.odd_flags) if b.components else True
    divalent = sum(1 for v in xs if g.degree(v) == 2)
    lhs = (sum(g.degree(v) - 3 for v in xs if g.degree(v) != 2)
           + Fraction(sum(boundary_edge_count(g, d, xs) - 3 for d in b.components), 2))
    prop_e = lhs < divalent
    return PropertyReport(prop_a, prop_b, prop_c, prop_d, prop_e, b)


def normalize_barrier(g: Graph, x) -> Barrier:
    """Shrink a barrier until no single removal keeps it deficient.

    Smallest-index removals first, restarting after each.  The fixpoint of
    this reduction satisfies all of (a)-(e) on a connected host; that is
    re-verified explicitly, and a violation aborts with a counterexample
    bundle since it would contradict the structure theorem.
    """
    if not is_connected(g):
        raise UsageError("barrier normalization is defined for connected graphs")
    b = deficiency(g, x)
    if b.deficiency >= 0:
        raise UsageError(f"input is not a barrier: deficiency {b.deficiency} >= 0")
    xs = list(b.x)
    shrunk = True
    while shrunk:
        shrunk = False
        for v in xs:
            trial = [w for w in xs if w != v]
            if deficiency(g, trial).deficiency < 0:
                xs = trial
                shrunk = True
                break
    report = check_properties(g, xs)
    if not report.all_hold():
        raise FalsificationError(
            "normalized barrier violates a structural property",
            bundle={"graph6": encode_graph6(g), "input_x": list(b.x),
                    "normalized_x": xs,
                    "properties": {p: getattr(report, p) for p in "abcde"}})
    return report.barrier
