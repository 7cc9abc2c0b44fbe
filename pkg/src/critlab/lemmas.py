"""Executable verifiers for the structural lemmas and the main audit.

Three layers:

* configuration bound — hunt for vertex sets A whose boundary consists of
  exactly one edge per neighbor, with neighbors {x, y, w_1..w_l} where
  d(y) <= d(x) < k and the w_i are divalent, plus one critical boundary
  edge; trace the triple sets M, M1, M2 and check every counting claim,
  ending in the bound l > k(k-d(y)) - d(x) + 1.
* 3-cut machinery — classify proper colorings of the two sides of a
  minimal 3-edge-cut into five types by the cut edges' color pattern, and
  combine same-type colorings into a proper coloring of the whole graph;
  check that no minimal 3-cut of critical edges touches a divalent vertex
  (for k > 3).
* main audit — on a certified k-critical graph, count divalent vertices,
  search for an even factor, and when none exists work through the barrier
  normalization and the exact rational component weights.

A claim that fails on a valid instance aborts with a FalsificationError
carrying a replayable bundle; that outcome is the most important one this
module can produce and is never swallowed.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .coloring import (DEFAULT_COLOR_BUDGET, EdgeColoring, align_missing,
                       chromatic_index, color_minus_edge, kempe_chain)
from .criticality import is_k_critical
from .errors import FalsificationError, HypothesisError, UsageError
from .evenfactor import (DEFAULT_BARRIER_BUDGET, DEFAULT_FACTOR_BUDGET,
                         Barrier, EvenFactor, find_barrier, find_even_factor,
                         normalize_barrier)
from .graphs import (Edge, Graph, boundary_edge_count, boundary_edges,
                     components, divalent_vertices, encode_graph6,
                     is_minimal_edge_cut, neighborhood, _check_subset)

DEFAULT_CANDIDATE_BUDGET = 10 ** 6


# -- configuration bound ------------------------------------------------------


@dataclass(frozen=True)
class Lemma1Config:
    a: tuple[int, ...]           # the set A
    x: int
    y: int
    w_list: tuple[int, ...]      # divalent neighbors w_1..w_l
    l: int
    k: int
    w_prime: int                 # A-endpoint of the chosen critical edge
    w: int                       # divalent endpoint, w in w_list

    def to_json_obj(self) -> dict:
        return {"A": list(self.a), "x": self.x, "y": self.y,
                "w_list": list(self.w_list), "l": self.l, "k": self.k,
                "critical_edge": [self.w_prime, self.w]}


@dataclass(frozen=True)
class Triple:
    h: int        # color of the unique A-boundary edge at z
    z: int
    h_prime: int  # another color present at z

    def as_list(self) -> list:
        return [self.h, self.z, self.h_prime]


@dataclass(frozen=True)
class Lemma1Scan:
    configs: tuple[Lemma1Config, ...]
    complete: bool        # False when a budget truncated the hunt
    candidates: int       # connected vertex sets examined


def _connected_subsets(g: Graph, max_size: int):
    for size in range(1, max_size + 1):
        for vs in combinations(range(g.n), size):
            inside = set(vs)
            stack, seen = [vs[0]], {vs[0]}
            while stack:
                for u in g.adj[stack.pop()]:
                    if u in inside and u not in seen:
                        seen.add(u)
                        stack.append(u)
            if len(seen) == size:
                yield vs


def find_lemma1_configs(g: Graph, color_budget: int = DEFAULT_COLOR_BUDGET,
                        candidate_budget: int = DEFAULT_CANDIDATE_BUDGET) -> Lemma1Scan:
    """All (A, x, y, critical edge) configurations, up to |A| <= n-3.

    The host must be class 2 with Delta = k (verified here).  Candidate
    counting is deterministic, so two runs with the same budgets always
    return the same scan.
    """
    ci = chromatic_index(g, color_budget)
    if ci.status == "unknown":
        raise UsageError("chromatic index not determined within budget")
    k = ci.delta
    if ci.chi != k + 1:
        raise UsageError("configuration hunt applies to class-2 graphs only")
    configs = []
    complete = True
    candidates = 0
    crit_cache: dict[Edge, bool | None] = {}
    for a in _connected_subsets(g, g.n - 3):
        candidates += 1
        if candidates > candidate_budget:
            complete = False
            break
        na = neighborhood(g, a)
        if len(na) < 3:
            continue
        if any(boundary_edge_count(g, a, (v,)) != 1 for v in na):
            continue
        deg = {v: g.degree(v) for v in na}
        for x in na:
            if deg[x] >= k:
                continue
            for y in na:
                if y == x or deg[y] > deg[x]:
                    continue
                wl = tuple(v for v in na if v not in (x, y))
                if not wl or any(deg[v] != 2 for v in wl):
                    continue
                for w in wl:
                    e = boundary_edges(g, a, (w,))[0]
                    crit = crit_cache.get(e, "unseen")
                    if crit == "unseen":
                        res = color_minus_edge(g, e, k, color_budget)
                        crit = None if res.status == "budget_exceeded" \
                            else res.status == "colored"
                        crit_cache[e] = crit
                    if crit is None:
                        complete = False
                    elif crit:
                        configs.append(Lemma1Config(
                            a=a, x=x, y=y, w_list=wl, l=len(wl), k=k,
                            w_prime=e.other(w), w=w))
    return Lemma1Scan(tuple(configs), complete, candidates)


def validate_lemma1_config(g: Graph, cfg: Lemma1Config) -> None:
    """Structural hypothesis check; raises naming the violated hypothesis.

    The criticality of w'w is not re-proved here (it needs a color search);
    lemma1_trace discovers a non-critical choice on its own.
    """
    a = _check_subset(g, cfg.a, "A")
    if not a or tuple(cfg.a) != a:
        raise HypothesisError("A must be a nonempty sorted vertex set without repeats")
    if len(a) > g.n - 3:
        raise HypothesisError(f"|A| = {len(a)} exceeds the cap n-3 = {g.n - 3}")
    na = neighborhood(g, a)
    expected = tuple(sorted({cfg.x, cfg.y, *cfg.w_list}))
    if len({cfg.x, cfg.y, *cfg.w_list}) != 2 + len(cfg.w_list):
        raise HypothesisError("x, y and the w_i must be pairwise distinct")
    if na != expected:
        raise HypothesisError(f"N(A) = {na} but config names {expected}")
    for v in na:
        if boundary_edge_count(g, a, (v,)) != 1:
            raise HypothesisError(f"e_G(A, {v}) != 1")
    if cfg.k != g.max_degree():
        raise HypothesisError(f"config k={cfg.k} but Delta(G)={g.max_degree()}")
    if not g.degree(cfg.y) <= g.degree(cfg.x) < cfg.k:
        raise HypothesisError(
            f"need d(y) <= d(x) < k, got d(y)={g.degree(cfg.y)}, "
            f"d(x)={g.degree(cfg.x)}, k={cfg.k}")
    for v in cfg.w_list:
        if g.degree(v) != 2:
            raise HypothesisError(f"w_i = {v} is not divalent (degree {g.degree(v)})")
    if cfg.l != len(cfg.w_list) or cfg.l < 1:
        raise HypothesisError(f"l = {cfg.l} does not match w_list of size {len(cfg.w_list)}")
    if cfg.w not in cfg.w_list:
        raise HypothesisError(f"w = {cfg.w} is not in the w list")
    if cfg.w_prime not in set(a):
        raise HypothesisError(f"w' = {cfg.w_prime} is not in A")
    if not g.has_edge(cfg.w_prime, cfg.w):
        raise HypothesisError(f"w'w = ({cfg.w_prime},{cfg.w}) is not an edge")


def lemma1_bound(k: int, dx: int, dy: int, l: int) -> bool:
    """The bare arithmetic: l > k(k - dy) - dx + 1."""
    return l > k * (k - dy) - dx + 1


def lemma1_bound_check(g: Graph, cfg: Lemma1Config) -> bool:
    validate_lemma1_config(g, cfg)
    return lemma1_bound(cfg.k, g.degree(cfg.x), g.degree(cfg.y), cfg.l)


@dataclass(frozen=True)
class Lemma1Trace:
    cfg: Lemma1Config
    phi: EdgeColoring                       # aligned coloring of G - w'w
    m: tuple[Triple, ...]
    m1: tuple[Triple, ...]
    m2: tuple[Triple, ...]
    pairs: tuple[tuple[int, int], ...]      # distinct (j, z_i)
    claim_results: dict = field(compare=False)
    bound_note: str = ""

    def to_json_obj(self) -> dict:
        return {"config": self.cfg.to_json_obj(),
                "phi": self.phi.to_json_obj(),
                "M": [t.as_list() for t in self.m],
                "M1": [t.as_list() for t in self.m1],
                "M2": [t.as_list() for t in self.m2],
                "pairs": [list(p) for p in self.pairs],
                "claims": dict(self.claim_results),
                "bound_note": self.bound_note}


def _contained_triples(m_by_vertex: dict, chain, colors: set) -> list[Triple]:
    """Triples of M sitting at interior chain vertices with this color pair.

    Interior vertices carry both chain colors, so the triple's two edges are
    automatically the chain's edges there; endpoints miss one color and can
    host no contained triple.  Returned in path order.
    """
    out = []
    for z in chain.vertices[1:-1]:
        for t in m_by_vertex.get(z, ()):
            if {t.h, t.h_prime} == colors:
                out.append(t)
    return out


def lemma1_trace(g: Graph, cfg: Lemma1Config,
                 color_budget: int = DEFAULT_COLOR_BUDGET) -> Lemma1Trace:
    """Materialize M, M1, M2 for one configuration and check every claim.

    Claim schedule: (1) align the coloring of G - w'w so that the color
    missing at w' is 1, present at w, missing at x; (2) |M1| = k-1 via the
    last triples of the paths P_w'(1, i); (3) every P_{z_i}(i1, j) contains
    a triple of M; (4) M1 and M2 are disjoint; (5) |M2| equals the number
    of distinct (j, z_i) pairs; (6) that count is >= (k - d(y))(k - 1);
    then the l-inequality chain.  Any failed claim raises FalsificationError
    with a replayable bundle.
    """
    validate_lemma1_config(g, cfg)
    k, x, y, w, wp = cfg.k, cfg.x, cfg.y, cfg.w, cfg.w_prime
    dx, dy = g.degree(x), g.degree(y)

    res = color_minus_edge(g, Edge.of(wp, w), k, color_budget)
    if res.status == "budget_exceeded":
        raise UsageError("coloring search for G - w'w exceeded its budget")
    if res.status == "unsatisfiable":
        raise HypothesisError("the chosen edge w'w is not critical: G - w'w needs k+1 colors")
    phi = align_missing(res.coloring, wp, w, x)

    def fail(claim: str, detail: str, extra: dict | None = None):
        bundle = {"graph6": encode_graph6(g), "config": cfg.to_json_obj(),
                  "phi": phi.to_json_obj(), "claim": claim, "detail": detail}
        if extra:
            bundle.update(extra)
        raise FalsificationError(f"{claim} failed: {detail}", bundle)

    claims: dict[str, bool] = {"claim1_alignment": True}
    if 1 not in phi.missing_colors(x):
        fail("claim1_alignment", "color 1 not missing at x after alignment")

    # M: per boundary vertex z != w, one triple for each other color at z
    m: list[Triple] = []
    m_by_vertex: dict[int, list[Triple]] = {}
    for z in neighborhood(g, cfg.a):
        if z == w:
            continue
        e = boundary_edges(g, cfg.a, (z,))[0]
        h = phi.color_of(e)
        row = [Triple(h, z, hp) for hp in sorted(phi.present_colors(z)) if hp != h]
        m_by_vertex[z] = row
        m.extend(row)
    m.sort(key=lambda t: (t.z, t.h, t.h_prime))
    claims["m_size_identity"] = len(m) == (dx - 1) + (dy - 1) + (cfg.l - 1)
    if not claims["m_size_identity"]:
        fail("m_size_identity", f"|M| = {len(m)} != (d(x)-1)+(d(y)-1)+(l-1)")

    # M1: last triple of each path P_w'(1, i)
    m1_by_i: dict[int, Triple] = {}
    for i in range(2, k + 1):
        chain = kempe_chain(phi, wp, 1, i, start=wp)
        if chain.kind != "path" or chain.vertices[-1] != w:
            fail("w_path_property", f"P_w'(1,{i}) is not a w',w-path",
                 {"chain": list(chain.vertices)})
        contained = _contained_triples(m_by_vertex, chain, {1, i})
        if not contained:
            fail("m1_nonempty", f"P_w'(1,{i}) contains no triple of M",
                 {"chain": list(chain.vertices)})
        m1_by_i[i] = contained[-1]
    m1 = sorted(set(m1_by_i.values()), key=lambda t: (t.z, t.h, t.h_prime))
    claims["claim2_m1_size"] = len(m1) == k - 1
    if not claims["claim2_m1_size"]:
        fail("claim2_m1_size", f"|M1| = {len(m1)} != k-1 = {k - 1}")
    claims["m1_color_pairs"] = all({t.h, t.h_prime} == {1, i}
                                   for i, t in m1_by_i.items())
    if not claims["m1_color_pairs"]:
        fail("m1_color_pairs", "an M1 triple does not use colors {1, i}")
    claims["m1_avoids_x"] = all(t.z != x for t in m1)
    if not claims["m1_avoids_x"]:
        fail("m1_avoids_x", "x occurs in a triple of M1 although color 1 is missing at x")

    # M2: first triple of each path P_{z_i}(i1, j), j missing at z_i
    pairs: set[tuple[int, int]] = set()
    m2: set[Triple] = set()
    for i in range(2, k + 1):
        t1 = m1_by_i[i]
        zi, i1 = t1.z, t1.h
        for j in sorted(phi.missing_colors(zi)):
            pairs.add((j, zi))
            chain = kempe_chain(phi, zi, i1, j, start=zi)
            contained = _contained_triples(m_by_vertex, chain, {i1, j})
            if not contained:
                fail("claim3_m2_nonempty",
                     f"P_z{i}({i1},{j}) contains no triple of M",
                     {"z_i": zi, "chain": list(chain.vertices)})
            m2.add(contained[0])
    claims["claim3_m2_nonempty"] = True
    claims["claim4_disjoint"] = not (set(m1) & m2)
    if not claims["claim4_disjoint"]:
        fail("claim4_disjoint", "M1 and M2 intersect")
    claims["claim5_m2_size"] = len(m2) == len(pairs)
    if not claims["claim5_m2_size"]:
        fail("claim5_m2_size", f"|M2| = {len(m2)} != pair count {len(pairs)}")
    claims["claim6_pair_lower"] = len(pairs) >= (k - dy) * (k - 1)
    if not claims["claim6_pair_lower"]:
        fail("claim6_pair_lower",
             f"pair count {len(pairs)} < (k-d(y))(k-1) = {(k - dy) * (k - 1)}")

    claims["chain_l_vs_m"] = cfg.l > len(m) - (dx - 1) - (dy - 1)
    claims["chain_m_vs_m1m2"] = len(m) >= len(m1) + len(m2)
    claims["bound_strict"] = lemma1_bound(k, dx, dy, cfg.l)
    claims["bound_weak"] = cfg.l >= k * (k - dy) - dx + 1
    for name in ("chain_l_vs_m", "chain_m_vs_m1m2", "bound_strict"):
        if not claims[name]:
            fail(name, "final inequality chain broke")

    return Lemma1Trace(
        cfg=cfg, phi=phi, m=tuple(m), m1=tuple(m1),
        m2=tuple(sorted(m2, key=lambda t: (t.z, t.h, t.h_prime))),
        pairs=tuple(sorted(pairs)),
        claim_results=claims,
        bound_note=("statement bound is strict (l > ...); the proof text "
                    "announces the weak form (l >= ...) though its chain "
                    "derives the strict one — both recorded"))


# -- 3-cut machinery ----------------------------------------------------------


def cut_type(c: EdgeColoring, e1, e2, e3) -> int:
    """Classify the color pattern on an ordered edge triple into types 1-5."""
    cols = []
    for e in (e1, e2, e3):
        col = c.color_of(e)
        if col == 0:
            raise UsageError(f"cut edge {tuple(Edge.of(*e))} is uncolored")
        cols.append(col)
    a, b, d = cols
    if a == b == d:
        return 1
    if a == b:
        return 2
    if a == d:
        return 3
    if b == d:
        return 4
    return 5


def cut_sides(g: Graph, cut) -> tuple[Graph, Graph, tuple[int, ...], tuple[int, ...]]:
    """(G_A, G_B, A, B) for a minimal 3-edge-cut; A holds the smallest vertex.

    G_A is induced by A plus the three cut endpoints on the B side (and
    symmetrically for G_B), so both sides contain the cut edges.
    """
    edges = tuple(Edge.of(*e) for e in cut)
    if len(set(edges)) != 3 or not is_minimal_edge_cut(g, edges):
        raise UsageError("cut must be a minimal 3-edge-cut")
    comps = components(g, ())
    if len(comps) != 1:
        raise UsageError("cut sides need a connected host")
    parts = components(g.delete_edges(edges), ())
    a_side, b_side = parts[0], parts[1]
    aset = set(a_side)
    ys = tuple(e.v if e.u in aset else e.u for e in edges)
    xs = tuple(e.u if e.u in aset else e.v for e in edges)
    g_a = g.induced_edges(set(a_side) | set(ys))
    g_b = g.induced_edges(set(b_side) | set(xs))
    return g_a, g_b, a_side, b_side


def combine_cut_colorings(g: Graph, phi_a: EdgeColoring, phi_b: EdgeColoring,
                          cut) -> EdgeColoring | None:
    """Merge side colorings across a minimal 3-cut; None when types differ.

    When the two sides show the same color pattern on (e1,e2,e3), the B-side
    colors are relabeled by the bijection sending each phi_b cut color to the
    phi_a one (remaining colors matched in ascending order), and the merged
    assignment — A-side colors on G_A's edges, relabeled B-side colors on the
    remaining edges — is returned as a coloring of the full graph.
    """
    edges = tuple(Edge.of(*e) for e in cut)
    g_a, g_b, a_side, _ = cut_sides(g, edges)
    if phi_a.graph != g_a:
        raise UsageError("first coloring is not on the A side of the cut")
    if phi_b.graph != g_b:
        raise UsageError("second coloring is not on the B side of the cut")
    if phi_a.k != phi_b.k:
        raise UsageError("side colorings use different k")
    if cut_type(phi_a, *edges) != cut_type(phi_b, *edges):
        return None
    k = phi_a.k
    sigma: dict[int, int] = {}
    for e in edges:
        src, dst = phi_b.color_of(e), phi_a.color_of(e)
        if sigma.get(src, dst) != dst:
            raise AssertionError("same type but inconsistent cut pattern")
        sigma[src] = dst
    rest_src = [c for c in range(1, k + 1) if c not in sigma]
    rest_dst = [c for c in range(1, k + 1) if c not in set(sigma.values())]
    sigma.update(zip(rest_src, rest_dst))
    # ownership: A keeps its internal edges and the aligned cut; everything
    # with both ends on the B side follows phi_b even when it also lies in
    # G_A (edges among the y_i), so each vertex sees a single color source
    aset = set(a_side)
    cut_set = set(edges)
    colors = []
    for e in g.edges:
        if e in cut_set or (e.u in aset and e.v in aset):
            colors.append(phi_a.color_of(e))
        else:
            colors.append(sigma[phi_b.color_of(e)])
    return EdgeColoring(g, k, tuple(colors))


@dataclass(frozen=True)
class Lemma2Result:
    violations: tuple            # cuts breaking the no-divalent-contact claim
    cuts_total: int              # minimal 3-edge-cuts found
    critical_cuts: int           # among them, cuts of three critical edges
    complete: bool
    nodes: int

    def to_json_obj(self) -> dict:
        return {"violations": [[list(e) for e in cut] for cut in self.violations],
                "cuts_total": self.cuts_total,
                "critical_cuts": self.critical_cuts,
                "complete": self.complete,
                "nodes": self.nodes}


def lemma2_check(g: Graph, budget: int = DEFAULT_COLOR_BUDGET) -> Lemma2Result:
    """Hunt for minimal 3-cuts of critical edges touching a divalent vertex.

    Requires k > 3 and a class-2 host.  The expected outcome is an empty
    violation list; anything else is a counterexample to the cut lemma.
    """
    ci = chromatic_index(g, budget)
    if ci.status == "unknown":
        raise UsageError("chromatic index not determined within budget")
    k = ci.delta
    if k <= 3:
        raise UsageError(f"the cut lemma requires k > 3, got k = {k}")
    if ci.chi != k + 1:
        raise UsageError("the cut lemma applies to class-2 graphs only")
    crit_cache: dict[Edge, bool | None] = {}
    nodes = ci.nodes
    complete = True
    violations = []
    cuts_total = critical_cuts = 0

    def is_crit(e: Edge) -> bool | None:
        nonlocal nodes, complete
        if e not in crit_cache:
            res = color_minus_edge(g, e, k, budget)
            nodes += res.nodes
            if res.status == "budget_exceeded":
                complete = False
                crit_cache[e] = None
            else:
                crit_cache[e] = res.status == "colored"
        return crit_cache[e]

    for triple in combinations(g.edges, 3):
        if not is_minimal_edge_cut(g, triple):
            continue
        cuts_total += 1
        verdicts = [is_crit(e) for e in triple]
        if None in verdicts:
            continue  # counted in `complete`
        if all(verdicts):
            critical_cuts += 1
            if any(g.degree(v) == 2 for e in triple for v in e):
                violations.append(tuple(triple))
    return Lemma2Result(tuple(violations), cuts_total, critical_cuts, complete, nodes)


# -- main audit ---------------------------------------------------------------


def component_weight(g: Graph, x, d) -> Fraction:
    """g(D) = sum over v in N(D) of (d(v)-2)/d(v), exact."""
    xs = _check_subset(g, x, "x")
    ds = _check_subset(g, d, "d")
    if ds not in components(g, removed=xs):
        raise UsageError("d is not a component of G - x")
    return sum((Fraction(g.degree(v) - 2, g.degree(v)) for v in neighborhood(g, ds)),
               Fraction(0))


@dataclass(frozen=True)
class AuditVerdict:
    graph6: str
    k: int
    divalent_count: int
    hypothesis_met: bool               # divalent_count <= 2k - 6
    status: str                        # "factor" | "barrier" | "budget_exceeded"
    even_factor: EvenFactor | None
    barrier: Barrier | None
    g_values: tuple[Fraction, ...]     # per component of the normalized barrier
    nodes: int

    def to_json_obj(self) -> dict:
        out = {"graph6": self.graph6, "k": self.k,
               "divalent_count": self.divalent_count,
               "hypothesis_met": self.hypothesis_met,
               "status": self.status, "nodes": self.nodes}
        if self.even_factor is not None:
            out.update(self.even_factor.to_json_obj())
        if self.barrier is not None:
            out.update(self.barrier.to_json_obj())
            out["g_values"] = [[v.numerator, v.denominator] for v in self.g_values]
            total = sum(self.g_values, Fraction(0))
            out["g_sum"] = [total.numerator, total.denominator]
        return out


def theorem1_audit(g: Graph, color_budget: int = DEFAULT_COLOR_BUDGET,
                   factor_budget: int = DEFAULT_FACTOR_BUDGET,
                   barrier_budget: int = DEFAULT_BARRIER_BUDGET) -> AuditVerdict:
    """Audit one certified k-critical graph against the even-factor theorem.

    hypothesis_met and no even factor together would falsify the theorem:
    that combination aborts with a counterexample bundle.  When no factor
    exists the barrier pipeline must go through and the weight pivot
    sum g(D_i) < #components must hold (it follows from the normalized
    properties); its failure is likewise a falsification.
    """
    report = is_k_critical(g, color_budget, fail_fast=True)
    if report.is_k_critical is None:
        raise UsageError("criticality not settled within budget")
    if not report.is_k_critical:
        raise UsageError("audit requires a k-critical graph")
    k = report.k
    if k < 3:
        raise UsageError(f"the theorem is stated for k >= 3, got k = {k}")
    g6 = encode_graph6(g)
    div = len(divalent_vertices(g))
    hyp = div <= 2 * k - 6
    nodes = report.nodes
    fres = find_even_factor(g, factor_budget)
    nodes += fres.nodes
    if fres.status == "found":
        return AuditVerdict(g6, k, div, hyp, "factor", fres.factor, None, (), nodes)
    if fres.status == "budget_exceeded":
        return AuditVerdict(g6, k, div, hyp, "budget_exceeded", None, None, (), nodes)
    if hyp:
        raise FalsificationError(
            "k-critical graph within the divalent bound has no even factor",
            bundle={"graph6": g6, "k": k, "divalent_count": div})
    bres = find_barrier(g, barrier_budget)
    if bres.status == "budget_exceeded":
        return AuditVerdict(g6, k, div, hyp, "budget_exceeded", None, None, (), nodes)
    if bres.status == "none":
        raise FalsificationError(
            "no even factor and no barrier: existence equivalence violated",
            bundle={"graph6": g6})
    barrier = normalize_barrier(g, bres.barrier.x)
    weights = tuple(component_weight(g, barrier.x, d) for d in barrier.components)
    if sum(weights, Fraction(0)) >= len(barrier.components):
        raise FalsificationError(
            "weight pivot failed: sum g(D_i) >= component count on a normalized barrier",
            bundle={"graph6": g6, "X": list(barrier.x),
                    "weights": [[w.numerator, w.denominator] for w in weights]})
    return AuditVerdict(g6, k, div, hyp, "barrier", None, barrier, weights, nodes)
