"""Acceptance suite: one test per numbered criterion of the build contract.

Each test computes a verdict plus a one-line summary, registers the line
(the terminal summary prints all of them together), and then asserts.  The
heavy shared artifact — a full sweep of the connected graphs on up to nine
vertices — is a module fixture consumed by the criticality audit, the cut
machinery, and the configuration hunt.
"""

import functools
import itertools
import random
import time
from dataclasses import replace

import pytest

import conftest as cf
from critlab.coloring import (align_missing, chromatic_index, color_exact,
                              color_minus_edge, enumerate_colorings,
                              kempe_chain, vizing_color)
from critlab.criticality import is_critical_edge, is_k_critical
from critlab.errors import FalsificationError, UsageError
from critlab.evenfactor import (check_properties, find_barrier,
                                find_even_factor, is_even_factor,
                                normalize_barrier)
from critlab.graphs import (Edge, Graph, divalent_vertices, is_bridgeless,
                            parse_graph6)
from critlab.harness import JobSpec, report_csv, report_json, run
from critlab.lemmas import (combine_cut_colorings, cut_sides, cut_type,
                            find_lemma1_configs, lemma1_trace, lemma2_check,
                            theorem1_audit)

XCHECK_FILES = tuple(f"connected_{i}.g6" for i in range(2, 8))
SWEEP_FILES = tuple(f"connected_{i}.g6" for i in range(1, 10))
ALL_FILES = tuple(f"all_{i}.g6" for i in range(1, 9))


def criterion(num: int):
    """Wrap a test so it always registers exactly one summary line."""
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                ok, detail = fn(*args, **kwargs)
            except Exception as exc:                      # pragma: no cover
                cf.record_criterion(num, False,
                                    f"errored: {type(exc).__name__}: {exc}")
                raise
            cf.record_criterion(num, ok, detail)
            assert ok, f"criterion {num}: {detail}"
        return wrapper
    return deco


def _delta(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


# -- shared heavy passes ------------------------------------------------------


@pytest.fixture(scope="module")
def xcheck():
    """Even-factor / barrier dichotomy over all connected graphs, 2<=n<=7.

    Returns (rows, elapsed): rows carry both search outcomes and the found
    barrier so the normalizer criterion can reuse them.
    """
    rows = []
    t0 = time.perf_counter()
    for name in XCHECK_FILES:
        for g6 in cf.fixture_lines(name):
            g = parse_graph6(g6)
            f = find_even_factor(g)
            b = find_barrier(g)
            rows.append((g6, f, b))
    return rows, time.perf_counter() - t0


def _sweep_row(g6: str) -> dict:
    """Classify one graph and, where applicable, audit and scan it."""
    g = parse_graph6(g6)
    row = {"g6": g6, "n": g.n}
    ci = chromatic_index(g)
    if ci.status == "unknown":
        row["status"] = "chi_budget"
        return row
    if ci.chi != ci.delta + 1:
        row["status"] = "class1"
        return row
    row["k"] = ci.delta
    scan = find_lemma1_configs(g)
    row["configs"] = len(scan.configs)
    row["scan_complete"] = scan.complete
    if ci.delta > 3:
        r2 = lemma2_check(g)
        row["lemma2"] = (len(r2.violations), r2.cuts_total,
                         r2.critical_cuts, r2.complete)
    try:
        verdict = theorem1_audit(g)
    except FalsificationError as exc:
        row["status"] = "falsified"
        row["detail"] = str(exc)
        return row
    except UsageError as exc:
        msg = str(exc)
        if "not settled" in msg:
            row["status"] = "crit_budget"
        elif "requires a k-critical" in msg:
            row["status"] = "class2_noncritical"
        elif "k >= 3" in msg:
            row["status"] = "critical_k2"
        else:
            raise
        return row
    row["status"] = "audited"
    row["audit_status"] = verdict.status
    row["hyp"] = verdict.hypothesis_met
    if verdict.even_factor is not None:
        row["factor"] = [(e.u, e.v) for e in verdict.even_factor.edges]
    if verdict.barrier is not None:
        row["barrier_x"] = list(verdict.barrier.x)
    return row


@pytest.fixture(scope="module")
def sweep():
    """Connected graphs with n <= 9: chi, criticality, audit, cut and
    configuration scans, all from one pass (several minutes)."""
    rows = []
    for name in SWEEP_FILES:
        for g6 in cf.fixture_lines(name):
            rows.append(_sweep_row(g6))
    return rows


# -- criteria -----------------------------------------------------------------


@criterion(1)
def test_criterion_01_factor_barrier_dichotomy(xcheck):
    rows, elapsed = xcheck
    mismatches = []
    n_factor = n_barrier = 0
    for g6, f, b in rows:
        assert f.status in ("found", "none"), g6
        assert b.status in ("found", "none"), g6
        if f.status == "found":
            n_factor += 1
            g = parse_graph6(g6)
            assert is_even_factor(g, [tuple(e) for e in f.factor.edges]), g6
        if b.status == "found":
            n_barrier += 1
            assert b.barrier.deficiency < 0, g6
        if (f.status == "found") == (b.status == "found"):
            mismatches.append(g6)
    # the one-vertex graph is the genuine boundary case: it admits neither
    # an even factor nor a barrier, so the equivalence is checked for n >= 2
    k1 = parse_graph6("@")
    k1_exempt = (find_even_factor(k1).status == "none"
                 and find_barrier(k1).status == "none")
    ok = not mismatches and k1_exempt and elapsed < 300 and len(rows) == 995
    detail = (f"{len(rows)} connected graphs (2<=n<=7): factor={n_factor}, "
              f"barrier={n_barrier}, mismatches={len(mismatches)}; "
              f"single-vertex graph exempt (neither factor nor barrier); "
              f"{elapsed:.1f}s sequential < 300s")
    return ok, detail


@criterion(2)
def test_criterion_02_normalizer(xcheck):
    rows, _ = xcheck
    bad_norm = []
    n_norm = 0
    for g6, f, b in rows:
        if f.status == "found":
            continue
        g = parse_graph6(g6)
        nb = normalize_barrier(g, b.barrier.x)
        rep = check_properties(g, nb.x)
        n_norm += 1
        if not rep.all_hold():
            bad_norm.append(g6)
    rng = random.Random(0xC2)
    pairs = 0
    tries = 0
    bad_pairs = 0
    while pairs < 10_000:
        tries += 1
        n = rng.randint(2, 9)
        p = rng.uniform(0.15, 0.7)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        if not edges:
            continue
        g = Graph(n, edges)
        size = rng.randint(1, max(1, n // 3))
        x = tuple(sorted(rng.sample(range(n), size)))
        rep = check_properties(g, x)
        if not (rep.c and rep.d):
            continue
        pairs += 1
        if rep.a != rep.e:
            bad_pairs += 1
    ok = not bad_norm and bad_pairs == 0
    detail = (f"{n_norm} factorless graphs normalized, all satisfy (a)-(e); "
              f"(a)<=>(e) on {pairs} random (g,X) pairs with (c),(d) "
              f"({tries} sampled), {bad_pairs} failures")
    return ok, detail


@criterion(3)
def test_criterion_03_vizing_bound():
    t0 = time.perf_counter()

    def check(g: Graph) -> None:
        col = vizing_color(g)
        delta = _delta(g)
        assert col.is_total()
        assert col.k <= delta + 1
        at_vertex = [set() for _ in range(g.n)]
        for e in g.edges:
            c_e = col.color_of(e)
            assert 1 <= c_e <= delta + 1
            for v in (e.u, e.v):
                assert c_e not in at_vertex[v], f"clash at {v}"
                at_vertex[v].add(c_e)

    n_exhaustive = 0
    for name in ALL_FILES:
        for g6 in cf.fixture_lines(name):
            check(parse_graph6(g6))
            n_exhaustive += 1
    rng = random.Random(0xC3)
    for _ in range(1_000):
        n = rng.randint(1, 40)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        check(Graph(n, edges))
    elapsed = time.perf_counter() - t0
    ok = n_exhaustive == 13_598 and elapsed < 600
    detail = (f"proper (Delta+1)-colorings on all {n_exhaustive} graphs "
              f"with n<=8 and 1000 random graphs with n<=40; "
              f"{elapsed:.1f}s < 600s")
    return ok, detail


@criterion(4)
def test_criterion_04_chi_spot_values():
    spots = [("C5", cf.cycle(5), 3), ("C6", cf.cycle(6), 2),
             ("K4", cf.complete(4), 3), ("K5", cf.complete(5), 5),
             ("Petersen", cf.petersen(), 4),
             ("subdivided K4", cf.subdivided_k4(), 4)]
    got = []
    for name, g, want in spots:
        sat = color_exact(g, want)
        assert sat.status == "colored" and sat.coloring.is_total(), name
        if want > 1:
            ref = color_exact(g, want - 1)
            assert ref.status == "unsatisfiable", name
        ci = chromatic_index(g)
        assert ci.status == "determined"
        got.append((name, ci.chi))
    ok = all(chi == want for (_, chi), (_, _, want) in zip(got, spots))
    detail = ", ".join(f"{name}={chi}" for name, chi in got) + \
        " (each k refuted at k-1 where k > 1)"
    return ok, detail


@criterion(5)
def test_criterion_05_criticality_verdicts():
    cases = [("C3", cf.cycle(3), 2), ("C5", cf.cycle(5), 2),
             ("C7", cf.cycle(7), 2), ("C9", cf.cycle(9), 2),
             ("subdivided K4", cf.subdivided_k4(), 3),
             ("Petersen", cf.petersen(), 3),
             ("C6", cf.cycle(6), None), ("K4", cf.complete(4), None)]
    failures = []
    for name, g, want_k in cases:
        rep = is_k_critical(g)
        assert rep.is_k_critical is not None, name
        if want_k is None:
            if rep.is_k_critical:
                failures.append(f"{name} unexpectedly critical")
        elif not rep.is_k_critical or rep.k != want_k:
            failures.append(f"{name} not {want_k}-critical "
                            f"(got is_k_critical={rep.is_k_critical}, "
                            f"k={rep.k})")
    ok = not failures
    detail = "all verdicts match" if ok else (
        "; ".join(failures) + " — the Petersen clause is unattainable: "
        "its six perfect matchings pairwise share an edge, so no two are "
        "disjoint, chi'(P-e)=4 for every edge e, and no edge is critical; "
        "the vertex-deleted Petersen graph is the 3-critical graph here "
        "(see the decisions ledger)")
    return ok, detail


@criterion(6)
def test_criterion_06_kempe_path_property():
    hosts = [("C3", cf.cycle(3)), ("C5", cf.cycle(5)), ("C7", cf.cycle(7)),
             ("C9", cf.cycle(9)), ("subdivided K4", cf.subdivided_k4()),
             ("Petersen", cf.petersen()), ("C6", cf.cycle(6)),
             ("K4", cf.complete(4))]
    checked = 0
    crit_edges = 0
    violations = []
    for name, g in hosts:
        delta = _delta(g)
        for e in g.edges:
            if is_critical_edge(g, e).status != "critical":
                continue
            crit_edges += 1
            h = g.delete_edge(e)
            for col in enumerate_colorings(h, delta):
                for i in col.missing_colors(e.u):
                    for j in col.missing_colors(e.v):
                        if i == j:
                            continue
                        ch = kempe_chain(col, e.u, i, j)
                        ends = {ch.vertices[0], ch.vertices[-1]}
                        if ch.kind != "path" or ends != {e.u, e.v}:
                            violations.append((name, tuple(e), i, j))
                        checked += 1
    ok = not violations and checked > 0
    detail = (f"{checked} (edge, coloring, color-pair) chains over "
              f"{crit_edges} critical edges: every chain is a path with "
              f"endpoints exactly the removed edge "
              f"(Petersen, C6, K4 contribute no critical edges)")
    return ok, detail


@criterion(7)
def test_criterion_07_even_factor_existence():
    n_pop = 0
    refuted = []
    for name in ALL_FILES[3:]:               # min degree 3 needs n >= 4
        for g6 in cf.fixture_lines(name):
            g = parse_graph6(g6)
            if min(g.degree(v) for v in range(g.n)) < 3 or not is_bridgeless(g):
                continue
            n_pop += 1
            res = find_even_factor(g)
            if res.status != "found" or not is_even_factor(
                    g, [tuple(e) for e in res.factor.edges]):
                refuted.append(g6)
    ok = not refuted and n_pop == 2762
    detail = (f"all {n_pop} bridgeless graphs with min degree >= 3 and "
              f"n <= 8 admit a verified even factor; {len(refuted)} refutations")
    return ok, detail


@criterion(8)
def test_criterion_08_audit_sweep(sweep):
    falsified = [r for r in sweep if r["status"] == "falsified"]
    budget = [r["g6"] for r in sweep
              if r["status"] in ("chi_budget", "crit_budget")
              or r.get("audit_status") == "budget_exceeded"]
    audited = [r for r in sweep if r["status"] == "audited"
               and r["audit_status"] != "budget_exceeded"]
    k2 = [r for r in sweep if r["status"] == "critical_k2"]
    bad_cert = []
    for r in audited:
        if r["hyp"] and r["audit_status"] != "factor":
            bad_cert.append(r["g6"])
            continue
        if "factor" in r and not is_even_factor(parse_graph6(r["g6"]),
                                                r["factor"]):
            bad_cert.append(r["g6"])
    by_k = {}
    for r in audited:
        by_k[r["k"]] = by_k.get(r["k"], 0) + 1
    n_factor = sum(1 for r in audited if r["audit_status"] == "factor")
    n_barrier = sum(1 for r in audited if r["audit_status"] == "barrier")
    ok = not falsified and not bad_cert
    detail = (f"{len(audited)} k-critical graphs audited over "
              f"{len(sweep)} connected graphs n<=9 "
              f"(by k: {dict(sorted(by_k.items()))}; factor={n_factor}, "
              f"barrier={n_barrier}); zero falsifications; every "
              f"hypothesis-met graph carries a revalidated factor; "
              f"{len(k2)} 2-critical graphs exempt (audit is stated for "
              f"k>=3); budget-exhausted: {budget or 'none'}")
    return ok, detail


@criterion(9)
def test_criterion_09_cut_machinery(sweep):
    # exhaustive combine-vs-type biconditional on constructed hosts
    setups = [("prism", cf.prism(), ((0, 3), (1, 4), (2, 5)), 3),
              ("double-star", cf.double_star(), ((1, 4), (2, 5), (3, 6)), 3),
              ("K4 star cut", cf.complete(4), ((0, 1), (0, 2), (0, 3)), 3)]
    pair_count = 0
    type_witness = set()
    for name, g, cut, k in setups:
        g_a, g_b, _, _ = cut_sides(g, cut)
        edges = tuple(Edge.of(*e) for e in cut)
        cols_a = list(enumerate_colorings(g_a, k))
        cols_b = list(enumerate_colorings(g_b, k))
        for ca, cb in itertools.product(cols_a, cols_b):
            ta, tb = cut_type(ca, *edges), cut_type(cb, *edges)
            merged = combine_cut_colorings(g, ca, cb, cut)
            if ta == tb:
                assert merged is not None and merged.is_total(), name
                type_witness.add(ta)
            else:
                assert merged is None, name
            pair_count += 1
    # stratified extra at k=4 so every type value is seen combining
    g = cf.prism()
    cut = ((0, 3), (1, 4), (2, 5))
    edges = tuple(Edge.of(*e) for e in cut)
    g_a, g_b, _, _ = cut_sides(g, cut)
    groups = {}
    for c in enumerate_colorings(g_a, 4):
        groups.setdefault(cut_type(c, *edges), []).append(c)
    for ta, tb in itertools.product(sorted(groups), repeat=2):
        for ca, cb in itertools.product(groups[ta][:4], groups[tb][:4]):
            merged = combine_cut_colorings(g, ca, cb, cut)
            assert (merged is not None) == (ta == tb), (ta, tb)
            if merged is not None:
                type_witness.add(ta)
            pair_count += 1
    # sweep-wide check on every class-2 host with k > 3
    l2rows = [r for r in sweep if "lemma2" in r]
    violations = [r["g6"] for r in l2rows if r["lemma2"][0] > 0]
    with_cuts = [r for r in l2rows if r["lemma2"][1] > 0]
    incomplete = [r["g6"] for r in l2rows if not r["lemma2"][3]]
    cuts_total = sum(r["lemma2"][1] for r in l2rows)
    crit_cuts = sum(r["lemma2"][2] for r in l2rows)
    ok = (type_witness == {1, 2, 3, 4, 5} and not violations
          and not incomplete and len(with_cuts) > 0)
    detail = (f"combine<=>same-type on {pair_count} side-coloring pairs over "
              f"{len(setups)} exhaustive hosts plus a stratified 4-color "
              f"prism (types seen combining: {sorted(type_witness)}); "
              f"cut-lemma scan on {len(l2rows)} class-2 hosts with k>3: "
              f"0 violations, {cuts_total} minimal 3-cuts "
              f"({crit_cuts} all-critical) on {len(with_cuts)} hosts, "
              f"{len(l2rows) - len(with_cuts)} vacuous, all scans complete")
    return ok, detail


@criterion(10)
def test_criterion_10_configuration_hunt(sweep):
    class2 = [r for r in sweep if "configs" in r]
    incomplete = [r["g6"] for r in class2 if not r["scan_complete"]]
    with_configs = [r for r in class2 if r["configs"] > 0]
    claim_failures = []
    traced = 0
    for r in with_configs:
        g = parse_graph6(r["g6"])
        scan = find_lemma1_configs(g)
        for cfg in scan.configs:
            trace = lemma1_trace(g, cfg)
            traced += 1
            for claim, held in trace.claim_results.items():
                if not held:
                    claim_failures.append((r["g6"], claim))
    # the alignment contract still gets exercised on >= 50 instances
    instances = []
    for m in range(4, 30):
        g = cf.subk4_plus_cycle(m)
        for e in ((0, 4), (1, 4)):
            instances.append((g, Edge.of(*e), 4))
    p9 = cf.petersen_minus_vertex()
    for w in divalent_vertices(p9):
        for e in p9.edges:
            if w in (e.u, e.v):
                instances.append((p9, e, w))
    align_bad = []
    for g, e, w in instances:
        delta = _delta(g)
        w_prime = e.other(w)
        res = color_minus_edge(g, e, delta)
        assert res.status == "colored"
        col = res.coloring
        host = col.graph
        x = next(v for v in range(g.n)
                 if v not in (w, w_prime) and host.degree(v) < delta)
        out = align_missing(col, w_prime, w, x)
        if not (out.is_total()
                and out.missing_colors(w_prime) == frozenset({1})
                and out.present_colors(w) == frozenset({1})
                and 1 in out.missing_colors(x)):
            align_bad.append((tuple(e), w))
    ok = (not incomplete and not claim_failures and not align_bad
          and len(instances) >= 50)
    n_cfg = sum(r["configs"] for r in class2)
    vacuity = (f"no configuration exists on any of the {len(class2)} "
               f"class-2 hosts (all scans complete) — vacuously true"
               if n_cfg == 0 else
               f"{n_cfg} configurations, {traced} traced, "
               f"{len(claim_failures)} claim failures")
    detail = (f"{vacuity}; alignment contract exercised on "
              f"{len(instances)} (graph, critical edge) instances, "
              f"{len(align_bad)} postcondition failures")
    return ok, detail


@criterion(11)
def test_criterion_11_harness_determinism():
    lines = tuple(ln for name in XCHECK_FILES
                  for ln in cf.fixture_lines(name))
    spec1 = JobSpec(subcommand="theorem2-xcheck", graphs=lines, jobs=1)
    spec8 = replace(spec1, jobs=8)
    rep1, rep8 = run(spec1), run(spec8)
    j1, j8 = report_json(rep1), report_json(rep8)
    c1, c8 = report_csv(rep1), report_csv(rep8)
    ok = (j1 == j8 and c1 == c8 and rep1.exit_code == rep8.exit_code == 0)
    detail = (f"{len(lines)} graphs through the dichotomy cross-check: "
              f"JSON ({len(j1)} bytes) and CSV ({len(c1)} bytes) are "
              f"byte-identical for 1 and 8 workers, exit code 0")
    return ok, detail
