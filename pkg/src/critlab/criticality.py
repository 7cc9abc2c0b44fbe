"""Critical edges and k-critical graphs.

An edge e is critical when the host is class 2 (chi' = Delta+1) and deleting
e drops the chromatic index back to Delta.  A graph is k-critical when
Delta = k, chi' = k+1, and every edge is critical.  All verdicts are
three-valued: budget exhaustion is reported as "unknown", never guessed.
"""

from dataclasses import dataclass

from .coloring import (DEFAULT_COLOR_BUDGET, ColorResult, EdgeColoring,
                       chromatic_index, color_minus_edge)
from .errors import UsageError
from .graphs import Edge, Graph, encode_graph6, is_connected


@dataclass(frozen=True)
class EdgeVerdict:
    edge: Edge
    status: str                    # "critical" | "not_critical" | "unknown"
    witness: EdgeColoring | None   # proper Delta-coloring of G-e when critical
    nodes: int


@dataclass(frozen=True)
class CriticalityReport:
    graph6: str
    k: int                         # Delta(G)
    chi_status: str                # "determined" | "unknown"
    chi: int | None
    edge_verdicts: tuple[EdgeVerdict, ...]
    is_k_critical: bool | None     # None while any needed verdict is unknown
    nodes: int

    def to_json_obj(self) -> dict:
        return {
            "graph6": self.graph6,
            "k": self.k,
            "chi": self.chi,
            "chi_status": self.chi_status,
            "is_k_critical": self.is_k_critical,
            "nodes": self.nodes,
            "edges": [{
                "edge": [ev.edge.u, ev.edge.v],
                "status": ev.status,
                "witness": ev.witness.to_json_obj() if ev.witness else None,
            } for ev in self.edge_verdicts],
        }


def is_critical_edge(g: Graph, e, budget: int = DEFAULT_COLOR_BUDGET) -> EdgeVerdict:
    """Verdict for one edge: class-2 check plus a Delta-coloring of G-e."""
    edge = Edge.of(*e)
    if not g.has_edge(edge.u, edge.v):
        raise UsageError(f"edge {tuple(edge)} not in graph")
    ci = chromatic_index(g, budget)
    if ci.status == "unknown":
        return EdgeVerdict(edge, "unknown", None, ci.nodes)
    if ci.chi == ci.delta:
        return EdgeVerdict(edge, "not_critical", None, ci.nodes)
    res = color_minus_edge(g, edge, ci.delta, budget)
    nodes = ci.nodes + res.nodes
    if res.status == "colored":
        return EdgeVerdict(edge, "critical", res.coloring, nodes)
    if res.status == "unsatisfiable":
        return EdgeVerdict(edge, "not_critical", None, nodes)
    return EdgeVerdict(edge, "unknown", None, nodes)


def is_k_critical(g: Graph, budget: int = DEFAULT_COLOR_BUDGET,
                  fail_fast: bool = False) -> CriticalityReport:
    """Full report: chi' once, then one G-e search per edge (canonical order).

    With fail_fast, stops at the first non-critical edge; the verdict tuple
    then covers only the edges examined (the overall flag is already False).
    """
    if g.m < 1:
        raise UsageError("k-criticality needs at least one edge")
    if not is_connected(g):
        raise UsageError("k-criticality is defined for connected graphs")
    g6 = encode_graph6(g)
    ci = chromatic_index(g, budget)
    k = ci.delta
    if ci.status == "unknown":
        return CriticalityReport(g6, k, "unknown", None, (), None, ci.nodes)
    if ci.chi == k:
        verdicts = tuple(EdgeVerdict(e, "not_critical", None, 0) for e in g.edges)
        return CriticalityReport(g6, k, "determined", k, verdicts, False, ci.nodes)
    nodes = ci.nodes
    verdicts = []
    overall: bool | None = True
    for e in g.edges:
        res = color_minus_edge(g, e, k, budget)
        nodes += res.nodes
        if res.status == "colored":
            verdicts.append(EdgeVerdict(e, "critical", res.coloring, res.nodes))
        elif res.status == "unsatisfiable":
            verdicts.append(EdgeVerdict(e, "not_critical", None, res.nodes))
            overall = False
            if fail_fast:
                break
        else:
            verdicts.append(EdgeVerdict(e, "unknown", None, res.nodes))
            if overall is True:
                overall = None
    if overall is None and any(v.status == "not_critical" for v in verdicts):
        overall = False  # a definite non-critical edge settles it
    return CriticalityReport(g6, k, "determined", k + 1, tuple(verdicts), overall, nodes)


def critical_subgraph(g: Graph, budget: int = DEFAULT_COLOR_BUDGET) -> Graph | None:
    """Delete non-critical edges (canonical order, restart) until all remain critical.

    Input must be class 2; the fixpoint is a Delta(g)-critical subgraph on the
    same vertex range (shed vertices become isolated).  None if any chromatic
    decision ran out of budget.
    """
    ci = chromatic_index(g, budget)
    if ci.status == "unknown":
        return None
    if ci.chi != ci.delta + 1:
        raise UsageError("critical subgraph extraction needs a class-2 input")
    k = ci.delta
    h = g
    restart = True
    while restart:
        restart = False
        for e in h.edges:
            res = color_minus_edge(h, e, k, budget)
            if res.status == "budget_exceeded":
                return None
            if res.status == "unsatisfiable":
                # chi'(h-e) is still k+1: e is not critical, discard it
                h = h.delete_edge(e)
                restart = True
                break
    return h
