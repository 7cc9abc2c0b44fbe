"""Batch driver: graph6 lines in, deterministic certificates out.

Graphs are independent jobs.  Workers may process them in any order, but
results are emitted strictly in input order and contain no timestamps or
machine state, so reports are byte-identical for any worker count.
"""

import csv
import io
import json
import os
import sys
from dataclasses import dataclass, replace
from multiprocessing import Pool

from .coloring import (DEFAULT_COLOR_BUDGET, chromatic_index, color_exact,
                       vizing_color)
from .criticality import is_k_critical
from .errors import CritlabError, FalsificationError, Graph6Error, UsageError
from .evenfactor import (DEFAULT_BARRIER_BUDGET, DEFAULT_FACTOR_BUDGET,
                         check_properties, find_barrier, find_even_factor,
                         normalize_barrier)
from .graphs import Graph, divalent_vertices, parse_graph6
from .lemmas import find_lemma1_configs, lemma1_trace, lemma2_check, theorem1_audit

SUBCOMMANDS = ("color", "chi", "critical", "evenfactor", "barrier", "normalize",
               "lemma1", "lemma2", "audit", "theorem2-xcheck")

CSV_COLUMNS = ("graph6", "n", "m", "delta", "chi", "critical", "divalent_count",
               "hypothesis_met", "even_factor", "barrier_size", "verdict")


@dataclass(frozen=True)
class JobSpec:
    subcommand: str
    graphs: tuple[str, ...] = ()          # inline graph6 lines; else read input
    input_path: str | None = None         # None = standard input
    jobs: int = 1
    budget_color: int = DEFAULT_COLOR_BUDGET
    budget_factor: int = DEFAULT_FACTOR_BUDGET
    budget_barrier: int = DEFAULT_BARRIER_BUDGET
    k: int | None = None                  # target color count for `color`
    filter_n_min: int | None = None
    filter_n_max: int | None = None
    filter_delta_min: int | None = None
    filter_delta_max: int | None = None
    filter_class2: bool = False
    filter_critical: bool = False
    json_path: str | None = None
    csv_path: str | None = None

    def validate(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        for name in ("budget_color", "budget_factor", "budget_barrier"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be positive")
        for lo, hi, what in ((self.filter_n_min, self.filter_n_max, "n"),
                             (self.filter_delta_min, self.filter_delta_max, "delta")):
            if lo is not None and hi is not None and lo > hi:
                raise UsageError(f"empty {what} filter range {lo}..{hi}")
        if self.jobs < 1:
            raise UsageError("jobs must be >= 1")
        if self.k is not None and self.k < 1:
            raise UsageError("k must be >= 1")


def scaled(spec: JobSpec) -> JobSpec:
    """Apply the CRITLAB_BUDGET_SCALE multiplier, if set."""
    raw = os.environ.get("CRITLAB_BUDGET_SCALE")
    if not raw:
        return spec
    try:
        factor = float(raw)
    except ValueError as exc:
        raise UsageError(f"CRITLAB_BUDGET_SCALE not a number: {raw!r}") from exc
    if factor <= 0:
        raise UsageError("CRITLAB_BUDGET_SCALE must be positive")
    return replace(spec,
                   budget_color=max(1, int(spec.budget_color * factor)),
                   budget_factor=max(1, int(spec.budget_factor * factor)),
                   budget_barrier=max(1, int(spec.budget_barrier * factor)))


@dataclass
class RunReport:
    records: list               # one dict per surviving graph, input order
    summary: dict
    exit_code: int


def filter_stream(spec: JobSpec, graphs):
    """Order-preserving filter on n, delta, class-2, criticality."""
    for g in graphs:
        if _passes_filters(spec, g):
            yield g


def _passes_filters(spec: JobSpec, g: Graph) -> bool:
    if spec.filter_n_min is not None and g.n < spec.filter_n_min:
        return False
    if spec.filter_n_max is not None and g.n > spec.filter_n_max:
        return False
    delta = g.max_degree()
    if spec.filter_delta_min is not None and delta < spec.filter_delta_min:
        return False
    if spec.filter_delta_max is not None and delta > spec.filter_delta_max:
        return False
    if spec.filter_class2:
        ci = chromatic_index(g, spec.budget_color)
        if ci.status != "determined" or ci.chi != delta + 1:
            return False
    if spec.filter_critical:
        report = is_k_critical(g, spec.budget_color, fail_fast=True)
        if report.is_k_critical is not True:
            return False
    return True


# -- per-graph dispatch -------------------------------------------------------


def _dispatch(g: Graph, spec: JobSpec) -> tuple[str, dict, dict]:
    """Run one subcommand; returns (verdict, certificate, flat CSV fields)."""
    sub = spec.subcommand
    flat: dict = {}
    if sub == "color":
        if spec.k is None:
            c = vizing_color(g)
            return "ok", {"k": c.k, "coloring": c.to_json_obj()}, flat
        res = color_exact(g, spec.k, spec.budget_color)
        cert = {"k": spec.k, "status": res.status, "nodes": res.nodes,
                "coloring": res.coloring.to_json_obj() if res.coloring else None}
        return ("budget" if res.status == "budget_exceeded" else "ok"), cert, flat
    if sub == "chi":
        ci = chromatic_index(g, spec.budget_color)
        flat["chi"] = ci.chi
        cert = {"chi": ci.chi, "delta": ci.delta, "status": ci.status,
                "nodes": ci.nodes}
        return ("budget" if ci.status == "unknown" else "ok"), cert, flat
    if sub == "critical":
        rep = is_k_critical(g, spec.budget_color)
        flat["chi"] = rep.chi
        flat["critical"] = rep.is_k_critical
        verdict = "budget" if rep.is_k_critical is None else "ok"
        return verdict, rep.to_json_obj(), flat
    if sub == "evenfactor":
        res = find_even_factor(g, spec.budget_factor)
        flat["even_factor"] = "found" if res.status == "found" else (
            "none" if res.status == "none" else "")
        cert = {"status": res.status, "nodes": res.nodes}
        if res.factor:
            cert.update(res.factor.to_json_obj())
        return ("budget" if res.status == "budget_exceeded" else "ok"), cert, flat
    if sub == "barrier":
        res = find_barrier(g, spec.budget_barrier)
        cert = {"status": res.status, "subsets_checked": res.subsets_checked}
        if res.barrier:
            cert.update(res.barrier.to_json_obj())
            flat["barrier_size"] = len(res.barrier.x)
        return ("budget" if res.status == "budget_exceeded" else "ok"), cert, flat
    if sub == "normalize":
        res = find_barrier(g, spec.budget_barrier)
        if res.status == "budget_exceeded":
            return "budget", {"status": res.status}, flat
        if res.status == "none":
            return "ok", {"status": "no_barrier",
                          "subsets_checked": res.subsets_checked}, flat
        norm = normalize_barrier(g, res.barrier.x)
        props = check_properties(g, norm.x)
        flat["barrier_size"] = len(norm.x)
        cert = {"status": "normalized", **norm.to_json_obj(),
                "properties": {p: getattr(props, p) for p in "abcde"}}
        return "ok", cert, flat
    if sub == "lemma1":
        scan = find_lemma1_configs(g, spec.budget_color)
        traces = [lemma1_trace(g, cfg, spec.budget_color).to_json_obj()
                  for cfg in scan.configs]
        cert = {"configs": len(scan.configs), "complete": scan.complete,
                "candidates": scan.candidates, "vacuous": not scan.configs,
                "traces": traces}
        return ("ok" if scan.complete else "budget"), cert, flat
    if sub == "lemma2":
        res = lemma2_check(g, spec.budget_color)
        verdict = "falsified" if res.violations else (
            "ok" if res.complete else "budget")
        return verdict, res.to_json_obj(), flat
    if sub == "audit":
        verdict = theorem1_audit(g, spec.budget_color, spec.budget_factor,
                                 spec.budget_barrier)
        flat["hypothesis_met"] = verdict.hypothesis_met
        flat["critical"] = True
        if verdict.status == "factor":
            flat["even_factor"] = "found"
        elif verdict.status == "barrier":
            flat["even_factor"] = "none"
            flat["barrier_size"] = len(verdict.barrier.x)
        out = "budget" if verdict.status == "budget_exceeded" else "ok"
        return out, verdict.to_json_obj(), flat
    if sub == "theorem2-xcheck":
        fres = find_even_factor(g, spec.budget_factor)
        bres = find_barrier(g, spec.budget_barrier)
        cert = {"even_factor": fres.status, "barrier": bres.status,
                "nodes": fres.nodes, "subsets_checked": bres.subsets_checked}
        if fres.factor:
            cert.update(fres.factor.to_json_obj())
        if bres.barrier:
            cert.update(bres.barrier.to_json_obj())
            flat["barrier_size"] = len(bres.barrier.x)
        if "budget_exceeded" in (fres.status, bres.status):
            return "budget", cert, flat
        flat["even_factor"] = "found" if fres.status == "found" else "none"
        consistent = (fres.status == "found") == (bres.status == "none")
        cert["consistent"] = consistent
        return ("ok" if consistent else "falsified"), cert, flat
    raise UsageError(f"unknown subcommand {sub!r}")


def _worker(task: tuple) -> dict:
    line_no, text, spec = task
    record = {"line": line_no, "graph6": text, "verdict": "ok"}
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        record.update(verdict="error", error=str(exc))
        return record
    record.update(n=g.n, m=g.m, delta=g.max_degree(),
                  divalent_count=len(divalent_vertices(g)))
    if not _passes_filters(spec, g):
        record["verdict"] = "filtered"
        return record
    try:
        verdict, cert, flat = _dispatch(g, spec)
        record["verdict"] = verdict
        record["certificate"] = cert
        record.update(flat)
        if verdict == "falsified":
            record["error"] = "claim falsified on this instance"
    except FalsificationError as exc:
        record.update(verdict="falsified", error=str(exc), bundle=exc.bundle)
    except CritlabError as exc:
        record.update(verdict="error", error=str(exc))
    return record


# -- the run ------------------------------------------------------------------


def _read_lines(spec: JobSpec):
    if spec.graphs:
        for i, text in enumerate(spec.graphs, start=1):
            yield i, text.strip()
        return
    stream = sys.stdin if spec.input_path in (None, "-") else open(spec.input_path)
    try:
        for i, line in enumerate(stream, start=1):
            line = line.strip()
            if line:
                yield i, line
    finally:
        if stream is not sys.stdin:
            stream.close()


def run(spec: JobSpec) -> RunReport:
    spec.validate()
    tasks = [(no, text, spec) for no, text in _read_lines(spec)]
    if spec.jobs == 1 or len(tasks) <= 1:
        results = [_worker(t) for t in tasks]
    else:
        with Pool(spec.jobs) as pool:
            results = list(pool.imap(_worker, tasks, chunksize=16))
    records = [r for r in results if r["verdict"] != "filtered"]
    counts = {"read": len(tasks),
              "filtered": sum(1 for r in results if r["verdict"] == "filtered"),
              "ok": sum(1 for r in records if r["verdict"] == "ok"),
              "errors": sum(1 for r in records if r["verdict"] == "error"),
              "falsifications": sum(1 for r in records if r["verdict"] == "falsified"),
              "budget_exceeded": sum(1 for r in records if r["verdict"] == "budget"),
              "critical": sum(1 for r in records if r.get("critical") is True),
              "even_factor_found": sum(1 for r in records
                                       if r.get("even_factor") == "found"),
              "even_factor_none": sum(1 for r in records
                                      if r.get("even_factor") == "none"),
              "budget_graphs": [r["graph6"] for r in records
                                if r["verdict"] == "budget"]}
    if counts["errors"] or counts["falsifications"]:
        code = 1
    elif counts["budget_exceeded"]:
        code = 2
    else:
        code = 0
    return RunReport(records, counts, code)


def report_json(report: RunReport) -> str:
    return json.dumps({"summary": report.summary, "graphs": report.records},
                      sort_keys=True, indent=2) + "\n"


def report_csv(report: RunReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.records:
        cert = r.get("certificate") or {}
        writer.writerow([
            r.get("graph6", ""),
            r.get("n", ""),
            r.get("m", ""),
            r.get("delta", ""),
            r.get("chi", cert.get("chi", "")),
            _cell(r.get("critical")),
            r.get("divalent_count", ""),
            _cell(r.get("hypothesis_met")),
            r.get("even_factor", ""),
            r.get("barrier_size", ""),
            r.get("verdict", ""),
        ])
    return buf.getvalue()


def _cell(value) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)
