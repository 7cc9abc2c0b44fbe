"""Command-line entry point.

    critlab chi Bw
    critlab theorem2-xcheck --in connected_le7.g6 --jobs 4 --csv sweep.csv
    critlab audit --in critical9.g6 --json audits.json

Exit codes: 0 clean, 1 on errors or falsifications, 2 when only budget
exhaustion prevented a verdict.  CRITLAB_BUDGET_SCALE multiplies budgets.
"""

import argparse
import sys

from .errors import CritlabError
from .harness import (SUBCOMMANDS, JobSpec, report_csv, report_json, run,
                      scaled)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critlab",
        description="edge-coloring criticality and even-factor laboratory")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("graphs", nargs="*",
                       help="graph6 strings; omit to read --in / stdin")
        p.add_argument("--in", dest="input_path", default=None,
                       help="graph6 file, one graph per line (default: stdin)")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--budget-color", type=int, default=None,
                       help="node budget per coloring search")
        p.add_argument("--budget-factor", type=int, default=None,
                       help="node budget per even-factor search")
        p.add_argument("--budget-barrier", type=int, default=None,
                       help="subset budget per barrier search")
        p.add_argument("--json", dest="json_path", default=None,
                       help="write the full report as JSON to this path")
        p.add_argument("--csv", dest="csv_path", default=None,
                       help="write the summary table as CSV to this path")
        p.add_argument("--filter-n-min", type=int, default=None)
        p.add_argument("--filter-n-max", type=int, default=None)
        p.add_argument("--filter-delta-min", type=int, default=None)
        p.add_argument("--filter-delta-max", type=int, default=None)
        p.add_argument("--filter-class2", action="store_true")
        p.add_argument("--filter-critical", action="store_true")
        if name == "color":
            p.add_argument("--k", type=int, default=None,
                           help="exact search with k colors instead of the "
                                "always-succeeding Delta+1 construction")
    return parser


def spec_from_args(args: argparse.Namespace) -> JobSpec:
    kwargs = dict(
        subcommand=args.subcommand,
        graphs=tuple(args.graphs),
        input_path=args.input_path,
        jobs=args.jobs,
        k=getattr(args, "k", None),
        filter_n_min=args.filter_n_min,
        filter_n_max=args.filter_n_max,
        filter_delta_min=args.filter_delta_min,
        filter_delta_max=args.filter_delta_max,
        filter_class2=args.filter_class2,
        filter_critical=args.filter_critical,
        json_path=args.json_path,
        csv_path=args.csv_path,
    )
    for flag, fld in (("budget_color", "budget_color"),
                      ("budget_factor", "budget_factor"),
                      ("budget_barrier", "budget_barrier")):
        value = getattr(args, flag)
        if value is not None:
            kwargs[fld] = value
    return JobSpec(**kwargs)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = scaled(spec_from_args(args))
        report = run(spec)
    except CritlabError as exc:
        print(f"critlab: {exc}", file=sys.stderr)
        return 1
    if spec.json_path:
        with open(spec.json_path, "w") as fh:
            fh.write(report_json(report))
    if spec.csv_path:
        with open(spec.csv_path, "w") as fh:
            fh.write(report_csv(report))
    for r in report.records:
        bits = [r.get("graph6", "?"), r.get("verdict", "?")]
        for key in ("chi", "critical", "even_factor", "barrier_size"):
            if key in r and r[key] not in (None, ""):
                bits.append(f"{key}={r[key]}")
        if r.get("error"):
            bits.append(r["error"])
        print(" ".join(str(b) for b in bits))
    s = report.summary
    print(f"# read={s['read']} filtered={s['filtered']} ok={s['ok']} "
          f"errors={s['errors']} falsified={s['falsifications']} "
          f"budget={s['budget_exceeded']}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
