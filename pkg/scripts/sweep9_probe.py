"""One-off probe: full connected n<=9 criticality sweep, timed.

Writes /tmp/sweep9.json with the class-2 and k-critical populations so the
acceptance expectations can be frozen from an independent pass.
"""

import json
import sys
import time
from multiprocessing import Pool

sys.path.insert(0, "src")

from critlab import parse_graph6
from critlab.coloring import chromatic_index
from critlab.criticality import is_k_critical


def probe(line: str):
    g = parse_graph6(line)
    ci = chromatic_index(g)
    if ci.status != "determined":
        return line, "budget", None
    if ci.chi == ci.delta:
        return line, "class1", None
    rep = is_k_critical(g, fail_fast=True)
    if rep.is_k_critical is None:
        return line, "budget", None
    return line, "class2", (rep.is_k_critical, ci.delta)


def main():
    out = {"files": {}}
    for name in ("connected_7.g6", "connected_8.g6", "connected_9.g6"):
        with open(f"tests/fixtures/{name}") as fh:
            lines = [l.strip() for l in fh if l.strip()]
        t0 = time.time()
        with Pool(8) as pool:
            rows = pool.map(probe, lines, chunksize=64)
        dt = time.time() - t0
        class2 = [(l, flag) for l, kind, flag in rows if kind == "class2"]
        budget = [l for l, kind, _ in rows if kind == "budget"]
        crit = [(l, k) for l, (isc, k) in class2 if isc]
        out["files"][name] = {
            "graphs": len(lines), "seconds": round(dt, 1),
            "class2": len(class2), "budget": budget,
            "critical": sorted(crit, key=lambda t: (t[1], t[0])),
        }
        print(name, len(lines), "graphs", f"{dt:.1f}s",
              "class2:", len(class2), "critical:", len(crit),
              "budget:", len(budget), flush=True)
    with open("/tmp/sweep9.json", "w") as fh:
        json.dump(out, fh, indent=1)


if __name__ == "__main__":
    main()
