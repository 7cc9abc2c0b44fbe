#!/usr/bin/env python3
"""Regenerate the committed graph6 fixtures under tests/fixtures/.

Exhaustive isomorph-free enumeration of small simple graphs by leveled
vertex extension: every graph on n vertices arises from a graph on n-1
vertices plus one new vertex attached to some neighbor subset, so
extending every (n-1)-vertex graph by every subset and deduplicating by
canonical form yields every isomorphism class exactly once.

The canonical form is computed by color refinement plus individualization
backtracking (minimum adjacency code over admissible orderings).  The
enumeration is validated against the classical counts of simple graphs
(1, 2, 4, 11, 34, 156, 1044, 12346, 274668 for n = 1..9) and of connected
simple graphs (1, 1, 2, 6, 21, 112, 853, 11117, 261080); any mismatch
aborts without writing files.

Outputs, one graph6 line per graph, lexicographically sorted:
  all_<n>.g6        n = 1..8   every simple graph on n vertices
  connected_<n>.g6  n = 1..9   every connected simple graph on n vertices

Run time is dominated by the n = 9 connected level (a few million
canonizations); expect on the order of 10-30 minutes of CPU.
"""

import argparse
import os
import sys
import time

KNOWN_ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346,
             9: 274668}
KNOWN_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117,
                   9: 261080}


def refine(n, adj, colors):
    """Stable color refinement: split classes by neighbor color multisets."""
    rng = range(n)
    while True:
        keys = []
        for v in rng:
            nb = [colors[u] for u in rng if adj[v] >> u & 1]
            nb.sort()
            keys.append((colors[v], nb))
        sig = sorted(rng, key=keys.__getitem__)
        new = [0] * n
        nxt = 0
        prev = None
        for v in sig:
            if keys[v] != prev:
                prev = keys[v]
                nxt += 1
            new[v] = nxt
        if new == colors:
            return colors
        colors = new


def _leaf_code(n, adj, order):
    code = 0
    for i in range(1, n):
        row = adj[order[i]]
        for j in range(i):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def canon_code(n, adj):
    """Minimum adjacency code over all orderings compatible with refinement."""
    best = [None]

    def search(colors):
        cells = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = sorted(range(n), key=lambda v: colors[v])
            code = _leaf_code(n, adj, order)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        mark = max(colors) + 1
        for v in target:
            branch = list(colors)
            branch[v] = mark
            search(refine(n, adj, branch))

    degs = [bin(a).count("1") for a in adj]
    search(refine(n, adj, degs))
    return best[0]


def code_to_graph6(n, code):
    """graph6 line for an n-vertex graph given its upper-triangle code.

    The code packs bit (i,j), j < i, in row-major order i = 1..n-1; graph6
    wants the column-major upper triangle, which is the same bit sequence.
    """
    nbits = n * (n - 1) // 2
    bits = [(code >> (nbits - 1 - t)) & 1 for t in range(nbits)]
    out = [chr(n + 63)]
    for t in range(0, nbits, 6):
        chunk = bits[t:t + 6] + [0] * (6 - len(bits[t:t + 6]))
        val = 0
        for b in chunk:
            val = val * 2 + b
        out.append(chr(val + 63))
    return "".join(out)


def components_masks(n, adj):
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        stack = [s]
        mask = 0
        while stack:
            v = stack.pop()
            if mask >> v & 1:
                continue
            mask |= 1 << v
            stack.extend(u for u in range(n) if adj[v] >> u & 1
                         and not mask >> u & 1)
        seen |= mask
        comps.append(mask)
    return comps


def extend_level(n, parents, connected_only, progress=None):
    """All canonical codes on n vertices from (n-1)-vertex parent masks."""
    out = {}
    t0 = time.time()
    for idx, padj in enumerate(parents):
        comps = components_masks(n - 1, padj)
        for sub in range(1 << (n - 1)):
            if connected_only and any(not sub & c for c in comps):
                continue
            adj = [padj[v] | ((sub >> v & 1) << (n - 1)) for v in range(n - 1)]
            adj.append(sub)
            code = canon_code(n, adj)
            if code not in out:
                out[code] = adj
        if progress and (idx + 1) % progress == 0:
            print("  n=%d: %d/%d parents, %d classes, %.0fs" %
                  (n, idx + 1, len(parents), len(out), time.time() - t0),
                  flush=True)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__),
                                                  os.pardir, "tests",
                                                  "fixtures"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    levels = {1: {0: [0]}}  # n -> {canon code -> adjacency masks}
    for n in range(2, args.max_n + 1):
        parents = list(levels[n - 1].values())
        connected_only = n == 9  # the full n=9 level is never needed
        levels[n] = extend_level(n, parents, connected_only,
                                 progress=1000 if n >= 8 else None)
        got = len(levels[n])
        want = KNOWN_CONNECTED[n] if connected_only else KNOWN_ALL[n]
        label = "connected" if connected_only else "all"
        print("n=%d: %d %s graphs (expected %d)" % (n, got, label, want),
              flush=True)
        if got != want:
            sys.exit("count mismatch at n=%d: got %d, expected %d" %
                     (n, got, want))

    for n in range(1, args.max_n + 1):
        codes = levels[n]
        rows = {code: adj for code, adj in codes.items()}
        if n <= 8:
            lines = sorted(code_to_graph6(n, c) for c in rows)
            path = os.path.join(args.out, "all_%d.g6" % n)
            with open(path, "w") as fh:
                fh.write("\n".join(lines) + "\n")
            print("wrote %s (%d graphs)" % (path, len(lines)))
        conn = [c for c, adj in rows.items()
                if len(components_masks(n, adj)) == 1]
        if len(conn) != KNOWN_CONNECTED[n]:
            sys.exit("connected count mismatch at n=%d: got %d, expected %d" %
                     (n, len(conn), KNOWN_CONNECTED[n]))
        lines = sorted(code_to_graph6(n, c) for c in conn)
        path = os.path.join(args.out, "connected_%d.g6" % n)
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print("wrote %s (%d graphs)" % (path, len(lines)))


if __name__ == "__main__":
    main()
