#!/usr/bin/env python3
"""Run the discharging audits on a small corpus and print one summary line each.

With no arguments the built-in corpus is used; otherwise each argument is
an edge-list file, audited with sec3 and sec5 (sec4 needs an embedding).
"""

import argparse
from pathlib import Path

from oddcolor.discharging import audit_sec3, audit_sec4, audit_sec5, named_embedding
from oddcolor.generators import named, subdivide, random_regular
from oddcolor.graph import girth, parse_graph

PLANE = [("cycle", 5), ("cycle", 6), ("cycle", 9), ("hk", 1), ("hk", 3), ("path", 6), ("star", 4), ("dodecahedron", None)]
ABSTRACT = [("kstar", 7), ("kstar", 8), ("complete", 4), ("petersen", None), ("hk", 2)]


def summary(tag, rep):
    low = ",".join(map(str, rep.deficient)) or "-"
    thr = "" if rep.threshold is None else f" threshold={rep.threshold} below={low}"
    return f"{tag:<28} initial={rep.total_initial} final={rep.total_final}{thr}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("graphs", nargs="*", help="edge-list files (default: built-in corpus)")
    ap.add_argument("--colors", "-c", type=int, default=7, help="palette size for sec3 (default 7)")
    args = ap.parse_args()

    if args.graphs:
        for path in args.graphs:
            g = parse_graph(Path(path).read_text())
            print(summary(f"sec3 {path}", audit_sec3(g, args.colors)))
            print(summary(f"sec5 {path}", audit_sec5(g)))
        return

    for name, p in PLANE:
        g = named(name, p)
        tag = name if p is None else f"{name}({p})"
        gi = girth(g)
        if gi is None or gi >= 5:
            print(summary(f"sec4 {tag}", audit_sec4(g, named_embedding(name, p))))
        print(summary(f"sec5 {tag}", audit_sec5(g)))
    for name, p in ABSTRACT:
        g = named(name, p)
        tag = name if p is None else f"{name}({p})"
        print(summary(f"sec3 {tag}", audit_sec3(g, args.colors)))
        print(summary(f"sec5 {tag}", audit_sec5(g)))
    for seed in range(3):
        g = subdivide(random_regular(10, args.colors, seed))
        print(summary(f"sec3 sub-regular seed {seed}", audit_sec3(g, args.colors)))


if __name__ == "__main__":
    main()
