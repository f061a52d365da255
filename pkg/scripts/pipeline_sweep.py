#!/usr/bin/env python3
"""Run a constructive pipeline over seeded random inputs and tally the outcome.

Every coloring is re-verified.  The tally lists how often each reduction
kind fired and how many runs needed the exact-solver fallback.
"""

import argparse
import collections
import sys
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction

from oddcolor.coloring import is_odd_coloring
from oddcolor.generators import GenerationExhausted, random_regular, random_sparse, subdivide
from oddcolor.reductions import pipeline_sparse, pipeline_sparse4


@dataclass(frozen=True)
class SweepConfig:
    family: str = "sparse4"
    count: int = 200
    start: int = 0
    n_min: int = 5
    n_max: int = 30
    colors: int = 7


def inputs(args: SweepConfig):
    for seed in range(args.start, args.start + args.count):
        n = args.n_min + seed % (args.n_max - args.n_min + 1)
        if args.family == "sparse4":
            try:
                yield seed, random_sparse(n, Fraction(22, 9), forbid_induced_c5=True, seed=seed)
            except GenerationExhausted:
                continue
        else:
            if (n * args.colors) % 2 or n <= args.colors + 1:
                continue
            yield seed, subdivide(random_regular(n, args.colors, seed))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("family", choices=["sparse4", "sparse"], help="sparse4: 4 colors; sparse: subdivided regular, c colors")
    ap.add_argument("--count", type=int, default=200, help="number of seeds (default 200)")
    ap.add_argument("--start", type=int, default=0, help="first seed (default 0)")
    ap.add_argument("--n-min", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--colors", "-c", type=int, default=7, help="palette for the sparse family (default 7)")
    args = SweepConfig(**vars(ap.parse_args()))

    kinds = collections.Counter()
    runs = fallbacks = invalid = 0
    t0 = time.perf_counter()
    for seed, g in inputs(args):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            res = pipeline_sparse4(g) if args.family == "sparse4" else pipeline_sparse(g, args.colors)
        runs += 1
        fallbacks += res.used_fallback
        kinds.update(s.kind for s in res.trace.steps)
        if res.coloring is None or not is_odd_coloring(g, res.coloring):
            invalid += 1
            print(f"seed {seed}: no verified coloring (base_case {res.trace.base_case})")
    print(f"runs {runs}  fallbacks {fallbacks}  unverified {invalid}  time {time.perf_counter() - t0:.2f}s")
    for kind, n in sorted(kinds.items()):
        print(f"  {kind:<12} {n}")
    sys.exit(1 if invalid or fallbacks else 0)


if __name__ == "__main__":
    main()
