#!/usr/bin/env python3
"""Print odd chromatic numbers and exact mad for the extremal families.

Covers K*_c (every edge of K_c subdivided once), the glued 5-cycles H_k,
and short cycles.  Values are computed, not looked up.
"""

import argparse
import time
from fractions import Fraction

from oddcolor.generators import cycle, hk, kstar
from oddcolor.mad import mad_exact
from oddcolor.solver import chi_odd, find_odd_coloring


def row(name, g, chi):
    mad = mad_exact(g).value if g.n else Fraction(0)
    return f"{name:<10} n={g.n:<4} m={g.m:<4} mad={str(mad):<8} {chi}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kstar-max", type=int, default=6, help="largest c for K*_c (default 6)")
    ap.add_argument("--hk-max", type=int, default=5, help="largest k for H_k (default 5)")
    ap.add_argument("--cycle-max", type=int, default=12, help="longest cycle (default 12)")
    ap.add_argument("--budget", type=int, default=None, help="solver node budget per query")
    args = ap.parse_args()

    t0 = time.perf_counter()
    for c in range(3, args.kstar_max + 1):
        g = kstar(c)
        print(row(f"kstar({c})", g, f"chi_odd={chi_odd(g, args.budget)}"))
    for k in range(1, args.hk_max + 1):
        g = hk(k)
        ok = find_odd_coloring(g, 4, args.budget).colorable
        print(row(f"hk({k})", g, f"odd-4-colorable={ok}"))
    for ell in range(3, args.cycle_max + 1):
        g = cycle(ell)
        print(row(f"C{ell}", g, f"chi_odd={chi_odd(g, args.budget)}"))
    print(f"# {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
