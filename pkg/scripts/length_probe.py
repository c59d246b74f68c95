#!/usr/bin/env python3
"""Probe how long an evaluation set a field supports under the k-subset
condition, comparing search strategies.

For each n from 2k upward, try to find n points whose k-subsets all avoid
e_r = 0.  Greedy is backtrack-free (cheap, may stall early); random restarts
are seeded; exhaustive proves nonexistence when it gives up, but only runs
while C(q, n) stays under its guard.

Usage:
    python scripts/length_probe.py --field 13 --k 3
    python scripts/length_probe.py --field 2,4 --k 3 --r 1 --strategies greedy,random
"""

import argparse
import time

from mdsforge.conditions import (
    ConditionSpec,
    ExhaustiveSearch,
    GreedySearch,
    RandomSearch,
    search_eval_set,
)
from mdsforge.errors import InfeasibleError
from mdsforge.field import make_field


def parse_field(text):
    parts = [int(t) for t in text.split(",")]
    return make_field(*parts) if len(parts) == 2 else make_field(parts[0])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", required=True, help="p or p,m")
    ap.add_argument("--k", type=int, required=True)
    ap.add_argument("--r", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-attempts", type=int, default=2000)
    ap.add_argument(
        "--strategies", default="greedy,random,exhaustive",
        help="comma-separated subset of greedy,random,exhaustive")
    args = ap.parse_args()

    ctx = parse_field(args.field)
    spec = ConditionSpec(k=args.k, r=args.r)
    wanted = args.strategies.split(",")
    strategies = {}
    if "greedy" in wanted:
        strategies["greedy"] = lambda: GreedySearch()
    if "random" in wanted:
        strategies["random"] = lambda: RandomSearch(seed=args.seed, max_attempts=args.max_attempts)
    if "exhaustive" in wanted:
        strategies["exhaustive"] = lambda: ExhaustiveSearch()

    print(f"field GF({ctx.p}^{ctx.m}) = GF({ctx.q}), k={args.k}, r={args.r}")
    print(f"{'n':>4} " + " ".join(f"{name:>12}" for name in strategies))

    reached = {name: None for name in strategies}
    alive = set(strategies)
    n = max(2 * args.k, args.k + 1)
    while alive and n <= ctx.q:
        cells = []
        for name in strategies:
            if name not in alive:
                cells.append(f"{'-':>12}")
                continue
            start = time.perf_counter()
            try:
                found = search_eval_set(ctx, n, spec, strategies[name]())
            except InfeasibleError:
                cells.append(f"{'guard':>12}")
                alive.discard(name)
                continue
            elapsed = time.perf_counter() - start
            if found is None:
                cells.append(f"{'none':>12}")
                alive.discard(name)
            else:
                reached[name] = n
                cells.append(f"{elapsed:>11.3f}s")
        print(f"{n:>4} " + " ".join(cells))
        n += 1

    print()
    for name, best in reached.items():
        print(f"{name}: longest set found n = {best}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
