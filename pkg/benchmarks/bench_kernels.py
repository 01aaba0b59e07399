"""Benchmark the statistic kernels: compiled extension vs pure Python.

Times the two hot functions behind every exhaustive census — per-permutation
``stat_tuple`` and whole-symmetric-group ``census_stats`` — once per backend,
and prints a comparison table.  The two backends are also cross-checked on a
small census before timing, so a broken extension fails loudly rather than
posting a fast wrong number.

    python benchmarks/bench_kernels.py --n 8 --batch 20000
"""

from __future__ import annotations

import argparse
import random
import time

from motzkinperm._kernels import BACKEND, pure
from motzkinperm.perms import random_permutation

try:
    from motzkinperm._kernels import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(
        description="compare the compiled and pure-Python statistic kernels"
    )
    parser.add_argument("--n", type=int, default=8, help="census size (default 8)")
    parser.add_argument(
        "--batch", type=int, default=20000, help="permutations per stat_tuple run"
    )
    parser.add_argument(
        "--perm-size", type=int, default=40, help="size of the random permutations"
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3, help="keep the best of k runs")
    args = parser.parse_args()

    backends = [("pure", pure)]
    if _speedups is not None:
        check = min(args.n, 6)
        if _speedups.census_stats(check) != pure.census_stats(check):
            raise SystemExit("backend disagreement on census_stats — not timing a wrong answer")
        backends.append(("compiled", _speedups))

    rng = random.Random(args.seed)
    batch = [random_permutation(args.perm_size, rng) for _ in range(args.batch)]

    jobs = [
        (
            f"stat_tuple x{args.batch} (size {args.perm_size})",
            lambda mod: lambda: [mod.stat_tuple(v) for v in batch],
        ),
        (
            f"census_stats(n={args.n})",
            lambda mod: lambda: mod.census_stats(args.n),
        ),
    ]

    print(f"{'kernel':<34} {'backend':<9} {'seconds':>10} {'speedup':>9}")
    for label, make in jobs:
        baseline = None
        for name, mod in backends:
            seconds = best_of(make(mod), args.repeat)
            if baseline is None:
                baseline = seconds
                speedup = ""
            else:
                speedup = f"{baseline / seconds:.1f}x"
            print(f"{label:<34} {name:<9} {seconds:>10.4f} {speedup:>9}")

    if _speedups is None:
        print("\ncompiled extension not built; only the pure backend was timed")
    print(f"default backend in this environment: {BACKEND}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
