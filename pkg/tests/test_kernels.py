"""The compiled statistic kernels must agree with the pure-Python reference."""

from __future__ import annotations

import math
import os
import subprocess
import sys

from motzkinperm._kernels import BACKEND, census_stats, pure, stat_tuple

from conftest import all_perms


def naive_stat_tuple(values):
    """Statistics computed a second way, straight from the definitions."""
    n = len(values)
    fixed = sum(1 for i, v in enumerate(values, 1) if v == i)
    exc = sum(1 for i, v in enumerate(values, 1) if v > i)
    dexc = sum(1 for i, v in enumerate(values, 1) if i < v < values[v - 1])
    seen = [False] * n
    cyc = 0
    for start in range(n):
        if not seen[start]:
            cyc += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = values[j] - 1
    inv = sum(
        1 for a in range(n) for b in range(a + 1, n) if values[a] > values[b]
    )
    return (fixed, exc, dexc, cyc, inv)


def test_pure_matches_definitions_exhaustively():
    for n in range(7):
        for perm in all_perms(n):
            assert pure.stat_tuple(perm) == naive_stat_tuple(perm)


def test_active_backend_matches_pure(rng):
    for n in range(8):
        for perm in all_perms(min(n, 5)):
            assert stat_tuple(perm) == pure.stat_tuple(perm)
    for n in (8, 20, 63, 64, 65, 90):
        for _ in range(20):
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            perm = tuple(perm)
            assert stat_tuple(perm) == pure.stat_tuple(perm)


def test_census_matches_pure_and_sums_to_factorial():
    for n in range(7):
        table = census_stats(n)
        assert table == pure.census_stats(n)
        assert sum(table.values()) == math.factorial(n)


def test_census_agrees_with_per_perm_tally():
    for n in range(7):
        tally: dict[tuple[int, ...], int] = {}
        for perm in all_perms(n):
            key = pure.stat_tuple(perm)
            tally[key] = tally.get(key, 0) + 1
        assert census_stats(n) == tally


def test_backend_name_is_reported():
    assert BACKEND in ("compiled", "pure")


def test_env_var_forces_pure_backend():
    code = (
        "from motzkinperm._kernels import BACKEND, census_stats\n"
        "assert BACKEND == 'pure', BACKEND\n"
        "assert sum(census_stats(5).values()) == 120\n"
    )
    env = dict(os.environ, MOTZKINPERM_PURE="1")
    proc = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
