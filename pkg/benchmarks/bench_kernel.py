#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Run after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernel.py

Also times two end-to-end pipelines (Petersen Yamada value, 8-crossing
bracket) under each backend via the SKEIN_PURE switch in a subprocess.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(SRC))

from skein import _core_py  # noqa: E402

try:
    from skein import _core_c
except ImportError:
    _core_c = None


def _random_graphs(count: int, n_lo: int, n_hi: int, m_hi: int, seed: int):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        m = rng.randint(n, m_hi)
        out.append(
            (n, tuple(tuple(sorted((rng.randrange(n), rng.randrange(n)))) for _ in range(m)))
        )
    return out


def _random_diagrams(count: int, crossings: int, seed: int):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n_arcs = 2 * crossings
        ends = list(range(2 * n_arcs))
        rng.shuffle(ends)
        xs = [tuple(ends[4 * i : 4 * i + 4]) for i in range(crossings)]
        out.append((n_arcs, xs))
    return out


def _time(fn, reps: int = 1) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels() -> None:
    graphs = _random_graphs(300, 4, 11, 16, seed=11)
    diagrams = _random_diagrams(20, 12, seed=12)

    def canon_all(mod):
        for n, edges in graphs:
            mod.canon_key(n, edges)

    def circles_all(mod):
        for n_arcs, xs in diagrams:
            mod.state_circle_counts(n_arcs, xs)

    print(f"{'kernel':<24} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, fn in (("canon_key x300", canon_all), ("circle counts 20x2^12", circles_all)):
        t_pure = _time(lambda: fn(_core_py), reps=3)
        if _core_c is None:
            print(f"{label:<24} {t_pure:>9.3f}s {'n/a':>10} {'-':>8}")
            continue
        t_fast = _time(lambda: fn(_core_c), reps=3)
        print(f"{label:<24} {t_pure:>9.3f}s {t_fast:>9.3f}s {t_pure / t_fast:>7.1f}x")

    # sanity: identical outputs
    if _core_c is not None:
        for n, edges in graphs[:50]:
            assert _core_py.canon_key(n, edges) == _core_c.canon_key(n, edges)
        for n_arcs, xs in diagrams[:3]:
            assert _core_py.state_circle_counts(n_arcs, xs) == _core_c.state_circle_counts(
                n_arcs, xs
            )
        print("outputs agree between backends")


def bench_pipeline() -> None:
    script = (
        "import time, skein.core\n"
        "from skein import fixtures\n"
        "from skein.yamada import yamada, clear_memo\n"
        "from skein.tl import bracket\n"
        "from skein.diagrams import parse_diagram\n"
        "pet = fixtures.load_diagram('petersen_diagram')\n"
        "t0 = time.perf_counter(); yamada(pet, memo={}); t1 = time.perf_counter()\n"
        "code = '\\n'.join(['X 3 4 2 1', 'X 5 6 4 3', 'X 7 8 6 5', 'X 9 10 8 7',\n"
        "                   'X 11 12 10 9', 'X 13 14 12 11', 'X 15 16 14 13', 'X 1 2 16 15'])\n"
        "g = parse_diagram(code)\n"
        "t2 = time.perf_counter(); bracket(g); t3 = time.perf_counter()\n"
        "print(f'{skein.core.backend_name()}: petersen yamada {t1-t0:.3f}s, "
        "8-crossing bracket {t3-t2:.3f}s')\n"
    )
    for env_extra in ({}, {"SKEIN_PURE": "1"}):
        import os

        env = dict(os.environ, PYTHONPATH=str(SRC), **env_extra)
        subprocess.run([sys.executable, "-c", script], env=env, check=True)


if __name__ == "__main__":
    bench_kernels()
    sys.stdout.flush()
    bench_pipeline()
