"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints per-kernel timings for both backends and an end-to-end corpus run
(exhaustive 6-vertex graphs) with each backend in a fresh interpreter.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit
from itertools import combinations

from flagfaces import _pykernels

try:
    from flagfaces import _ckernels
except ImportError:
    _ckernels = None


def random_adj(rng, m, p):
    adj = [0] * m
    for u, v in combinations(range(m), 2):
        if rng.random() < p:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def cases():
    rng = random.Random(0)
    series = [rng.randint(-50, 50) for _ in range(17)]
    unit = [1] + series[1:]
    return {
        "count_cliques m=6 p=.5": ("count_cliques", (random_adj(rng, 6, 0.5), 6), 2000),
        "count_cliques m=30 p=.5": ("count_cliques", (random_adj(rng, 30, 0.5), 30), 20),
        "count_cliques m=60 p=.3": ("count_cliques", (random_adj(rng, 60, 0.3), 60), 20),
        "series_mul order 16": ("series_mul", (series, series, 16), 2000),
        "series_inverse order 16": ("series_inverse", (unit, 16), 2000),
        "series_pow e=-7 order 16": ("series_pow", (unit, -7, 16), 2000),
        "power_sums 16": ("power_sums", (series, 16), 2000),
    }


def bench(module, name, args, number, repeat):
    fn = getattr(module, name)
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def corpus_time(pure):
    env = dict(os.environ)
    if pure:
        env["FLAGFACES_PURE_PYTHON"] = "1"
    code = (
        "import time; from flagfaces.harness import CorpusSpec, run_corpus;"
        "from flagfaces.kernels import BACKEND;"
        "r = run_corpus(CorpusSpec('exhaustive', 6), 1);"
        "print(BACKEND, r.total, r.ok, f'{r.elapsed:.2f}')"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return out.stdout.split()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-corpus", action="store_true")
    args = ap.parse_args()

    if _ckernels is None:
        print("compiled kernels not built; only the pure-Python backend is available")
    print(f"{'kernel':<28}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for label, (name, fargs, number) in cases().items():
        tp = bench(_pykernels, name, fargs, number, args.repeat) * 1e6
        if _ckernels is not None:
            tc = bench(_ckernels, name, fargs, number, args.repeat) * 1e6
            print(f"{label:<28}{tp:>14.2f}{tc:>14.2f}{tp / tc:>9.1f}x")
        else:
            print(f"{label:<28}{tp:>14.2f}{'-':>14}{'-':>10}")

    if not args.skip_corpus:
        print("\nexhaustive 6-vertex corpus (32768 graphs, N <= 10), one worker:")
        for pure in (True, False):
            backend, total, ok, secs = corpus_time(pure)
            print(f"  {backend:<8} total={total} ok={ok} {secs}s")


if __name__ == "__main__":
    main()
