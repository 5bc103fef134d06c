"""Benchmark the compiled Jacobi backend against the pure-Python twin.

Times the full eigensolve of circulant adjacency matrices at a few
sizes and prints a speedup table.  Run after an editable install:

    python3 benchmarks/bench_jacobi.py
    python3 benchmarks/bench_jacobi.py --sizes 32 64 128 256 --repeats 5
"""

from __future__ import annotations

import argparse
import statistics
import time

from circenergy.jacobi import JACOBI_BACKEND, jacobi_eigenvalues
from circenergy.spectrum import CirculantSpec, build_adjacency


def time_solve(matrix, backend: str, repeats: int) -> float:
    """Median wall time of a full eigensolve, in seconds."""
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        jacobi_eigenvalues(matrix, backend=backend)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--gamma", type=int, default=3)
    args = parser.parse_args()

    if JACOBI_BACKEND != "cython":
        print("compiled backend not built; timing pure Python only")

    print(f"{'n':>5} {'python [s]':>12} {'cython [s]':>12} {'speedup':>9}")
    for n in args.sizes:
        matrix = build_adjacency(CirculantSpec(n, (1, args.gamma)))
        t_py = time_solve(matrix, "python", args.repeats)
        if JACOBI_BACKEND == "cython":
            t_cy = time_solve(matrix, "cython", args.repeats)
            print(f"{n:>5} {t_py:>12.4f} {t_cy:>12.4f} {t_py / t_cy:>8.1f}x")
        else:
            print(f"{n:>5} {t_py:>12.4f} {'-':>12} {'-':>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
