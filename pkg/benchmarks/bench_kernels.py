"""Benchmark the compiled kernel backend against the pure-python fallback.

Usage: python benchmarks/bench_kernels.py [repeats]
"""

import sys
import time

import numpy as np

from vbopt import kernels as pure

try:
    from vbopt import _speedups as compiled
except ImportError:
    compiled = None


def bench(fn, args_list, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def make_cases(n, count, rng):
    update_cases, downdate_cases = [], []
    for _ in range(count):
        A = rng.standard_normal((n, n)) + n * np.eye(n)
        A_inv = np.linalg.inv(A)
        v = rng.standard_normal(n)
        update_cases.append((A, A_inv, 0.98, 0.02, v))
        vs = rng.standard_normal((3, n))
        downdate_cases.append((A, A_inv, vs, 0.01))
    return update_cases, downdate_cases


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    rng = np.random.default_rng(0)
    count = 2000
    backends = [("pure-python", pure)]
    if compiled is not None:
        backends.append(("compiled", compiled))
    else:
        print("compiled backend not available; benchmarking fallback only")

    print(f"{count} calls per timing, best of {repeats} repeats")
    header = f"{'kernel':<22}{'n':>4}" + "".join(f"{name:>16}" for name, _ in backends)
    if compiled is not None:
        header += f"{'speedup':>10}"
    print(header)
    for n in (2, 5, 10, 20):
        update_cases, downdate_cases = make_cases(n, count, rng)
        for label, cases in (("chol_rank_one", update_cases),
                             ("constraint_downdate", downdate_cases)):
            times = [bench(getattr(mod, label), cases, repeats)
                     for _, mod in backends]
            row = f"{label:<22}{n:>4}" + "".join(f"{t * 1e3:>13.2f} ms" for t in times)
            if len(times) == 2:
                row += f"{times[0] / times[1]:>9.2f}x"
            print(row)


if __name__ == "__main__":
    main()
