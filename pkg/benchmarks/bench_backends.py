#!/usr/bin/env python3
"""Time the numba-jitted kernels against the plain-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_backends.py

The table reports per-call times for the series kernels, the lattice sweep,
a full Picard solve and a full spectrum run, on both backends.  The first
numba call compiles (cached to disk afterwards); compilation is excluded by
warmup.  Both paths execute the identical source, so results agree bitwise;
the benchmark asserts that too.
"""

import math
import time

import numpy as np

from qwdirac import backend
from qwdirac.hahn import HahnParams
from qwdirac.solver import Potentials, picard_solve
from qwdirac.spectrum import example_problem, find_eigenvalues


def timeit(fn, min_time=0.2):
    fn()  # warm (and jit-compile on the numba path)
    n = 1
    while True:
        t0 = time.perf_counter()
        for _ in range(n):
            fn()
        dt = time.perf_counter() - t0
        if dt >= min_time:
            return dt / n
        n = max(n * 2, int(n * min_time / max(dt, 1e-9)))


def bench(mode):
    backend.use_backend(mode)
    k = backend.kernels()
    p = HahnParams(0.5, 0.5)
    pot = Potentials.polynomials([0.3, -0.2, 0.05], [0.6, 0.1])
    zs = 1.7 * (1 - p.q) * p.q ** np.arange(50) * 4.0
    pm = p.q ** np.arange(50) * 4.0
    y1 = np.ones(50)
    y2 = np.zeros(50)
    rv = np.full(50, 0.3)
    ps = np.full(50, -0.2)

    out = {}
    out["cos_series(z=24)"] = timeit(lambda: k.cos_series(24.0, 0.5, 1e-12))
    out["trig_grid(50 pts)"] = timeit(lambda: k.trig_grid(zs, 0.5, 1e-12))
    out["picard_sweep(50 pts)"] = timeit(
        lambda: k.picard_sweep(y1.copy(), y2.copy(), 1.0, 0.0, 1.7, rv, ps, pm, 0.5))
    out["picard_solve(poly pot)"] = timeit(
        lambda: picard_solve(pot, 1.0, -0.5, 1.7, math.pi, p))
    bc, pot0 = example_problem("3.2", p)
    out["find_eigenvalues(n=4)"] = timeit(
        lambda: find_eigenvalues(4, bc, pot0, p, compute_diagnostics=False),
        min_time=0.5)
    return out


def main():
    res_py = bench("python")
    res_nb = bench("numba")

    # bitwise agreement of a representative kernel call
    backend.use_backend("python")
    a = backend.kernels().cos_series(24.0, 0.5, 1e-12)
    backend.use_backend("numba")
    b = backend.kernels().cos_series(24.0, 0.5, 1e-12)
    assert a == b, "backends disagree"

    width = max(len(k) for k in res_py)
    print(f"{'kernel':<{width}}  {'python':>12}  {'numba':>12}  {'speedup':>8}")
    for key in res_py:
        tp, tn = res_py[key], res_nb[key]
        print(f"{key:<{width}}  {tp * 1e6:>10.2f}us  {tn * 1e6:>10.2f}us  "
              f"{tp / tn:>7.1f}x")


if __name__ == "__main__":
    main()
