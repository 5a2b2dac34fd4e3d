"""Time the compiled kernels against their pure-Python bodies.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row runs one kernel on a fixed input through the numba dispatcher and
through ``kernel.py_func`` and checks that both return the same answer.
Under ORDEREDPATHS_DISABLE_NUMBA=1 both columns run Python.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from orderedpaths import backend_name
from orderedpaths.core import OrderedColoring, PathSpec
from orderedpaths.deletion import deletion_kernel
from orderedpaths.ramsey import _coloring_classes, ramsey_upper_bound_ap, ap_config, ap_steps
from orderedpaths.search import copy_index, ramsey_dfs_kernel, turan_bnb_kernel


def _best(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def deletion_case(n=12, seed=0):
    N = ramsey_upper_bound_ap(n)
    c = OrderedColoring.random(N, np.random.default_rng(seed))
    cfg = ap_config(n, N)
    steps = ap_steps(n, N, cfg.a)
    alive = (_coloring_classes(c) & cfg.scope()[None]).astype(np.int8)
    lo = np.array([s.lo - 1 for s in steps], dtype=np.int64)
    hi = np.array([min(s.hi, N) - 1 for s in steps], dtype=np.int64)
    right = np.array([s.right_end for s in steps])
    left = np.array([s.leftmost for s in steps])
    return f"deletion AP_{n} on K_{N}", lambda k: k(alive.copy(), lo, hi, right, left), lambda r: int(r[0].sum())


def ramsey_case(n=4, N=7):
    idx = copy_index(PathSpec("ap", n), N)
    empty = np.zeros(0, dtype=np.int64)
    return (f"ramsey DFS AP_{n} on K_{N}",
            lambda k: k(idx.n_positions, idx.start, idx.masks, empty, 10**9),
            lambda r: (int(r[0]), int(r[1])))


def turan_case(n=5, N=7):
    idx = copy_index(PathSpec("ap", n), N)
    m = idx.masks[:, 0]
    return (f"turan B&B AP_{n} on {N} vertices",
            lambda k: k(idx.n_positions, idx.start, m, m, 10**9),
            lambda r: (int(r[0]), int(r[2])))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"backend: {backend_name()}")
    print(f"{'case':40s} {'compiled s':>12s} {'python s':>12s} {'speedup':>9s}")
    cases = [(deletion_kernel, deletion_case()), (ramsey_dfs_kernel, ramsey_case()),
             (turan_bnb_kernel, turan_case())]
    for kern, (name, run, key) in cases:
        run(kern)  # compile outside the timing
        t_fast, r_fast = _best(lambda: run(kern), args.repeat)
        t_slow, r_slow = _best(lambda: run(kern.py_func), 1)
        assert key(r_fast) == key(r_slow), f"{name}: backends disagree"
        print(f"{name:40s} {t_fast:12.2e} {t_slow:12.2e} {t_slow / max(t_fast, 1e-9):9.1f}x")


if __name__ == "__main__":
    main()
