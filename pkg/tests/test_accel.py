import os
import subprocess
import sys

import numpy as np
import pytest

from orderedpaths._accel import JIT_ENABLED, kernel
from orderedpaths.core import OrderedColoring, PathSpec
from orderedpaths.deletion import deletion_kernel
from orderedpaths.ramsey import _coloring_classes, ramsey_upper_bound_ap, ap_config, ap_steps
from orderedpaths.search import copy_index, ramsey_dfs_kernel, turan_bnb_kernel


def test_every_kernel_exposes_python_body():
    for k in (deletion_kernel, ramsey_dfs_kernel, turan_bnb_kernel):
        assert callable(k.py_func)


@pytest.mark.parametrize("n", [3, 6, 9])
def test_deletion_kernel_backends_agree(n, rng):
    N = ramsey_upper_bound_ap(n) + 2
    cfg = ap_config(n, N)
    steps = ap_steps(n, N, cfg.a)
    lo = np.array([s.lo - 1 for s in steps], dtype=np.int64)
    hi = np.array([min(s.hi, N) - 1 for s in steps], dtype=np.int64)
    right = np.array([s.right_end for s in steps])
    left = np.array([s.leftmost for s in steps])
    for _ in range(5):
        alive = (_coloring_classes(OrderedColoring.random(N, rng)) & cfg.scope()[None]).astype(np.int8)
        a = deletion_kernel(alive.copy(), lo, hi, right, left)
        b = deletion_kernel.py_func(alive.copy(), lo, hi, right, left)
        assert all(np.array_equal(x, y) for x, y in zip(a, b))


@pytest.mark.parametrize("n, N", [(3, 4), (4, 6), (4, 7)])
def test_search_kernels_backends_agree(n, N):
    idx = copy_index(PathSpec("ap", n), N)
    empty = np.zeros(0, dtype=np.int64)
    a = ramsey_dfs_kernel(idx.n_positions, idx.start, idx.masks, empty, 10**7)
    b = ramsey_dfs_kernel.py_func(idx.n_positions, idx.start, idx.masks, empty, 10**7)
    assert (int(a[0]), int(a[1])) == (int(b[0]), int(b[1])) and np.array_equal(a[2], b[2])
    m = idx.masks[:, 0]
    ta = turan_bnb_kernel(idx.n_positions, idx.start, m, m, 10**7)
    tb = turan_bnb_kernel.py_func(idx.n_positions, idx.start, m, m, 10**7)
    assert [int(x) for x in ta] == [int(x) for x in tb]


def test_disabled_flag_returns_plain_function():
    def f(x):
        return x + 1
    k = kernel(f)
    assert k.py_func(1) == 2 and k(1) == 2
    assert JIT_ENABLED == (os.environ.get("ORDEREDPATHS_DISABLE_NUMBA", "0") not in ("1", "true", "yes", "on"))


def test_pure_python_mode_end_to_end():
    code = (
        "import numpy as np\n"
        "from orderedpaths import backend_name, find_mono_ap, compute_ramsey_exact, PathSpec, OrderedColoring\n"
        "from orderedpaths import search_turan_max\n"
        "assert backend_name() == 'python'\n"
        "c = OrderedColoring.random(17, np.random.default_rng(1))\n"
        "assert find_mono_ap(c, 8)[0] is not None\n"
        "assert compute_ramsey_exact(PathSpec('ap', 4)).value == 7\n"
        "from orderedpaths import turan_number_ap\n"
        "assert search_turan_max(PathSpec('ap', 4), 7).max_edges == turan_number_ap(7, 4)\n"
    )
    env = dict(os.environ, ORDEREDPATHS_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, timeout=600)
    assert out.returncode == 0, out.stderr
