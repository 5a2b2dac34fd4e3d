"""Selects numba-compiled kernels or their plain Python/numpy bodies.

Set ``ORDEREDPATHS_DISABLE_NUMBA=1`` before import to run every kernel
uncompiled.  Either way each kernel exposes ``.py_func`` so tests and the
benchmark can call the uncompiled body side by side with the compiled one.
"""
import os

_FLAG = "ORDEREDPATHS_DISABLE_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    numba = None

JIT_DISABLED = os.environ.get(_FLAG, "0").strip().lower() in ("1", "true", "yes", "on")
JIT_ENABLED = numba is not None and not JIT_DISABLED


def kernel(fn):
    """Compile ``fn`` with ``njit(nogil=True, cache=True)`` unless disabled."""
    if JIT_ENABLED:
        return numba.njit(cache=True, nogil=True)(fn)
    fn.py_func = fn
    return fn


def backend_name():
    return "numba" if JIT_ENABLED else "python"
