"""Kernel backend selection: numba-jitted or plain Python.

The environment variable QWDIRAC_BACKEND picks the path at import time:

    auto    use numba when importable, else plain Python (default)
    numba   require numba, fail loudly if missing
    python  plain interpreted kernels (alias: numpy)

Both paths run the identical source (the jitted functions are the plain ones
wrapped with njit, no fastmath), so results agree bitwise and the CLI output
is byte-stable across backends.  benchmarks/bench_backends.py times the two.
"""

import os

from . import _kernels

_KERNEL_NAMES = (
    "cos_series",
    "sin_series",
    "trig_grid",
    "lattice_cumint",
    "picard_sweep",
    "residual_grid",
)

ENV_VAR = "QWDIRAC_BACKEND"


class KernelSet:
    def __init__(self, name, funcs):
        self.name = name
        for k, fn in funcs.items():
            setattr(self, k, fn)


def _python_kernels():
    return KernelSet("python", {k: getattr(_kernels, k) for k in _KERNEL_NAMES})


_numba_cache = None


def _numba_kernels():
    global _numba_cache
    if _numba_cache is None:
        import numba

        wrapped = {
            k: numba.njit(cache=True)(getattr(_kernels, k)) for k in _KERNEL_NAMES
        }
        _numba_cache = KernelSet("numba", wrapped)
    return _numba_cache


def load_kernels(mode="auto"):
    """Return a KernelSet for the requested mode (see module docstring)."""
    mode = (mode or "auto").lower()
    if mode in ("python", "numpy"):
        return _python_kernels()
    if mode == "numba":
        return _numba_kernels()
    if mode == "auto":
        try:
            return _numba_kernels()
        except ImportError:
            return _python_kernels()
    raise ValueError(
        f"unknown backend {mode!r}: expected auto, numba, python or numpy"
    )


_active = load_kernels(os.environ.get(ENV_VAR, "auto"))


def kernels():
    """The currently selected kernel set."""
    return _active


def use_backend(mode):
    """Switch the active kernel set; returns the previous one."""
    global _active
    prev = _active
    _active = load_kernels(mode)
    return prev


def backend_name():
    return _active.name


def warmup():
    """Force compilation of every kernel (no-op on the python path)."""
    import numpy as np

    k = _active
    k.cos_series(0.5, 0.5, 1e-12)
    k.sin_series(0.5, 0.5, 1e-12)
    zs = np.array([0.0, 0.25, 1.5])
    k.trig_grid(zs, 0.5, 1e-12)
    pm = np.array([1.0, 0.5, 0.25])
    k.lattice_cumint(zs, pm, 0.5)
    y1 = np.ones(3)
    y2 = np.zeros(3)
    k.picard_sweep(y1, y2, 1.0, 0.0, 0.3, np.zeros(3), np.zeros(3), pm, 0.5)
    k.residual_grid(np.zeros(3), np.zeros(3), 1.0, 0.0, 0.3, np.zeros(3), np.zeros(3), pm, 0.5)
