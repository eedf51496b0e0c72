import os
import subprocess
import sys

import numpy as np
import pytest

from qwdirac import backend


def _have_numba():
    try:
        import numba  # noqa: F401
        return True
    except ImportError:
        return False


needs_numba = pytest.mark.skipif(not _have_numba(), reason="numba missing")


@needs_numba
def test_backends_agree_bitwise():
    py = backend.load_kernels("python")
    nb = backend.load_kernels("numba")
    rng = np.random.default_rng(11)
    for _ in range(100):
        z = rng.uniform(-40, 40)
        q = rng.uniform(0.15, 0.85)
        tol = 10.0 ** rng.uniform(-13, -7)
        assert py.cos_series(z, q, tol) == nb.cos_series(z, q, tol)
        assert py.sin_series(z, q, tol) == nb.sin_series(z, q, tol)
    for _ in range(20):
        m = int(rng.integers(5, 60))
        q = rng.uniform(0.2, 0.8)
        pm = q ** np.arange(m) * 2.0
        f = rng.normal(size=m)
        assert np.array_equal(py.lattice_cumint(f, pm, q),
                              nb.lattice_cumint(f, pm, q))
        y1, y2 = rng.normal(size=m), rng.normal(size=m)
        y1b, y2b = y1.copy(), y2.copy()
        rv, ps = rng.normal(size=m) * 0.2, rng.normal(size=m) * 0.2
        oa = py.picard_sweep(y1, y2, 1.0, -0.5, 1.3, rv, ps, pm, q)
        ob = nb.picard_sweep(y1b, y2b, 1.0, -0.5, 1.3, rv, ps, pm, q)
        assert np.array_equal(oa[0], ob[0]) and np.array_equal(oa[1], ob[1])
        assert oa[2] == ob[2] and oa[3] == ob[3]
        ra = py.residual_grid(oa[0], oa[1], 1.0, -0.5, 1.3, rv, ps, pm, q)
        rb = nb.residual_grid(ob[0], ob[1], 1.0, -0.5, 1.3, rv, ps, pm, q)
        assert np.array_equal(ra[0], rb[0]) and np.array_equal(ra[1], rb[1])


def test_use_backend_switch():
    before = backend.backend_name()
    try:
        backend.use_backend("python")
        assert backend.backend_name() == "python"
        v = backend.kernels().cos_series(1.5, 0.5, 1e-12)[0]
        assert isinstance(v, float)
    finally:
        backend.use_backend(before)


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        backend.load_kernels("fortran")


def test_env_flag_selects_python_backend():
    env = dict(os.environ, QWDIRAC_BACKEND="python")
    code = ("import qwdirac.backend as b; "
            "print(b.backend_name())")
    got = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert got.stdout.strip() == "python"


def test_cli_output_identical_across_backends():
    argv = ["-m", "qwdirac.cli", "spectrum", "--example", "3.2",
            "--q", "0.5", "--omega", "0.5", "--n-max", "3"]
    outs = []
    for mode in ("python", "auto"):
        env = dict(os.environ, QWDIRAC_BACKEND=mode)
        got = subprocess.run([sys.executable] + argv, env=env,
                             capture_output=True, text=True)
        assert got.returncode == 0
        outs.append(got.stdout)
    assert outs[0] == outs[1]
