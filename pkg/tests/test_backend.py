"""The compiled and pure-Python series kernels must agree."""
import numpy as np
import pytest

from qfht import _backend

python = _backend.get("python")
try:
    cython = _backend.get("cython")
except ImportError:
    cython = None

needs_compiled = pytest.mark.skipif(cython is None, reason="compiled kernels not built")


def test_selection():
    assert _backend.NAME in ("cython", "python")
    with pytest.raises(ValueError):
        _backend.get("fortran")


@needs_compiled
def test_inorm_series_parity(rng):
    w = rng.standard_normal(200) * 50 + 1j * rng.standard_normal(200) * 50
    w[0] = 0.0
    w[1] = 1e5  # forces rescaling
    for alpha in (0.5, 2.0, 7.5):
        m_py, s_py, n_py = python.inorm_series(alpha, w, 1e-17, 10000)
        m_cy, s_cy, n_cy = cython.inorm_series(alpha, w, 1e-17, 10000)
        assert np.array_equal(n_py, n_cy)
        # round-off differs in summation order; measure it against the sum of
        # absolute terms, which is the series at |w|
        m_abs, s_abs, _ = python.inorm_series(alpha, np.abs(w).astype(complex), 1e-17, 10000)
        gap = np.abs(m_py * np.exp(s_py - s_abs) - m_cy * np.exp(s_cy - s_abs))
        assert np.max(gap / np.abs(m_abs)) < 1e-14


@needs_compiled
def test_kernel_sum_parity():
    for theta, x, y in [(0.5 + 0.3j, 1.0, 2.0), (-0.9, 0.1, 10.0), (0.99j, 5.0, 5.0)]:
        a = python.laguerre_kernel_sum(theta, 1.5, x, y, 1e-15, 2000, 5)
        b = cython.laguerre_kernel_sum(theta, 1.5, x, y, 1e-15, 2000, 5)
        assert a[2:] == b[2:]
        assert abs(a[0] - b[0]) <= 1e-13 * a[1]


@needs_compiled
def test_kernel_grid_parity(rng):
    xs, ys = rng.random(30) * 10, rng.random(30) * 10
    a = python.laguerre_kernel_grid(0.6 - 0.2j, 0.5, xs, ys, 1e-15, 2000, 5)
    b = cython.laguerre_kernel_grid(0.6 - 0.2j, 0.5, xs, ys, 1e-15, 2000, 5)
    assert np.allclose(a[0], b[0], rtol=1e-13, atol=0)
    assert np.array_equal(a[2], b[2]) and np.array_equal(a[3], b[3])


def test_nonconvergence_is_flagged():
    total, _, nterms, ok = python.laguerre_kernel_sum(0.999, 1.0, 1.0, 1.0, 1e-15, 10, 5)
    assert not ok and nterms == 11
    _, _, n = python.inorm_series(1.0, np.array([1e6 + 0j]), 1e-17, 5)
    assert n[0] == 6


def test_env_forces_pure_python():
    import os
    import subprocess
    import sys

    code = (
        "import qfht; from qfht.kernel import r_series; "
        "print(qfht.BACKEND, repr(r_series(0.7, 2.0, 1.0, 3.0).w))"
    )
    env = dict(os.environ, QFHT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    name, value = out.stdout.split()
    assert name == "python"
    assert abs(float(value) - 0.2304284369196776011907) < 1e-14
