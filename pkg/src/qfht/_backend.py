"""Select the compiled series kernels when available.

Set ``QFHT_PURE_PYTHON=1`` to force the numpy fallback.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

_compiled: ModuleType | None
try:
    from . import _ckernels as _compiled
except ImportError:
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None

if _compiled is not None and os.environ.get("QFHT_PURE_PYTHON", "") in ("", "0"):
    impl: ModuleType = _compiled
else:
    impl = _pykernels

NAME: str = impl.NAME


def get(name: str) -> ModuleType:
    """Return the backend module called ``"cython"`` or ``"python"``."""
    if name == "python":
        return _pykernels
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def inorm_series(alpha, w, rtol=1e-17, max_terms=10000):
    return impl.inorm_series(alpha, w, rtol, max_terms)


def laguerre_kernel_sum(theta, alpha, x, y, tol, nmax, consecutive):
    return impl.laguerre_kernel_sum(theta, alpha, x, y, tol, nmax, consecutive)


def laguerre_kernel_grid(theta, alpha, xs, ys, tol, nmax, consecutive):
    return impl.laguerre_kernel_grid(theta, alpha, xs, ys, tol, nmax, consecutive)
