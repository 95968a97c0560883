"""Special functions used by the kernels.

All Bessel evaluations go through the normalized entire function

    inorm(alpha, w) = sum_k w**k / (k! Gamma(alpha + k + 1)),

so that ``I_alpha(xi) = (xi/2)**alpha * inorm(alpha, xi**2/4)``.  Because
``inorm`` is a power series in ``w`` it has no branch cut, which is what lets
the fractional kernel be evaluated without choosing a square root of theta.
"""
from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import special as sp

from . import _backend
from .errors import ConvergenceError, DomainError
from .quaternion import Quaternion, from_slice, slice_unit, to_slice

__all__ = [
    "ln_gamma",
    "laguerre",
    "bessel_i_norm",
    "inorm_complex",
    "log_inorm",
    "modified_bessel_i",
    "bessel_j",
    "SERIES_RTOL",
    "SERIES_MAX_TERMS",
    "BESSEL_J_MAX_ARG",
]

SERIES_RTOL = 1e-17
SERIES_MAX_TERMS = 10_000
BESSEL_J_MAX_ARG = 30.0

# log of the tolerated cancellation factor before log_inorm leaves the series
_MAX_SERIES_LOSS = math.log(1e3)
_MAX_SERIES_ABS = 1e4


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"ln_gamma needs x > 0, got {x}")
    return math.lgamma(x)


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial ``L_n^(alpha)(x)`` by forward recurrence.

    ``x`` may be a scalar or an array.
    """
    if n < 0:
        raise DomainError("laguerre degree must be >= 0")
    x = np.asarray(x, dtype=float)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    for k in range(n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur if cur.ndim else float(cur)


def inorm_complex(alpha: float, w) -> np.ndarray:
    """Series value of ``inorm`` for complex ``w`` (array or scalar).

    Raises :class:`ConvergenceError` when the term cap is hit.  Values beyond
    the double range come back as ``inf``.
    """
    mant, scale, nterms = _backend.inorm_series(alpha, np.atleast_1d(w), SERIES_RTOL, SERIES_MAX_TERMS)
    if np.any(nterms > SERIES_MAX_TERMS):
        raise ConvergenceError(f"inorm series did not converge in {SERIES_MAX_TERMS} terms")
    with np.errstate(over="ignore", invalid="ignore"):
        out = mant * np.exp(scale)
    return out.reshape(np.shape(w))


def bessel_i_norm(alpha: float, w: Quaternion) -> Quaternion:
    """``inorm(alpha, w)`` for a quaternion ``w``, evaluated in its own slice."""
    if not alpha > 0:
        raise DomainError("alpha must be > 0")
    unit = slice_unit(w)
    value = complex(inorm_complex(alpha, np.array([to_slice(w, unit)]))[0])
    return from_slice(value, unit)


def log_inorm(alpha: float, w) -> np.ndarray:
    """Complex logarithm of ``inorm(alpha, w)``, vectorized and overflow-free.

    Small or mildly oscillatory arguments are summed directly.  Where the
    power series would cancel catastrophically (``w`` far from the positive
    real axis and large) the value is taken from the exponentially scaled
    complex Bessel function: ``inorm(w) = z**-alpha I_alpha(2z)`` with
    ``z = sqrt(w)``, which is even in ``z`` so the root's branch is irrelevant.
    """
    w = np.asarray(w, dtype=complex)
    flat = w.ravel()
    out = np.empty(flat.shape, dtype=complex)
    r = np.abs(flat)
    half_arg = 0.5 * np.angle(flat)
    loss = 2.0 * np.sqrt(r) * (1.0 - np.cos(half_arg))
    use_series = (r <= _MAX_SERIES_ABS) & (loss <= _MAX_SERIES_LOSS)
    if use_series.any():
        mant, scale, nterms = _backend.inorm_series(alpha, flat[use_series], SERIES_RTOL, SERIES_MAX_TERMS)
        if np.any(nterms > SERIES_MAX_TERMS):
            raise ConvergenceError("inorm series did not converge")
        with np.errstate(divide="ignore"):
            out[use_series] = np.log(mant) + scale
    rest = ~use_series
    if rest.any():
        z = np.sqrt(flat[rest])
        with np.errstate(divide="ignore"):
            out[rest] = -alpha * np.log(z) + np.log(sp.ive(alpha, 2.0 * z)) + 2.0 * z.real
    return out.reshape(w.shape)


def modified_bessel_i(alpha: float, x: float) -> float:
    """``I_alpha(x)`` for real ``x >= 0`` via the normalized series."""
    if x < 0:
        raise DomainError("modified_bessel_i needs x >= 0")
    core = complex(inorm_complex(alpha, np.array([x * x / 4.0]))[0]).real
    return (x / 2.0) ** alpha * core


def bessel_j(alpha: float, x):
    """Bessel function ``J_alpha(x)`` from the alternating series.

    ``x`` is real and non-negative, or complex (read as a point of the slice
    ``C_i``); the principal branch of ``(x/2)**alpha`` is used.  The series
    loses about ``|x| / ln 10`` digits to cancellation, so ``|x|`` is capped at
    :data:`BESSEL_J_MAX_ARG` (``30``, roughly 1e-3 absolute accuracy at the
    cap and 1e-12 below ``|x| = 10``).
    """
    if isinstance(x, complex):
        z = x
    else:
        if x < 0:
            raise DomainError("bessel_j needs x >= 0 for real arguments")
        z = complex(x)
    if abs(z) > BESSEL_J_MAX_ARG:
        raise ConvergenceError(
            f"|x| = {abs(z):g} exceeds the stable range of the series ({BESSEL_J_MAX_ARG:g})"
        )
    core = complex(inorm_complex(alpha, np.array([-z * z / 4.0]))[0])
    if z == 0:
        value = core if alpha == 0 else 0.0
    else:
        value = cmath.exp(alpha * cmath.log(z / 2.0)) * core
    if isinstance(x, complex):
        return complex(value)
    return complex(value).real
