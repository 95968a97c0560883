"""The fractional Hankel kernel.

``R(theta; x, y) = sum_n theta**n phi_n(x) phi_n(y)`` is evaluated two ways:

* :func:`r_series` sums the bilinear Laguerre series directly;
* :func:`r_closed` uses the Hille-Hardy closed form written without square
  roots of ``theta``::

      R = (1 - theta)**(-alpha-1) * exp(-theta (x + y) / (1 - theta))
          * inorm(alpha, theta x y / (1 - theta)**2)

Both work in the slice of ``theta``: every factor is a power series in
``theta`` with real coefficients, so the computation is complex arithmetic
followed by an embedding back into the quaternions.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from . import _backend
from .errors import ConvergenceError, DomainError
from .quaternion import ImaginaryUnit, Quaternion, as_quaternion, from_slice, slice_unit, to_slice
from .specfun import log_inorm

__all__ = [
    "KernelConfig",
    "DEFAULT_CONFIG",
    "theta_in_slice",
    "r_series",
    "r_closed",
    "k_kernel",
    "log_r_matrix",
    "r_closed_grid",
]

# Cancellation factor sum|terms| / |sum| above which the double-precision
# partial sum is re-done in extended precision.
_CANCELLATION_LIMIT = 1e3
_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class KernelConfig:
    """Truncation controls for :func:`r_series`.

    Parameters
    ----------
    n_max
        Hard cap on the number of series terms (at most 2000).
    tail_tol
        A term is negligible when ``|term| < tail_tol * |partial sum|``.
    consecutive
        Number of successive negligible terms required to stop.
    extended_precision
        Re-sum in arbitrary precision when the double sum has cancelled
        (the value is tiny compared with its terms).
    """

    n_max: int = 2000
    tail_tol: float = 1e-15
    consecutive: int = 5
    extended_precision: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.n_max <= 2000:
            raise DomainError(f"n_max must be in [1, 2000], got {self.n_max}")
        if not self.tail_tol > 0:
            raise DomainError("tail_tol must be positive")
        if self.consecutive < 1:
            raise DomainError("consecutive must be >= 1")


DEFAULT_CONFIG = KernelConfig()


def theta_in_slice(theta, unit: ImaginaryUnit | None = None) -> tuple[complex, ImaginaryUnit]:
    """Complex coordinate of ``theta`` and the unit of its slice.

    ``unit`` only matters for real ``theta`` (any slice contains it).
    """
    theta = as_quaternion(theta)
    u = slice_unit(theta, unit)
    return to_slice(theta, u), u


def _check_points(x: float, y: float) -> None:
    if x < 0 or y < 0:
        raise DomainError(f"kernel arguments must be >= 0, got x={x}, y={y}")


def _series_mp(t: complex, alpha: float, x: float, y: float, cfg: KernelConfig, dps: int):
    """Same partial sum as the backend, in ``dps`` decimal digits."""
    with mpmath.workdps(dps):
        a = mpmath.mpf(alpha)
        X, Y = mpmath.mpf(x), mpmath.mpf(y)
        th = mpmath.mpc(t.real, t.imag)
        p_x = p_y = 1 / mpmath.sqrt(mpmath.gamma(a + 1))
        q_x = q_y = mpmath.mpf(0)
        power = mpmath.mpc(1)
        total = power * p_x * p_y
        abs_total = abs(total)
        quiet = 0
        for n in range(cfg.n_max):
            b_next = mpmath.sqrt((n + 1) * (n + 1 + a))
            b_now = mpmath.sqrt(n * (n + a))
            a_now = 2 * n + a + 1
            p_x, q_x = ((a_now - X) * p_x - b_now * q_x) / b_next, p_x
            p_y, q_y = ((a_now - Y) * p_y - b_now * q_y) / b_next, p_y
            power *= th
            term = power * p_x * p_y
            total += term
            mag = abs(term)
            abs_total += mag
            if mag < cfg.tail_tol * abs(total):
                quiet += 1
                if quiet >= cfg.consecutive:
                    return complex(total), float(abs_total), True
            else:
                quiet = 0
        return complex(total), float(abs_total), False


def _series_complex(t: complex, alpha: float, x: float, y: float, cfg: KernelConfig) -> complex:
    total, abs_total, _, ok = _backend.laguerre_kernel_sum(
        t, alpha, x, y, cfg.tail_tol, cfg.n_max, cfg.consecutive
    )
    total = complex(total)
    if ok and abs_total <= _CANCELLATION_LIMIT * abs(total):
        return total
    if not cfg.extended_precision:
        if not ok:
            raise ConvergenceError(f"kernel series did not converge in {cfg.n_max} terms")
        return total
    # Digits lost to cancellation are unknown until the sum is accurate, so
    # raise the working precision until the estimate stops moving.
    dps = 30
    for _ in range(6):
        total, abs_total, ok = _series_mp(t, alpha, x, y, cfg, dps)
        if not ok:
            raise ConvergenceError(f"kernel series did not converge in {cfg.n_max} terms")
        needed = 20 + int(math.log10(max(abs_total / max(abs(total), 1e-300), 1.0)))
        if needed <= dps:
            return total
        dps = needed + 10
    raise ConvergenceError("kernel series cancellation exceeds working precision")


def r_series(theta, alpha: float, x: float, y: float, cfg: KernelConfig = DEFAULT_CONFIG,
             unit: ImaginaryUnit | None = None) -> Quaternion:
    """Kernel from the bilinear series ``sum_n theta**n phi_n(x) phi_n(y)``.

    Raises
    ------
    DomainError
        If ``|theta| >= 1`` (outside the disc of convergence).
    ConvergenceError
        If ``cfg.n_max`` terms do not reach the tail tolerance.
    """
    t, u = theta_in_slice(theta, unit)
    if abs(t) >= 1.0:
        raise DomainError(f"series kernel needs |theta| < 1, got {abs(t):.17g}")
    _check_points(x, y)
    return from_slice(_series_complex(t, float(alpha), float(x), float(y), cfg), u)


def _check_closed_theta(t: complex) -> None:
    if t == 1:
        raise DomainError("theta = 1 is the identity; the kernel is a Dirac delta there")
    if abs(t) > 1.0 + _UNIT_TOL:
        raise DomainError(f"closed kernel needs |theta| <= 1, got {abs(t):.17g}")


def log_r_matrix(t: complex, alpha: float, xs, ys) -> np.ndarray:
    """``log R(t; x_i, y_j)`` for complex ``t`` on the outer grid ``xs x ys``.

    Shape ``(len(xs), len(ys))``; finite even where ``R`` itself would
    under- or overflow.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    one_minus = 1.0 - t
    log_pref = -(alpha + 1.0) * cmath.log(one_minus)
    ratio = t / one_minus
    exponent = -ratio * (xs[:, None] + ys[None, :])
    w = (ratio / one_minus) * np.outer(xs, ys)
    return log_pref + exponent + log_inorm(alpha, w)


def r_closed_grid(theta, alpha: float, xs, ys, unit: ImaginaryUnit | None = None):
    """Closed-form kernel on a grid as complex slice coordinates.

    Returns ``(values, unit)``; ``values[i, j]`` is the kernel at
    ``(xs[i], ys[j])`` read in the slice of ``unit``.
    """
    t, u = theta_in_slice(theta, unit)
    _check_closed_theta(t)
    values = np.exp(log_r_matrix(t, float(alpha), xs, ys))
    if t.imag == 0.0:
        # the Bessel branch leaves round-off in the imaginary part
        values = values.real + 0j
    return values, u


def r_closed(theta, alpha: float, x: float, y: float, unit: ImaginaryUnit | None = None) -> Quaternion:
    """Hille-Hardy closed form of the kernel, valid for ``|theta| <= 1``, ``theta != 1``.

    ``unit`` selects the slice used for real ``theta``; the result is the same
    real number for every choice.
    """
    _check_points(x, y)
    values, u = r_closed_grid(theta, alpha, [x], [y], unit)
    return from_slice(complex(values[0, 0]), u)


def k_kernel(theta, alpha: float, x: float, y: float, unit: ImaginaryUnit | None = None) -> Quaternion:
    """Weighted kernel ``x**alpha e**-x R(theta; x, y)`` acting on ``dx``."""
    _check_points(x, y)
    t, u = theta_in_slice(theta, unit)
    _check_closed_theta(t)
    if x == 0:
        return from_slice(0.0, u)
    log_k = log_r_matrix(t, float(alpha), [x], [y])[0, 0] + alpha * math.log(x) - x
    return from_slice(complex(np.exp(log_k)), u)
