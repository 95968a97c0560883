"""Pure-Python/numpy implementations of the hot series loops.

Mirrors ``_ckernels.pyx`` function for function; :mod:`qfht._backend` picks
whichever is importable.
"""
from __future__ import annotations

import math

import numpy as np

NAME = "python"
_RESCALE = 1e250
_LOG_RESCALE = math.log(_RESCALE)


def inorm_series(alpha, w, rtol=1e-17, max_terms=10000):
    """Sum ``sum_k w**k / (k! Gamma(alpha+k+1))`` for each entry of ``w``.

    Returns ``(mantissa, log_scale, nterms)`` with the series value equal to
    ``mantissa * exp(log_scale)``; ``nterms > max_terms`` flags a failure.
    """
    w = np.ascontiguousarray(w, dtype=complex).ravel()
    n = w.size
    t0 = math.exp(-math.lgamma(alpha + 1.0))
    term = np.full(n, t0, dtype=complex)
    total = term.copy()
    scale = np.zeros(n)
    nterms = np.ones(n, dtype=np.int64)
    idx = np.nonzero(w != 0)[0]
    k = 0
    while idx.size and k < max_terms:
        t = term[idx] * w[idx] / ((k + 1.0) * (k + 1.0 + alpha))
        s = total[idx] + t
        big = np.abs(s) > _RESCALE
        if big.any():
            t[big] /= _RESCALE
            s[big] /= _RESCALE
            scale[idx[big]] += _LOG_RESCALE
        term[idx] = t
        total[idx] = s
        nterms[idx] = k + 2
        done = np.abs(t) < rtol * np.abs(s)
        idx = idx[~done]
        k += 1
    if idx.size:
        nterms[idx] = max_terms + 1
    return total, scale, nterms


def laguerre_kernel_sum(theta, alpha, x, y, tol, nmax, consecutive):
    """Sum ``theta**n phi_n(x) phi_n(y)`` over orthonormal Laguerre functions.

    Stops once ``consecutive`` successive terms are below ``tol * |sum|``.
    Returns ``(sum, sum_of_abs_terms, nterms, converged)``.
    """
    theta = complex(theta)
    p_x = math.exp(-0.5 * math.lgamma(alpha + 1.0))
    p_y = p_x
    q_x = q_y = 0.0
    power = 1.0 + 0.0j
    term = power * p_x * p_y
    total = term
    abs_total = abs(term)
    quiet = 0
    n = 0
    while n < nmax:
        b_next = math.sqrt((n + 1.0) * (n + 1.0 + alpha))
        b_now = math.sqrt(n * (n + alpha))
        a_now = 2.0 * n + alpha + 1.0
        p_x, q_x = ((a_now - x) * p_x - b_now * q_x) / b_next, p_x
        p_y, q_y = ((a_now - y) * p_y - b_now * q_y) / b_next, p_y
        power *= theta
        n += 1
        term = power * (p_x * p_y)
        total += term
        a = abs(term)
        abs_total += a
        if a < tol * abs(total):
            quiet += 1
            if quiet >= consecutive:
                return total, abs_total, n + 1, True
        else:
            quiet = 0
    return total, abs_total, n + 1, False


def laguerre_kernel_grid(theta, alpha, xs, ys, tol, nmax, consecutive):
    """:func:`laguerre_kernel_sum` over paired arrays ``xs``, ``ys``."""
    xs = np.ascontiguousarray(xs, dtype=float).ravel()
    ys = np.ascontiguousarray(ys, dtype=float).ravel()
    m = xs.size
    totals = np.empty(m, dtype=complex)
    abs_totals = np.empty(m)
    nterms = np.empty(m, dtype=np.int64)
    ok = np.empty(m, dtype=bool)
    for i in range(m):
        totals[i], abs_totals[i], nterms[i], ok[i] = laguerre_kernel_sum(
            theta, alpha, xs[i], ys[i], tol, nmax, consecutive
        )
    return totals, abs_totals, nterms, ok
