# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled series loops; see ``_pykernels.py`` for the reference semantics."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, exp, log, lgamma

cnp.import_array()

NAME = "cython"
cdef double _RESCALE = 1e250
cdef double _LOG_RESCALE = log(1e250)


cdef inline double cabs2(double complex z) nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


def inorm_series(double alpha, w, double rtol=1e-17, long max_terms=10000):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] wa = np.ascontiguousarray(w, dtype=np.complex128).ravel()
    cdef Py_ssize_t n = wa.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] total = np.empty(n, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] scale = np.zeros(n)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] nterms = np.ones(n, dtype=np.int64)
    cdef double t0 = exp(-lgamma(alpha + 1.0))
    cdef double complex term, s, wi
    cdef Py_ssize_t i
    cdef long k
    cdef double sc
    with nogil:
        for i in range(n):
            wi = wa[i]
            term = t0
            s = t0
            sc = 0.0
            if wi.real == 0.0 and wi.imag == 0.0:
                total[i] = s
                continue
            k = 0
            while True:
                if k >= max_terms:
                    nterms[i] = max_terms + 1
                    break
                term = term * wi / ((k + 1.0) * (k + 1.0 + alpha))
                s = s + term
                if cabs2(s) > _RESCALE:
                    term = term / _RESCALE
                    s = s / _RESCALE
                    sc = sc + _LOG_RESCALE
                k += 1
                if cabs2(term) < rtol * cabs2(s):
                    nterms[i] = k + 1
                    break
            total[i] = s
            scale[i] = sc
    return total, scale, nterms


cdef void _lag_sum(double complex theta, double alpha, double x, double y,
                   double tol, long nmax, int consecutive,
                   double complex* out_total, double* out_abs,
                   long* out_n, bint* out_ok) noexcept nogil:
    cdef double p_x = exp(-0.5 * lgamma(alpha + 1.0))
    cdef double p_y = p_x
    cdef double q_x = 0.0, q_y = 0.0, tmp, b_next, b_now, a_now, a
    cdef double complex power = 1.0
    cdef double complex term = p_x * p_y
    cdef double complex total = term
    cdef double abs_total = cabs2(term)
    cdef int quiet = 0
    cdef long n = 0
    out_ok[0] = False
    while n < nmax:
        b_next = sqrt((n + 1.0) * (n + 1.0 + alpha))
        b_now = sqrt(n * (n + alpha))
        a_now = 2.0 * n + alpha + 1.0
        tmp = ((a_now - x) * p_x - b_now * q_x) / b_next
        q_x = p_x
        p_x = tmp
        tmp = ((a_now - y) * p_y - b_now * q_y) / b_next
        q_y = p_y
        p_y = tmp
        power = power * theta
        n += 1
        term = power * (p_x * p_y)
        total = total + term
        a = cabs2(term)
        abs_total += a
        if a < tol * cabs2(total):
            quiet += 1
            if quiet >= consecutive:
                out_ok[0] = True
                break
        else:
            quiet = 0
    out_total[0] = total
    out_abs[0] = abs_total
    out_n[0] = n + 1


def laguerre_kernel_sum(theta, double alpha, double x, double y, double tol,
                        long nmax, int consecutive):
    cdef double complex total
    cdef double abs_total
    cdef long nterms
    cdef bint ok
    _lag_sum(complex(theta), alpha, x, y, tol, nmax, consecutive,
             &total, &abs_total, &nterms, &ok)
    return complex(total), abs_total, nterms, bool(ok)


def laguerre_kernel_grid(theta, double alpha, xs, ys, double tol, long nmax,
                         int consecutive):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xa = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ya = np.ascontiguousarray(ys, dtype=np.float64).ravel()
    cdef Py_ssize_t m = xa.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] totals = np.empty(m, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] abs_totals = np.empty(m)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] nterms = np.empty(m, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] ok = np.empty(m, dtype=np.uint8)
    cdef double complex th = complex(theta)
    cdef double complex t
    cdef double at
    cdef long nt
    cdef bint good
    cdef Py_ssize_t i
    with nogil:
        for i in range(m):
            _lag_sum(th, alpha, xa[i], ya[i], tol, nmax, consecutive, &t, &at, &nt, &good)
            totals[i] = t
            abs_totals[i] = at
            nterms[i] = nt
            ok[i] = good
    return totals, abs_totals, nterms, ok.astype(bool)
