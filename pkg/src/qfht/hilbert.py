"""The weighted half-line space L^{2,alpha}(R+) with measure x^alpha e^-x dx.

Signals are quaternion samples at the nodes of a Gauss-Laguerre rule; the
space is a right quaternionic module (scalars act on the right) and the inner
product is conjugate-linear in its left argument.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .errors import DomainError, NumericalError, RuleMismatchError
from .quaternion import Quaternion, as_quaternion, qconj_array, qmul_array
from .specfun import laguerre, ln_gamma

__all__ = [
    "GaussLaguerreRule",
    "RadialSignal",
    "CoeffVector",
    "build_rule",
    "phi",
    "phi_table",
    "inner_product",
    "norm",
    "analyze",
    "synthesize",
    "evaluate_expansion",
    "coeff_inner",
    "DEFAULT_M",
    "DEFAULT_N",
]

DEFAULT_M = 128
DEFAULT_N = 40
MAX_M = 512

_RESCALE = 1e150
_LOG_RESCALE = math.log(_RESCALE)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GaussLaguerreRule:
    """Nodes and weights for ``int_0^inf f(x) x^alpha e^-x dx``.

    ``weights`` underflow to zero for the outermost nodes of large rules;
    ``log_weights`` stays exact and is what the transforms use.
    """

    alpha: float
    nodes: np.ndarray
    weights: np.ndarray
    log_weights: np.ndarray

    @property
    def count(self) -> int:
        return int(self.nodes.shape[0])

    def lebesgue_log_weights(self) -> np.ndarray:
        """Logs of ``w_i x_i^-alpha e^{x_i}``: weights for plain ``dx``."""
        return self.log_weights - self.alpha * np.log(self.nodes) + self.nodes

    def compatible(self, other: "GaussLaguerreRule") -> bool:
        return other is self or (
            self.alpha == other.alpha
            and self.count == other.count
            and np.array_equal(self.nodes, other.nodes)
        )

    def __repr__(self) -> str:
        return f"GaussLaguerreRule(alpha={self.alpha}, M={self.count})"


def _scaled_recurrence(alpha: float, x: np.ndarray, nmax: int):
    """Orthonormal Laguerre values ``phi_0..phi_nmax`` at ``x`` with rescaling.

    Returns ``(mantissa, log_scale)``, both shaped ``(nmax + 1, len(x))``, such
    that ``phi_n(x_i) = mantissa[n, i] * exp(log_scale[n, i])``.
    """
    x = np.asarray(x, dtype=float)
    mant = np.empty((nmax + 1, x.size))
    logs = np.empty((nmax + 1, x.size))
    p = np.full(x.size, math.exp(-0.5 * ln_gamma(alpha + 1.0)))
    q = np.zeros(x.size)
    scale = np.zeros(x.size)
    mant[0] = p
    logs[0] = scale
    for n in range(nmax):
        b_next = math.sqrt((n + 1.0) * (n + 1.0 + alpha))
        b_now = math.sqrt(n * (n + alpha))
        p, q = ((2.0 * n + alpha + 1.0 - x) * p - b_now * q) / b_next, p
        big = np.abs(p) > _RESCALE
        if big.any():
            p[big] /= _RESCALE
            q[big] /= _RESCALE
            scale[big] += _LOG_RESCALE
        mant[n + 1] = p
        logs[n + 1] = scale
    return mant, logs


def _christoffel_log_weights(alpha: float, x: np.ndarray, m: int) -> np.ndarray:
    """``-log sum_{k<m} phi_k(x)^2`` computed without overflow."""
    x = np.asarray(x, dtype=float)
    p = np.full(x.size, math.exp(-0.5 * ln_gamma(alpha + 1.0)))
    q = np.zeros(x.size)
    total = p * p
    scale = np.zeros(x.size)
    for n in range(m - 1):
        b_next = math.sqrt((n + 1.0) * (n + 1.0 + alpha))
        b_now = math.sqrt(n * (n + alpha))
        p, q = ((2.0 * n + alpha + 1.0 - x) * p - b_now * q) / b_next, p
        total += p * p
        big = np.abs(p) > _RESCALE
        if big.any():
            p[big] /= _RESCALE
            q[big] /= _RESCALE
            total[big] /= _RESCALE**2
            scale[big] += _LOG_RESCALE
    return -np.log(total) - 2.0 * scale


def _newton_polish(alpha: float, x: np.ndarray, m: int, steps: int = 2) -> np.ndarray:
    # x L_m' = m L_m - (m+alpha) L_{m-1}; written for orthonormal phi the
    # Newton step is x phi_m / (m phi_m - sqrt(m (m+alpha)) phi_{m-1}).
    c = math.sqrt(m * (m + alpha))
    for _ in range(steps):
        mant, _ = _scaled_recurrence(alpha, x, m)
        pm, pm1 = mant[m], mant[m - 1]
        x = x - x * pm / (m * pm - c * pm1)
    return x


@lru_cache(maxsize=32)
def build_rule(alpha: float, M: int = DEFAULT_M) -> GaussLaguerreRule:
    """Gauss-Laguerre rule with ``M`` nodes for the weight ``x^alpha e^-x``.

    Nodes are eigenvalues of the Jacobi matrix (Golub-Welsch) refined by two
    Newton steps; weights are Christoffel numbers ``1 / sum_k phi_k(x_i)^2``.
    """
    alpha = float(alpha)
    if not alpha > 0:
        raise DomainError(f"alpha must be > 0, got {alpha}")
    if not 1 <= M <= MAX_M:
        raise DomainError(f"rule size must be in [1, {MAX_M}], got {M}")
    k = np.arange(M, dtype=float)
    diag = 2.0 * k + alpha + 1.0
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    try:
        nodes = eigh_tridiagonal(diag, off, eigvals_only=True) if M > 1 else diag.copy()
    except LinAlgError as exc:
        raise NumericalError(f"Jacobi eigen-solve failed: {exc}") from exc
    nodes = np.sort(_newton_polish(alpha, nodes, M))
    if not np.all(np.isfinite(nodes)) or np.any(nodes <= 0):
        raise NumericalError("Gauss-Laguerre nodes did not converge")
    log_w = _christoffel_log_weights(alpha, nodes, M)
    return GaussLaguerreRule(alpha, _readonly(nodes), _readonly(np.exp(log_w)), _readonly(log_w))


@lru_cache(maxsize=64)
def _tables(rule: GaussLaguerreRule, n: int):
    mant, logs = _scaled_recurrence(rule.alpha, rule.nodes, n)
    with np.errstate(over="ignore"):
        basis = mant * np.exp(logs)
    weighted = mant * np.exp(logs + rule.log_weights[None, :])
    basis.setflags(write=False)
    weighted.setflags(write=False)
    return basis, weighted


def phi(n: int, alpha: float, x):
    """Orthonormal Laguerre function ``(n!/Gamma(alpha+n+1))^(1/2) L_n^(alpha)(x)``."""
    pref = math.exp(0.5 * (ln_gamma(n + 1.0) - ln_gamma(alpha + n + 1.0)))
    return pref * laguerre(n, alpha, x)


def phi_table(N: int, alpha: float, x) -> np.ndarray:
    """``phi_n(x_j)`` for ``n = 0..N`` as an ``(N + 1, len(x))`` array."""
    mant, logs = _scaled_recurrence(alpha, np.atleast_1d(np.asarray(x, dtype=float)), N)
    with np.errstate(over="ignore"):
        return mant * np.exp(logs)


def _as_qarray(values, size: int) -> np.ndarray:
    a = np.asarray(values, dtype=float)
    if a.ndim == 1:
        a = np.stack([a, np.zeros_like(a), np.zeros_like(a), np.zeros_like(a)], axis=-1)
    if a.shape != (size, 4):
        raise ValueError(f"expected {size} quaternion samples, got shape {a.shape}")
    return a


@dataclass(frozen=True, eq=False)
class RadialSignal:
    """Quaternion samples of a function at the nodes of ``rule``."""

    rule: GaussLaguerreRule
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _readonly(_as_qarray(self.values, self.rule.count)))

    @classmethod
    def from_function(cls, rule: GaussLaguerreRule, func: Callable) -> "RadialSignal":
        """Sample ``func`` (real or ``(M, 4)`` quaternion valued) at the nodes."""
        return cls(rule, func(np.array(rule.nodes)))

    @classmethod
    def zeros(cls, rule: GaussLaguerreRule) -> "RadialSignal":
        return cls(rule, np.zeros((rule.count, 4)))

    def right_scale(self, q) -> "RadialSignal":
        """``f * q`` pointwise (the module's scalar action)."""
        return RadialSignal(self.rule, qmul_array(self.values, as_quaternion(q).as_array()))

    def __add__(self, other: "RadialSignal") -> "RadialSignal":
        _check_rules(self, other)
        return RadialSignal(self.rule, self.values + other.values)

    def __sub__(self, other: "RadialSignal") -> "RadialSignal":
        _check_rules(self, other)
        return RadialSignal(self.rule, self.values - other.values)


@dataclass(frozen=True, eq=False)
class CoeffVector:
    """Coefficients ``c_0..c_N`` of ``f = sum_n phi_n c_n``."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.coeffs, dtype=float)
        if a.ndim == 1:
            a = _as_qarray(a, a.shape[0])
        if a.ndim != 2 or a.shape[1] != 4:
            raise ValueError(f"coefficients must have shape (N+1, 4), got {a.shape}")
        object.__setattr__(self, "coeffs", _readonly(a))

    @classmethod
    def from_quaternions(cls, qs) -> "CoeffVector":
        return cls(np.array([as_quaternion(q).as_array() for q in qs]).reshape(-1, 4))

    @classmethod
    def basis(cls, n: int, N: int | None = None) -> "CoeffVector":
        N = n if N is None else N
        c = np.zeros((N + 1, 4))
        c[n, 0] = 1.0
        return cls(c)

    @property
    def N(self) -> int:
        return self.coeffs.shape[0] - 1

    def __len__(self) -> int:
        return self.coeffs.shape[0]

    def __getitem__(self, n: int) -> Quaternion:
        return Quaternion.from_array(self.coeffs[n])

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.coeffs**2)))


def _check_rules(f: RadialSignal, g: RadialSignal) -> None:
    if not f.rule.compatible(g.rule):
        raise RuleMismatchError(f"signals live on different rules: {f.rule} vs {g.rule}")


def _root_weighted(f: RadialSignal) -> np.ndarray:
    # sqrt(w_i) f_i from log-weights: stays finite where w_i underflows but
    # the sample is large
    return f.values * np.exp(0.5 * f.rule.log_weights)[:, None]


def inner_product(f: RadialSignal, g: RadialSignal) -> Quaternion:
    """``<f, g>_alpha = sum_i w_i conj(f_i) g_i``."""
    _check_rules(f, g)
    prods = qmul_array(qconj_array(_root_weighted(f)), _root_weighted(g))
    return Quaternion.from_array(prods.sum(axis=0))


def norm(f: RadialSignal) -> float:
    """``||f||_alpha = sqrt(sum_i w_i |f_i|^2)``."""
    return float(np.linalg.norm(_root_weighted(f)))


def analyze(f: RadialSignal, N: int = DEFAULT_N) -> CoeffVector:
    """Coefficients ``c_n = <phi_n, f>_alpha`` for ``n = 0..N``."""
    if not 0 <= N < f.rule.count:
        raise DomainError(f"need 0 <= N < M = {f.rule.count}, got N = {N}")
    _, weighted = _tables(f.rule, N)
    return CoeffVector(weighted @ f.values)


def synthesize(c: CoeffVector, rule: GaussLaguerreRule) -> RadialSignal:
    """Samples of ``sum_n phi_n c_n`` at the rule's nodes."""
    basis, _ = _tables(rule, c.N)
    return RadialSignal(rule, basis.T @ c.coeffs)


def evaluate_expansion(c: CoeffVector, alpha: float, x) -> np.ndarray:
    """``sum_n phi_n(x) c_n`` at arbitrary points; returns ``(len(x), 4)``."""
    return phi_table(c.N, alpha, x).T @ c.coeffs


def coeff_inner(c: CoeffVector, d: CoeffVector) -> Quaternion:
    """``sum_n conj(c_n) d_n``, the inner product read off coefficients."""
    n = min(len(c), len(d))
    prods = qmul_array(qconj_array(c.coeffs[:n]), d.coeffs[:n])
    return Quaternion.from_array(prods.sum(axis=0))
