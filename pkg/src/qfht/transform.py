"""The quaternionic fractional Hankel transform.

Two independent evaluation paths:

* spectral: expand in the Laguerre basis, multiply coefficient ``n`` on the
  left by ``theta**n`` and resynthesize;
* quadrature: integrate the closed-form kernel against the samples with the
  Gauss-Laguerre rule.

plus inversion, composition, a Plancherel check and a direct Hankel integral
used as the classical reference at ``theta = -1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import simpson
from scipy.special import jv

from .errors import ConfigMismatchError, DomainError, RuleMismatchError
from .hilbert import (
    DEFAULT_N,
    CoeffVector,
    GaussLaguerreRule,
    RadialSignal,
    analyze,
    coeff_inner,
    synthesize,
)
from .kernel import DEFAULT_CONFIG, KernelConfig, log_r_matrix, theta_in_slice
from .quaternion import (
    ImaginaryUnit,
    Quaternion,
    as_quaternion,
    left_unit_times,
    q_inverse,
    q_mul,
    slice_left_multiply,
)

__all__ = [
    "FrhtOperator",
    "frht_spectral",
    "frht_quadrature",
    "frht_inverse",
    "compose",
    "hankel_reference",
    "verify_plancherel",
    "norm_deviation",
    "hankel_grid",
    "HANKEL_U_MAX",
    "HANKEL_STEP",
]

UNIT_TOL = 1e-12
HANKEL_U_MAX = 40.0
HANKEL_STEP = 1e-3
PATHS = ("spectral", "quadrature")


@dataclass(frozen=True, eq=False)
class FrhtOperator:
    """``L_theta`` on signals sampled at ``rule``'s nodes.

    ``spectral_only`` operators (``|theta| > 1``, e.g. inverses of
    contractions) only act on band-limited coefficient vectors; the kernel
    diverges outside the closed unit ball.
    """

    theta: Quaternion
    rule: GaussLaguerreRule
    cfg: KernelConfig = DEFAULT_CONFIG
    spectral_only: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", as_quaternion(self.theta))
        if abs(self.theta) > 1.0 + UNIT_TOL and not self.spectral_only:
            raise DomainError(
                f"|theta| = {abs(self.theta):.17g} > 1; pass spectral_only=True to allow band-limited use"
            )

    @property
    def alpha(self) -> float:
        return self.rule.alpha

    def is_identity(self) -> bool:
        return self.theta == Quaternion(1.0)

    def apply(self, f: RadialSignal, path: str = "spectral", N: int | None = None) -> RadialSignal:
        """Transform a sampled signal along ``path`` (``"spectral"`` or ``"quadrature"``)."""
        if not self.rule.compatible(f.rule):
            raise RuleMismatchError("signal is not sampled on the operator's rule")
        if self.is_identity():
            return RadialSignal(f.rule, f.values)
        if path == "spectral":
            n = min(DEFAULT_N, f.rule.count - 1) if N is None else N
            return synthesize(frht_spectral(analyze(f, n), self.theta), self.rule)
        if path == "quadrature":
            return frht_quadrature(f, self)
        raise ValueError(f"unknown path {path!r}; expected one of {PATHS}")

    def __repr__(self) -> str:
        return f"FrhtOperator(theta={self.theta.as_list()}, alpha={self.alpha}, M={self.rule.count})"


def _theta_powers(theta, count: int) -> tuple[np.ndarray, ImaginaryUnit]:
    t, unit = theta_in_slice(theta)
    powers = np.empty(count, dtype=complex)
    powers[0] = 1.0
    if count > 1:
        powers[1:] = np.cumprod(np.full(count - 1, t))
    return powers, unit


def frht_spectral(c: CoeffVector, theta) -> CoeffVector:
    """Coefficient ``n`` becomes ``theta**n * c_n`` (power on the left)."""
    powers, unit = _theta_powers(theta, len(c))
    return CoeffVector(slice_left_multiply(powers, unit, c.coeffs))


@lru_cache(maxsize=16)
def _quadrature_matrix(t: complex, rule: GaussLaguerreRule) -> np.ndarray:
    # w~_i K(x_i, y_j) = w_i R(x_i, y_j): the x^a e^-x of K cancels against
    # the Lebesgue weights.  The symmetrized sqrt(w_i) R_ij sqrt(w_j) stays
    # bounded where w_i R_ij alone overflows (far node pairs of large rules).
    half = 0.5 * rule.log_weights
    log_k = log_r_matrix(t, rule.alpha, rule.nodes, rule.nodes) + half[:, None] + half[None, :]
    k = np.exp(log_k)
    k.setflags(write=False)
    return k


def frht_quadrature(f: RadialSignal, op: FrhtOperator) -> RadialSignal:
    """``(L_theta f)(y_j) = sum_i w~_i K(x_i, y_j) f(x_i)`` with the kernel on the left."""
    if not op.rule.compatible(f.rule):
        raise RuleMismatchError("signal is not sampled on the operator's rule")
    t, unit = theta_in_slice(op.theta)
    if t == 1:
        return RadialSignal(f.rule, f.values)
    if op.spectral_only or abs(t) > 1.0 + UNIT_TOL:
        raise DomainError("kernel quadrature needs |theta| <= 1")
    k = _quadrature_matrix(complex(t), op.rule)
    half = 0.5 * op.rule.log_weights
    vals = f.values * np.exp(half)[:, None]
    acc = k.real.T @ vals + k.imag.T @ left_unit_times(unit, vals)
    # exp(-half) alone overflows for the outermost nodes of large rules while
    # its product with acc is finite; apply it in two factors
    quarter = np.exp(-0.5 * half)[:, None]
    return RadialSignal(f.rule, acc * quarter * quarter)


def frht_inverse(op: FrhtOperator) -> FrhtOperator:
    """Operator with parameter ``theta**-1``.

    For ``|theta| = 1`` this is ``conj(theta)`` and fully usable; for
    ``|theta| < 1`` the result is spectral-only.
    """
    if abs(op.theta) == 0.0:
        raise DomainError("theta = 0 is not invertible")
    inv = q_inverse(op.theta)
    return FrhtOperator(inv, op.rule, op.cfg, spectral_only=abs(inv) > 1.0 + UNIT_TOL)


def compose(op1: FrhtOperator, op2: FrhtOperator) -> FrhtOperator:
    """Operator with parameter ``theta1 * theta2``.

    Equals applying ``op2`` then ``op1`` only when both parameters lie in a
    common slice; otherwise ``theta1**n theta2**n != (theta1 theta2)**n``.
    """
    if op1.alpha != op2.alpha or not op1.rule.compatible(op2.rule):
        raise ConfigMismatchError("operators differ in alpha or quadrature rule")
    prod = q_mul(op1.theta, op2.theta)
    spectral_only = op1.spectral_only or op2.spectral_only or abs(prod) > 1.0 + UNIT_TOL
    return FrhtOperator(prod, op1.rule, op1.cfg, spectral_only=spectral_only)


def hankel_grid(u_max: float = HANKEL_U_MAX, step: float = HANKEL_STEP) -> np.ndarray:
    count = int(round(u_max / step))
    # Simpson needs an even number of intervals
    count += count % 2
    return np.linspace(0.0, count * step, count + 1)


def hankel_reference(psi, alpha: float, y, u_max: float = HANKEL_U_MAX, step: float = HANKEL_STEP):
    """``int_0^u_max u J_alpha(y u) psi(u) du`` by composite Simpson.

    ``psi`` is a callable or its samples on :func:`hankel_grid`.  For
    integrands decaying like ``exp(-u**2 / 2)`` the truncation error is below
    ``exp(-u_max**2 / 2)`` and the Simpson error is ``O(step**4)`` (about
    1e-12 for the default grid and ``y <= 3``).
    """
    u = hankel_grid(u_max, step)
    samples = psi(u) if callable(psi) else np.asarray(psi, dtype=float)
    if samples.shape != u.shape:
        raise ValueError(f"psi must have {u.size} samples on the Hankel grid")
    ys = np.atleast_1d(np.asarray(y, dtype=float))
    table = _hankel_table(float(alpha), tuple(ys), u_max, step)
    out = simpson(table * samples[None, :], x=u, axis=1)
    return out if np.ndim(y) else float(out[0])


@lru_cache(maxsize=8)
def _hankel_table(alpha: float, ys: tuple, u_max: float, step: float) -> np.ndarray:
    u = hankel_grid(u_max, step)
    table = u[None, :] * jv(alpha, np.asarray(ys)[:, None] * u[None, :])
    table.setflags(write=False)
    return table


def norm_deviation(op: FrhtOperator, f: CoeffVector) -> float:
    """``| ||L f|| - ||f|| |`` on coefficients."""
    return abs(frht_spectral(f, op.theta).norm() - f.norm())


def verify_plancherel(op: FrhtOperator, f: CoeffVector, g: CoeffVector) -> float:
    """``|<L f, L g> - <f, g>|`` on the spectral path, for unit ``theta``.

    ``conj(theta**n c) theta**n d = conj(c) |theta|**(2n) d``, so the identity
    holds for any quaternion coefficients, not only those commuting with
    ``theta``.
    """
    if abs(abs(op.theta) - 1.0) > UNIT_TOL:
        raise DomainError(f"Plancherel identity needs |theta| = 1, got {abs(op.theta):.17g}")
    lf = frht_spectral(f, op.theta)
    lg = frht_spectral(g, op.theta)
    return abs(coeff_inner(lf, lg) - coeff_inner(f, g))
