"""Slice hyperholomorphic second Bargmann transform.

The transform sends the Laguerre function ``phi_n`` to the normalized
monomial ``f_n(q) = q**n * nu_n`` with
``nu_n = (Gamma(n+alpha+1) / (pi Gamma(alpha) n!))**(1/2)``, which is an
orthonormal basis of the weighted Bergman space on the quaternionic unit ball
(measure ``(1 - |z|**2)**(alpha-1) dx dy`` on any slice disc).  Series are
stored by their right coefficients, ``f(q) = sum_n q**n c_n``.

Integrals over a slice disc use :class:`DiscQuadratureRule`: Gauss-Jacobi in
``s = r**2`` times a uniform angular rule.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln, roots_jacobi

from .errors import DomainError, ExactnessError
from .hilbert import DEFAULT_N, CoeffVector, GaussLaguerreRule, RadialSignal, analyze
from .quaternion import (
    CANONICAL_UNIT,
    ImaginaryUnit,
    Quaternion,
    as_quaternion,
    from_slice,
    left_unit_times,
    qconj_array,
    qmul_array,
    slice_left_multiply,
    slice_unit,
    to_slice,
)
from .transform import UNIT_TOL, frht_spectral

__all__ = [
    "SliceRegularSeries",
    "DiscQuadratureRule",
    "BallPoint",
    "build_disc_rule",
    "monomial_norm",
    "basis_series",
    "bargmann_kernel",
    "bargmann_forward",
    "bargmann_evaluate",
    "bargmann_inverse",
    "star_product",
    "gamma_action",
    "bergman_inner",
    "bergman_norm",
    "bergman_gram",
    "frht_via_bargmann",
    "kernel_via_bergman",
    "kernel_via_bergman_grid",
    "INVERSE_DILATION",
]

DEFAULT_RADIAL = 64
DEFAULT_ANGULAR = 256
# Radius at which the inverse transform samples its kernel; see bargmann_inverse.
INVERSE_DILATION = 0.75
# Target size of the neglected aliasing terms in kernel_via_bergman.
_ALIAS_TOL = 1e-14


def monomial_norm(n, alpha: float):
    """``nu_n = (Gamma(n+alpha+1) / (pi Gamma(alpha) n!))**(1/2)``."""
    n = np.asarray(n, dtype=float)
    out = np.exp(0.5 * (gammaln(n + alpha + 1.0) - math.log(math.pi) - gammaln(alpha) - gammaln(n + 1.0)))
    return out if out.ndim else float(out)


@dataclass(frozen=True, eq=False)
class SliceRegularSeries:
    """``f(q) = sum_n q**n c_n`` with quaternion coefficients on the right."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.coeffs, dtype=float).reshape(-1, 4)
        if a.shape[0] == 0:
            raise ValueError("a series needs at least one coefficient")
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @classmethod
    def from_quaternions(cls, qs) -> "SliceRegularSeries":
        return cls(np.array([as_quaternion(q).as_array() for q in qs]))

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def __len__(self) -> int:
        return self.coeffs.shape[0]

    def __getitem__(self, n: int) -> Quaternion:
        return Quaternion.from_array(self.coeffs[n])

    def evaluate(self, q) -> Quaternion:
        """``f(q)`` computed in the slice of ``q``."""
        q = as_quaternion(q)
        unit = slice_unit(q)
        z = to_slice(q, unit)
        return Quaternion.from_array(_evaluate_slice(self.coeffs, np.array([z]), unit)[0])

    def __add__(self, other: "SliceRegularSeries") -> "SliceRegularSeries":
        n = max(len(self), len(other))
        out = np.zeros((n, 4))
        out[: len(self)] += self.coeffs
        out[: len(other)] += other.coeffs
        return SliceRegularSeries(out)


def basis_series(n: int, alpha: float) -> SliceRegularSeries:
    """The normalized monomial ``f_n``."""
    c = np.zeros((n + 1, 4))
    c[n, 0] = monomial_norm(n, alpha)
    return SliceRegularSeries(c)


def _power_table(z: np.ndarray, degree: int) -> np.ndarray:
    """``z**n`` for ``n = 0..degree`` as a ``(len(z), degree + 1)`` array."""
    table = np.empty((z.size, degree + 1), dtype=complex)
    table[:, 0] = 1.0
    if degree:
        table[:, 1:] = np.cumprod(np.repeat(z[:, None], degree, axis=1), axis=1)
    return table


def _evaluate_powers(coeffs: np.ndarray, powers: np.ndarray, unit: ImaginaryUnit) -> np.ndarray:
    # (Re z^n + unit Im z^n) c_n summed over n
    n = coeffs.shape[0]
    return powers[:, :n].real @ coeffs + powers[:, :n].imag @ left_unit_times(unit, coeffs)


def _evaluate_slice(coeffs: np.ndarray, z: np.ndarray, unit: ImaginaryUnit) -> np.ndarray:
    """``sum_n z**n c_n`` for complex points ``z`` of the slice of ``unit``."""
    z = np.asarray(z, dtype=complex).ravel()
    return _evaluate_powers(coeffs, _power_table(z, coeffs.shape[0] - 1), unit)


@lru_cache(maxsize=8)
def _disc_powers(disc: "DiscQuadratureRule", degree: int, scale: float) -> np.ndarray:
    z, _ = disc.points()
    table = _power_table(z * scale, degree)
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class BallPoint:
    """A quaternion strictly inside the unit ball."""

    q: Quaternion

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", as_quaternion(self.q))
        if not abs(self.q) < 1.0:
            raise DomainError(f"|q| = {abs(self.q):.17g} is not < 1")


@dataclass(frozen=True, eq=False)
class DiscQuadratureRule:
    """Product rule for ``int_{|z|<1} g(z) (1 - |z|**2)**(alpha-1) dx dy``.

    Monomial pairs ``conj(z**m) z**n`` are integrated exactly for
    ``m, n <= max_degree``.
    """

    alpha: float
    radii: np.ndarray
    radial_weights: np.ndarray
    angular_count: int

    @property
    def radial_count(self) -> int:
        return int(self.radii.shape[0])

    @property
    def max_degree(self) -> int:
        # radial: s**n exact for n <= 2K-1; angular: e^{i(n-m)t} exact for |n-m| < T
        return min(2 * self.radial_count - 1, self.angular_count - 1)

    @property
    def angles(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.angular_count) / self.angular_count

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        """Flattened complex nodes ``r_k e^{i t_m}`` and their weights."""
        z = (self.radii[:, None] * np.exp(1j * self.angles)[None, :]).ravel()
        w = np.repeat(self.radial_weights * (2.0 * math.pi / self.angular_count), self.angular_count)
        return z, w

    def check_degree(self, degree: int) -> None:
        if degree > self.max_degree:
            raise ExactnessError(
                f"series degree {degree} exceeds the disc rule's exact range {self.max_degree}"
            )


@lru_cache(maxsize=16)
def build_disc_rule(alpha: float, radial: int = DEFAULT_RADIAL, angular: int = DEFAULT_ANGULAR) -> DiscQuadratureRule:
    """Gauss-Jacobi (in ``s = r**2``) times uniform angles.

    With ``s = r**2`` the radial measure ``(1 - r**2)**(alpha-1) r dr`` is
    ``(1 - s)**(alpha-1) ds / 2``, a Jacobi weight after ``s = (1 + t) / 2``.
    """
    alpha = float(alpha)
    if not alpha > 0:
        raise DomainError("alpha must be > 0")
    if radial < 1 or angular < 1:
        raise DomainError("disc rule sizes must be positive")
    t, g = roots_jacobi(radial, alpha - 1.0, 0.0)
    s = 0.5 * (1.0 + t)
    radii = np.sqrt(s)
    weights = 2.0 ** (-alpha - 1.0) * g
    radii.setflags(write=False)
    weights.setflags(write=False)
    return DiscQuadratureRule(alpha, radii, weights, int(angular))


def _as_unit(unit) -> ImaginaryUnit:
    if isinstance(unit, ImaginaryUnit):
        return unit
    q = as_quaternion(unit)
    return ImaginaryUnit(q.w, q.x, q.y, q.z)


def _log_kernel(x: np.ndarray, w: np.ndarray, alpha: float) -> np.ndarray:
    """``log A(x; w)`` on the outer grid of real ``x`` and complex ``w``."""
    pref = -0.5 * (math.log(math.pi) + gammaln(alpha))
    return pref - (alpha + 1.0) * np.log(1.0 - w)[None, :] + np.outer(x, w / (w - 1.0))


def bargmann_kernel(x: float, q, alpha: float) -> Quaternion:
    """``A(x; q) = exp(x q / (q - 1)) / (sqrt(pi Gamma(alpha)) (1 - q)**(alpha+1))``.

    Equal to ``sum_n phi_n(x) f_n(q)``; evaluated in the slice of ``q`` with
    the principal power of ``1 - q``.
    """
    q = q.q if isinstance(q, BallPoint) else BallPoint(q).q
    unit = slice_unit(q)
    z = to_slice(q, unit)
    value = cmath.exp(_log_kernel(np.array([float(x)]), np.array([z]), float(alpha))[0, 0])
    return from_slice(value, unit)


def bargmann_forward(f: RadialSignal, N: int | None = None) -> SliceRegularSeries:
    """Series of the transform: ``c_n = nu_n <phi_n, f>``."""
    n = min(DEFAULT_N, f.rule.count - 1) if N is None else N
    c = analyze(f, n).coeffs
    return SliceRegularSeries(c * monomial_norm(np.arange(n + 1), f.rule.alpha)[:, None])


def bargmann_evaluate(f: RadialSignal, q) -> Quaternion:
    """The transform at one ball point by direct quadrature of the integral.

    Independent of :func:`bargmann_forward`; used as its cross-check.
    """
    q = BallPoint(q).q
    unit = slice_unit(q)
    z = to_slice(q, unit)
    rule = f.rule
    a = np.exp(_log_kernel(rule.nodes, np.array([z]), rule.alpha)[:, 0] + rule.log_weights)
    return Quaternion.from_array(np.sum(slice_left_multiply(a, unit, f.values), axis=0))


def bargmann_inverse(F: SliceRegularSeries, rule: GaussLaguerreRule, disc: DiscQuadratureRule | None = None,
                     unit: ImaginaryUnit = CANONICAL_UNIT, dilation: float = INVERSE_DILATION) -> RadialSignal:
    """Samples at ``rule``'s nodes of ``int conj(A(t; z)) F(z) dlambda(z)`` over a slice disc.

    The kernel has a singularity at ``z = 1`` on the rim, which a disc rule
    resolves poorly.  The integral is therefore taken in the dilated form
    ``int conj(A(t; rho z)) F(z / rho) dlambda(z)``, identical term by term
    (``rho**n rho**-n = 1`` on each monomial) but with a kernel analytic on a
    neighbourhood of the closed disc.
    """
    disc = build_disc_rule(rule.alpha) if disc is None else disc
    if disc.alpha != rule.alpha:
        raise DomainError("disc rule and half-line rule have different alpha")
    disc.check_degree(F.degree)
    unit = _as_unit(unit)
    _, wt = disc.points()
    values = _evaluate_powers(F.coeffs, _disc_powers(disc, F.degree, 1.0 / dilation), unit) * wt[:, None]
    conj_a = _inverse_kernel(rule, disc, dilation)
    out = conj_a.real @ values + conj_a.imag @ left_unit_times(unit, values)
    return RadialSignal(rule, out)


@lru_cache(maxsize=4)
def _inverse_kernel(rule: GaussLaguerreRule, disc: DiscQuadratureRule, dilation: float) -> np.ndarray:
    z, _ = disc.points()
    conj_a = np.conj(np.exp(_log_kernel(rule.nodes, dilation * z, rule.alpha)))
    conj_a.setflags(write=False)
    return conj_a


def star_product(f: SliceRegularSeries, g: SliceRegularSeries) -> SliceRegularSeries:
    """Cauchy product ``(f * g)_n = sum_k a_k b_{n-k}`` keeping quaternion order."""
    prods = qmul_array(f.coeffs[:, None, :], g.coeffs[None, :, :])
    idx = np.add.outer(np.arange(len(f)), np.arange(len(g))).ravel()
    out = np.zeros((len(f) + len(g) - 1, 4))
    np.add.at(out, idx, prods.reshape(-1, 4))
    return SliceRegularSeries(out)


def gamma_action(F: SliceRegularSeries, theta) -> SliceRegularSeries:
    """Slice-regular ``q -> f(q theta)``: coefficient ``n`` becomes ``theta**n c_n``."""
    theta = as_quaternion(theta)
    if abs(theta) > 1.0 + UNIT_TOL:
        raise DomainError(f"|theta| = {abs(theta):.17g} > 1 leaves the Bergman space")
    return SliceRegularSeries(frht_spectral(CoeffVector(F.coeffs), theta).coeffs)


def bergman_norm(F: SliceRegularSeries, alpha: float) -> float:
    """Exact norm from coefficients: ``sum |c_n|**2 / nu_n**2``."""
    nu = monomial_norm(np.arange(len(F)), alpha)
    return float(np.sqrt(np.sum(np.sum(F.coeffs**2, axis=1) / nu**2)))


def bergman_inner(F: SliceRegularSeries, G: SliceRegularSeries, disc: DiscQuadratureRule,
                  unit: ImaginaryUnit = CANONICAL_UNIT) -> Quaternion:
    """``int_{B_I} conj(F(z)) G(z) dlambda(z)`` by the disc rule on the slice of ``unit``."""
    disc.check_degree(max(F.degree, G.degree))
    unit = _as_unit(unit)
    _, wt = disc.points()
    powers = _disc_powers(disc, max(F.degree, G.degree), 1.0)
    fz = _evaluate_powers(F.coeffs, powers, unit)
    gz = _evaluate_powers(G.coeffs, powers, unit)
    return Quaternion.from_array(wt @ qmul_array(qconj_array(fz), gz))


def bergman_gram(series: list[SliceRegularSeries], disc: DiscQuadratureRule,
                 unit: ImaginaryUnit = CANONICAL_UNIT) -> np.ndarray:
    """All pairings ``<F_a, F_b>`` at once, as an ``(S, S, 4)`` array."""
    degree = max(F.degree for F in series)
    disc.check_degree(degree)
    unit = _as_unit(unit)
    _, wt = disc.points()
    powers = _disc_powers(disc, degree, 1.0)
    values = np.stack([_evaluate_powers(F.coeffs, powers, unit) for F in series])
    weighted = values * wt[None, :, None]
    conj_vals = qconj_array(values)
    gram = np.empty((len(series), len(series), 4))
    for a in range(len(series)):
        gram[a] = qmul_array(conj_vals[a][None, :, :], weighted).sum(axis=1)
    return gram


def frht_via_bargmann(f: RadialSignal, theta, disc: DiscQuadratureRule | None = None, N: int | None = None,
                      unit: ImaginaryUnit | None = None) -> RadialSignal:
    """Transform by ``A^-1 Gamma_theta A``.

    The inverse integrates over the slice of ``theta`` unless ``unit`` says
    otherwise.
    """
    theta = as_quaternion(theta)
    unit = slice_unit(theta) if unit is None else unit
    F = gamma_action(bargmann_forward(f, N), theta)
    return bargmann_inverse(F, f.rule, disc, unit)


def _adaptive_angular(modulus: float) -> int:
    # Aliased pairs n - m = T carry a factor |theta|**(T/2).
    if modulus <= 0.0:
        return DEFAULT_ANGULAR
    need = 2.0 * math.log(_ALIAS_TOL) / math.log(modulus)
    count = DEFAULT_ANGULAR
    while count < need and count < 4096:
        count *= 2
    return count


def kernel_via_bergman_grid(theta, alpha: float, xs, ys, disc: DiscQuadratureRule | None = None,
                            unit: ImaginaryUnit | None = None):
    """``R(theta; x_i, y_j)`` as the Bergman pairing ``<A(y; .), Gamma_theta A(x; .)>``.

    Returns ``(values, unit)`` with complex slice coordinates.  Both kernels
    are evaluated at split radii: ``Gamma_theta A(x; z / rho)`` and
    ``A(y; rho z)`` with ``rho = sqrt|theta|``, which leaves the pairing
    unchanged and keeps both arguments inside the disc of radius
    ``sqrt|theta|``.
    """
    theta = as_quaternion(theta)
    u = slice_unit(theta, unit)
    t = to_slice(theta, u)
    if abs(t) >= 1.0:
        raise DomainError("the Bergman pairing needs |theta| < 1")
    if disc is None:
        disc = build_disc_rule(float(alpha), DEFAULT_RADIAL, _adaptive_angular(abs(t)))
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    rho = max(math.sqrt(abs(t)), 0.5)
    z, wt = disc.points()
    a_x = np.exp(_log_kernel(xs, z * t / rho, alpha))
    a_y = np.exp(_log_kernel(ys, rho * z, alpha))
    return a_x @ (wt[:, None] * np.conj(a_y).T), u


def kernel_via_bergman(theta, alpha: float, x: float, y: float, disc: DiscQuadratureRule | None = None,
                       unit: ImaginaryUnit | None = None) -> Quaternion:
    """Kernel value from the Bergman pairing; see :func:`kernel_via_bergman_grid`."""
    values, u = kernel_via_bergman_grid(theta, alpha, [x], [y], disc, unit)
    return from_slice(complex(values[0, 0]), u)
