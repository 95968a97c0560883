"""Quaternionic fractional Hankel transform on the weighted half-line.

The transform ``L_theta`` acts on quaternion-valued functions in
``L^2(R+, x^alpha e^-x dx)`` by ``L_theta phi_n = phi_n theta**n`` on the
orthonormal Laguerre basis.  It is available along three routes that are
checked against each other: the spectral route (:func:`frht_spectral`), the
closed-form kernel integrated by Gauss-Laguerre quadrature
(:func:`frht_quadrature`), and the slice hyperholomorphic Bargmann route
(:func:`frht_via_bargmann`).
"""
from . import _backend
from .bargmann import (
    BallPoint,
    DiscQuadratureRule,
    SliceRegularSeries,
    bargmann_evaluate,
    bargmann_forward,
    bargmann_inverse,
    bargmann_kernel,
    basis_series,
    bergman_gram,
    bergman_inner,
    bergman_norm,
    build_disc_rule,
    frht_via_bargmann,
    gamma_action,
    kernel_via_bergman,
    monomial_norm,
    star_product,
)
from .errors import (
    ConfigMismatchError,
    ConvergenceError,
    DomainError,
    ExactnessError,
    NumericalError,
    QfhtError,
    RuleMismatchError,
)
from .hilbert import (
    CoeffVector,
    GaussLaguerreRule,
    RadialSignal,
    analyze,
    build_rule,
    coeff_inner,
    evaluate_expansion,
    inner_product,
    norm,
    phi,
    phi_table,
    synthesize,
)
from .kernel import KernelConfig, k_kernel, r_closed, r_series
from .quaternion import *  # noqa: F401,F403
from .quaternion import __all__ as _quaternion_all
from .specfun import bessel_i_norm, bessel_j, laguerre, ln_gamma, modified_bessel_i
from .transform import (
    FrhtOperator,
    compose,
    frht_inverse,
    frht_quadrature,
    frht_spectral,
    hankel_reference,
    verify_plancherel,
)

BACKEND = _backend.NAME

__version__ = "0.1.0"

__all__ = [
    *_quaternion_all,
    "BACKEND",
    "BallPoint",
    "CoeffVector",
    "ConfigMismatchError",
    "ConvergenceError",
    "DiscQuadratureRule",
    "DomainError",
    "ExactnessError",
    "FrhtOperator",
    "GaussLaguerreRule",
    "KernelConfig",
    "NumericalError",
    "QfhtError",
    "RadialSignal",
    "RuleMismatchError",
    "SliceRegularSeries",
    "analyze",
    "bargmann_evaluate",
    "bargmann_forward",
    "bargmann_inverse",
    "bargmann_kernel",
    "basis_series",
    "bergman_gram",
    "bergman_inner",
    "bergman_norm",
    "bessel_i_norm",
    "bessel_j",
    "build_disc_rule",
    "build_rule",
    "coeff_inner",
    "compose",
    "evaluate_expansion",
    "frht_inverse",
    "frht_quadrature",
    "frht_spectral",
    "frht_via_bargmann",
    "gamma_action",
    "hankel_reference",
    "inner_product",
    "k_kernel",
    "kernel_via_bergman",
    "laguerre",
    "ln_gamma",
    "modified_bessel_i",
    "monomial_norm",
    "norm",
    "phi",
    "phi_table",
    "r_closed",
    "r_series",
    "star_product",
    "synthesize",
    "verify_plancherel",
]
