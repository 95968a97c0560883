"""Small worked cases for each public operation, with exactly known answers."""
import math

import numpy as np
import pytest

from qfht.bargmann import (
    SliceRegularSeries,
    bargmann_evaluate,
    bargmann_forward,
    bargmann_inverse,
    bargmann_kernel,
    basis_series,
    bergman_inner,
    build_disc_rule,
    frht_via_bargmann,
    gamma_action,
    kernel_via_bergman,
    monomial_norm,
    star_product,
)
from qfht.hilbert import CoeffVector, RadialSignal, analyze, build_rule, norm, phi, synthesize
from qfht.kernel import k_kernel, r_closed, r_series
from qfht.quaternion import I, J, K, Quaternion, q_mul, slice_power
from qfht.specfun import bessel_j, inorm_complex, laguerre, ln_gamma, modified_bessel_i
from qfht.transform import FrhtOperator, frht_spectral, hankel_reference, verify_plancherel


# special functions

@pytest.mark.parametrize("x,expected", [(1.0, 0.0), (5.0, math.log(24.0)), (0.5, 0.5 * math.log(math.pi))])
def test_ln_gamma_values(x, expected):
    assert ln_gamma(x) == pytest.approx(expected, abs=1e-15)


def test_laguerre_values():
    assert laguerre(0, 3.3, 7.0) == 1.0
    assert laguerre(1, 2.0, 1.0) == 2.0
    for n, alpha in [(4, 0.5), (9, 2.25)]:
        binom = math.exp(math.lgamma(n + alpha + 1) - math.lgamma(n + 1) - math.lgamma(alpha + 1))
        assert laguerre(n, alpha, 0.0) == pytest.approx(binom, rel=1e-14)


def test_normalized_bessel_values():
    assert inorm_complex(2.5, np.array([0j]))[0] == pytest.approx(1 / math.gamma(3.5), rel=1e-15)
    # inorm(alpha, w) w^(alpha/2) = I_alpha(2 sqrt w)
    for alpha, w in [(0.5, 0.7), (3.0, 12.0)]:
        lhs = inorm_complex(alpha, np.array([complex(w)]))[0].real * w ** (alpha / 2)
        assert lhs == pytest.approx(modified_bessel_i(alpha, 2 * math.sqrt(w)), rel=1e-14)


def test_bessel_special_values():
    assert modified_bessel_i(1.5, 0.0) == 0.0
    assert modified_bessel_i(0.0, 0.0) == 1.0
    assert modified_bessel_i(0.5, 1.0) == pytest.approx(math.sqrt(2 / math.pi) * math.sinh(1.0), rel=1e-15)
    assert bessel_j(1.5, 0.0) == 0.0
    assert abs(bessel_j(0.5, math.pi)) < 1e-15
    # I_alpha(x) = i^-alpha J_alpha(i x)
    via_j = complex(np.exp(-1j * math.pi * 2.0 / 2)) * bessel_j(2.0, 1.5j)
    assert abs(via_j - modified_bessel_i(2.0, 1.5)) < 1e-15


# quadrature and basis

def test_one_and_two_point_rules():
    for alpha in (0.5, 2.0):
        rule = build_rule(alpha, 1)
        assert rule.nodes[0] == pytest.approx(alpha + 1.0, rel=1e-15)
        assert rule.weights[0] == pytest.approx(math.gamma(alpha + 1.0), rel=1e-15)
    rule = build_rule(1.0, 2)
    assert np.sum(rule.weights * rule.nodes**3) == pytest.approx(24.0, rel=1e-14)
    assert np.sum(build_rule(2.5, 50).weights) == pytest.approx(math.gamma(3.5), rel=1e-14)


def test_basis_values():
    assert phi(0, 1.5, 4.0) == pytest.approx(math.gamma(2.5) ** -0.5, rel=1e-15)
    assert phi(2, 1.0, 0.0) == pytest.approx(math.sqrt(2 / 6) * 3, rel=1e-15)


def test_analyze_quaternion_combination():
    rule = build_rule(1.0, 64)
    f = synthesize(CoeffVector.from_quaternions([J, K]), rule)
    c = analyze(f, 5)
    assert c[0].isclose(J, 1e-14) and c[1].isclose(K, 1e-14)
    assert np.max(np.abs(c.coeffs[2:])) < 1e-14
    assert np.max(np.abs(analyze(RadialSignal.zeros(rule), 5).coeffs)) == 0.0


def test_right_scalar_structure():
    from qfht.hilbert import inner_product

    rule = build_rule(1.0, 32)
    f = synthesize(CoeffVector.from_quaternions([Quaternion(1.0, 2.0), K]), rule)
    g = synthesize(CoeffVector.from_quaternions([J, Quaternion(0.5)]), rule)
    assert inner_product(f.right_scale(J), g).isclose(q_mul(-J, inner_product(f, g)), 1e-13)
    ff = inner_product(f, f)
    assert ff.w > 0 and abs(Quaternion(0.0, ff.x, ff.y, ff.z)) < 1e-15


# kernel

def test_kernel_at_theta_zero():
    alpha, x, y = 1.5, 2.0, 3.0
    assert r_series(0.0, alpha, x, y).w == pytest.approx(1 / math.gamma(2.5), rel=1e-15)
    expected = x**alpha * math.exp(-x) / math.gamma(2.5)
    assert k_kernel(0.0, alpha, x, y).w == pytest.approx(expected, rel=1e-14)


def test_series_value_lies_in_theta_slice():
    value = r_series(Quaternion(0.0, 0.0, 0.5), 1.0, 1.0, 2.0)
    assert value.x == 0.0 and value.z == 0.0
    assert q_mul(value, J).isclose(q_mul(J, value), 1e-15)
    assert r_series(0.5, 1.0, 1.0, 1.0).isclose(r_closed(0.5, 1.0, 1.0, 1.0), 1e-13)


def test_unit_theta_is_limit_from_inside():
    theta = Quaternion(1.0, 0.0, 0.0, 1.0) / math.sqrt(2.0)
    on_circle = r_closed(theta, 1.0, 1.0, 2.0)
    inside = r_closed(theta * (1 - 1e-8), 1.0, 1.0, 2.0)
    assert abs(on_circle - inside) < 1e-6


# transform

def test_spectral_simple_cases():
    c = CoeffVector(np.ones(3))
    assert np.array_equal(frht_spectral(c, -1.0).coeffs[:, 0], [1.0, -1.0, 1.0])
    assert np.array_equal(frht_spectral(c, 1.0).coeffs, c.coeffs)
    e0 = CoeffVector.basis(0)
    assert verify_plancherel(FrhtOperator(J, build_rule(1.0, 4)), e0, e0) == 0.0


def test_hankel_of_zero():
    assert hankel_reference(lambda u: np.zeros_like(u), 1.0, 2.0) == 0.0


def test_same_slice_composition_example():
    c = CoeffVector(np.ones((6, 4)))
    theta = Quaternion(0.0, 0.0, 0.5)
    twice = frht_spectral(frht_spectral(c, theta), theta)
    assert np.max(np.abs(twice.coeffs - frht_spectral(c, Quaternion(-0.25)).coeffs)) < 1e-15


# Bargmann

def test_bargmann_kernel_simple_cases():
    alpha = 2.5
    assert bargmann_kernel(3.0, Quaternion(0.0), alpha).w == pytest.approx(
        1 / math.sqrt(math.pi * math.gamma(alpha)), rel=1e-15)
    value = bargmann_kernel(1.0, Quaternion(0.2, 0.0, 0.5), alpha)
    assert value.x == 0.0 and value.z == 0.0


def test_forward_simple_cases():
    rule = build_rule(1.5, 64)
    F = bargmann_forward(synthesize(CoeffVector.basis(3), rule), 6)
    expected = np.zeros((7, 4))
    expected[3, 0] = monomial_norm(3, 1.5)
    assert np.max(np.abs(F.coeffs - expected)) < 1e-13
    assert np.max(np.abs(bargmann_forward(RadialSignal.zeros(rule), 6).coeffs)) == 0.0
    f = synthesize(CoeffVector.from_quaternions([Quaternion(1.0), I, J]), rule)
    q = Quaternion(0.3, 0.0, 0.2)
    assert bargmann_forward(f, 10).evaluate(q).isclose(bargmann_evaluate(f, q), 1e-8)


def test_inverse_simple_cases():
    rule = build_rule(2.0, 64)
    ground = bargmann_inverse(basis_series(0, 2.0), rule)
    assert norm(ground - synthesize(CoeffVector.basis(0), rule)) < 1e-8
    phi2 = synthesize(CoeffVector.basis(2), rule)
    assert norm(bargmann_inverse(bargmann_forward(phi2, 2), rule) - phi2) < 1e-6
    assert norm(bargmann_inverse(SliceRegularSeries(np.zeros((3, 4))), rule)) == 0.0


def test_star_product_examples(rng):
    one = SliceRegularSeries.from_quaternions([Quaternion(1.0)])
    g = SliceRegularSeries(rng.standard_normal((4, 4)))
    assert np.array_equal(star_product(one, g).coeffs, g.coeffs)
    a = SliceRegularSeries.from_quaternions([Quaternion(0.0), I])
    b = SliceRegularSeries.from_quaternions([Quaternion(0.0), J])
    assert np.array_equal(star_product(a, b).coeffs, [[0] * 4, [0] * 4, [0, 0, 0, 1]])
    f, g, h = (SliceRegularSeries(rng.standard_normal((5, 4))) for _ in range(3))
    left = star_product(star_product(f, g), h).coeffs
    right = star_product(f, star_product(g, h)).coeffs
    assert np.max(np.abs(left - right)) < 1e-13


def test_gamma_action_examples():
    F = SliceRegularSeries(np.arange(12.0).reshape(3, 4))
    assert np.array_equal(gamma_action(F, Quaternion(1.0)).coeffs, F.coeffs)
    theta = Quaternion(0.1, 0.2, -0.3, 0.4)
    G = gamma_action(basis_series(4, 1.0), theta)
    assert G[4].isclose(slice_power(theta, 4) * monomial_norm(4, 1.0), 1e-15)
    # applying theta then eta multiplies coefficient n by eta^n theta^n
    eta = Quaternion(0.0, 0.0, 0.0, 0.9)
    twice = gamma_action(gamma_action(F, theta), eta)
    for n in range(3):
        expected = q_mul(slice_power(eta, n), q_mul(slice_power(theta, n), F[n]))
        assert twice[n].isclose(expected, 1e-14)
    assert not twice[2].isclose(gamma_action(F, q_mul(eta, theta))[2], 1e-3)


def test_bergman_self_pairing_is_positive(rng):
    F = SliceRegularSeries(rng.standard_normal((6, 4)))
    value = bergman_inner(F, F, build_disc_rule(1.5), J)
    assert value.w > 0 and abs(Quaternion(0.0, value.x, value.y, value.z)) < 1e-12


def test_composed_transform_simple_cases():
    rule = build_rule(1.0, 64)
    phi4 = synthesize(CoeffVector.basis(4), rule)
    assert norm(frht_via_bargmann(phi4, Quaternion(1.0), N=4) - phi4) < 1e-6
    theta = Quaternion(0.3, 0.0, 0.6, 0.6)
    assert norm(frht_via_bargmann(phi4, theta, N=4) - phi4.right_scale(slice_power(theta, 4))) < 1e-6


def test_kernel_via_bergman_examples():
    theta = Quaternion(0.0, 0.0, 0.6)
    assert abs(kernel_via_bergman(theta, 1.0, 1.0, 2.0) - r_closed(theta, 1.0, 1.0, 2.0)) < 1e-7
    assert kernel_via_bergman(0.0, 2.0, 1.0, 3.0).isclose(Quaternion(0.5), 1e-13)
    a = kernel_via_bergman(theta, 1.0, 0.5, 4.0)
    b = kernel_via_bergman(theta, 1.0, 4.0, 0.5)
    assert abs(a - b) < 1e-10


def test_kernel_table_theta_zero(capsys):
    from qfht.cli import main

    assert main(["kernel-table", "--theta", "0,0,0,0", "--alpha", "2", "--x", "0.5,3", "--y", "1"]) == 0
    rows = [line.split(",") for line in capsys.readouterr().out.splitlines()[1:]]
    for row in rows:
        x = float(row[0])
        assert float(row[2]) == pytest.approx(x**2 * math.exp(-x) / 2.0, rel=1e-14)
