import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfht.errors import DomainError
from qfht.quaternion import (
    CANONICAL_UNIT,
    I,
    J,
    K,
    ImaginaryUnit,
    Quaternion,
    from_slice,
    parse_quaternion,
    q_inverse,
    q_mul,
    qmul_array,
    slice_decompose,
    slice_exp,
    slice_left_multiply,
    slice_power,
    to_slice,
)

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
quaternions = st.builds(Quaternion, finite, finite, finite, finite)
nonzero = quaternions.filter(lambda q: abs(q) > 1e-3)


def close(a, b, tol=1e-13):
    return abs(a - b) <= tol * max(1.0, abs(b))


def test_basis_relations():
    assert q_mul(I, J).isclose(K)
    assert q_mul(J, I).isclose(-K)
    assert q_mul(J, K).isclose(I)
    assert q_mul(K, I).isclose(J)
    for u in (I, J, K):
        assert q_mul(u, u) == Quaternion(-1.0)


def test_identity_and_conjugate():
    q = Quaternion(1.5, -2.0, 0.25, 3.0)
    assert q_mul(q, Quaternion(1.0)) == q
    assert q_mul(q, q.conj()) == Quaternion(q.norm2())


@given(quaternions, quaternions)
def test_norm_is_multiplicative(a, b):
    assert math.isclose(abs(q_mul(a, b)), abs(a) * abs(b), rel_tol=1e-13, abs_tol=1e-300)


@given(quaternions, quaternions, quaternions)
def test_associative(a, b, c):
    lhs = q_mul(q_mul(a, b), c)
    rhs = q_mul(a, q_mul(b, c))
    assert abs(lhs - rhs) <= 1e-12 * (abs(a) * abs(b) * abs(c) + 1e-300)


@given(nonzero)
def test_inverse(q):
    assert abs(q_mul(q, q_inverse(q)) - 1.0) < 1e-13
    assert abs(q_mul(q_inverse(q), q) - 1.0) < 1e-13


def test_inverse_examples():
    assert q_inverse(I) == -I
    assert q_inverse(Quaternion(2.0, 2.0)).isclose(Quaternion(2.0, -2.0) / 8.0)
    unit = Quaternion(0.6, 0.0, 0.0, 0.8)
    assert q_inverse(unit).isclose(unit.conj())
    with pytest.raises(DomainError):
        q_inverse(Quaternion())


@given(nonzero, st.integers(min_value=0, max_value=32))
@settings(max_examples=50)
def test_power_matches_repeated_product(q, n):
    q = q * (1.2 / abs(q))
    acc = Quaternion(1.0)
    for _ in range(n):
        acc = q_mul(acc, q)
    assert abs(slice_power(q, n) - acc) <= 1e-11 * abs(acc)


def test_power_examples():
    assert slice_power(I, 2).isclose(-1.0)
    assert slice_power(Quaternion(3.0, 1.0, -2.0, 0.5), 0) == Quaternion(1.0)
    q = Quaternion(1.0, 0.0, 0.0, 1.0) / math.sqrt(2.0)
    assert slice_power(q, 4).isclose(-1.0, 1e-15)


@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5),
       st.tuples(finite, finite, finite).filter(lambda v: sum(x * x for x in v) > 1e-6))
def test_same_slice_commutes(a, b, c, d, direction):
    unit = ImaginaryUnit.normalized(*direction)
    s = from_slice(complex(a, b), unit)
    t = from_slice(complex(c, d), unit)
    assert abs(q_mul(s, t) - q_mul(t, s)) < 1e-13 * max(1.0, abs(s) * abs(t))


def test_slice_decompose_examples():
    f = slice_decompose(Quaternion(0.0, 2.0))
    assert (f.modulus, f.angle, f.unit) == (2.0, math.pi / 2, I)
    f = slice_decompose(Quaternion(-3.0))
    assert f.modulus == 3.0 and f.angle == math.pi and f.unit == CANONICAL_UNIT
    q = Quaternion(1.0, 0.0, 1.0, 0.0) * (5.0 / math.sqrt(2.0))
    f = slice_decompose(q)
    assert math.isclose(f.modulus, 5.0) and math.isclose(f.angle, math.pi / 4) and f.unit.isclose(J)


@given(quaternions)
def test_slice_decompose_reconstructs(q):
    f = slice_decompose(q)
    assert 0.0 <= f.angle <= math.pi
    assert abs(f.reconstruct() - q) <= 1e-13 * max(1.0, abs(q))


def test_slice_exp_examples():
    assert slice_exp(Quaternion()) == Quaternion(1.0)
    assert slice_exp(Quaternion(0.0, math.pi)).isclose(-1.0, 1e-15)
    assert slice_exp(Quaternion(1.0, 0.0, math.pi / 2)).isclose(J * math.e, 1e-15)


def test_imaginary_unit_validation():
    with pytest.raises(DomainError):
        ImaginaryUnit(0.0, 1.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        ImaginaryUnit(0.1, 1.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        ImaginaryUnit.normalized(0.0, 0.0, 0.0)


def test_slice_round_trip():
    unit = ImaginaryUnit.normalized(1.0, -2.0, 0.5)
    z = complex(0.3, -1.7)
    assert to_slice(from_slice(z, unit), unit) == pytest.approx(z, abs=1e-15)


def test_array_product_matches_scalar(rng):
    a = rng.standard_normal((20, 4))
    b = rng.standard_normal((20, 4))
    prods = qmul_array(a, b)
    for x, y, p in zip(a, b, prods):
        assert q_mul(Quaternion.from_array(x), Quaternion.from_array(y)).isclose(Quaternion.from_array(p), 1e-14)


def test_slice_left_multiply(rng):
    unit = ImaginaryUnit.normalized(0.2, 0.3, -0.9)
    c = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    a = rng.standard_normal((5, 4))
    out = slice_left_multiply(c, unit, a)
    for ci, ai, oi in zip(c, a, out):
        expected = q_mul(from_slice(ci, unit), Quaternion.from_array(ai))
        assert expected.isclose(Quaternion.from_array(oi), 1e-14)


def test_parse_quaternion():
    assert parse_quaternion("1, -2.5,0,3e-1") == Quaternion(1.0, -2.5, 0.0, 0.3)
    with pytest.raises(ValueError):
        parse_quaternion("1,2,3")
    with pytest.raises(ValueError):
        parse_quaternion("a,b,c,d")


def test_mixed_arithmetic():
    q = Quaternion(1.0, 2.0, 3.0, 4.0)
    assert q + 1 == Quaternion(2.0, 2.0, 3.0, 4.0)
    assert 2 * q == q * 2 == Quaternion(2.0, 4.0, 6.0, 8.0)
    assert 1 - q == Quaternion(0.0, -2.0, -3.0, -4.0)
    assert (q / q).isclose(1.0)
    assert np.array_equal(q.as_array(), [1.0, 2.0, 3.0, 4.0])
