"""Quaternion algebra with slice (complex-plane) decomposition.

Every quaternion ``q`` lies in at least one slice ``C_I = R + I R`` where ``I``
is an imaginary unit (``I**2 == -1``).  Inside a slice quaternions commute and
behave like complex numbers, which is how powers, exponentials and all the
kernel evaluations in this package are carried out: map to a Python/numpy
complex number, compute, map back.

Scalar values use the immutable :class:`Quaternion`; bulk data (signals,
coefficient vectors) are ``numpy`` arrays of shape ``(..., 4)`` with
components ``(w, x, y, z)`` and are handled by :func:`qmul_array` and friends.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DomainError

__all__ = [
    "Quaternion",
    "ImaginaryUnit",
    "SliceForm",
    "ONE",
    "I",
    "J",
    "K",
    "CANONICAL_UNIT",
    "as_quaternion",
    "parse_quaternion",
    "q_mul",
    "q_inverse",
    "slice_decompose",
    "slice_power",
    "slice_exp",
    "slice_unit",
    "to_slice",
    "from_slice",
    "qmul_array",
    "qconj_array",
    "qnorm_array",
    "embed_complex",
    "left_unit_times",
    "slice_left_multiply",
]


@dataclass(frozen=True)
class Quaternion:
    """``w + x i + y j + z k`` with real components."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self) -> None:
        for name in ("w", "x", "y", "z"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        w, x, y, z = (float(v) for v in np.asarray(a, dtype=float).reshape(4))
        return cls(w, x, y, z)

    @classmethod
    def real(cls, r: float) -> "Quaternion":
        return cls(r, 0.0, 0.0, 0.0)

    def __iter__(self) -> Iterator[float]:
        yield from (self.w, self.x, self.y, self.z)

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def as_list(self) -> list[float]:
        return [self.w, self.x, self.y, self.z]

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def is_real(self) -> bool:
        return self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.sqrt(self.norm2())

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __add__(self, other) -> "Quaternion":
        o = as_quaternion(other)
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other) -> "Quaternion":
        o = as_quaternion(other)
        return Quaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other) -> "Quaternion":
        return as_quaternion(other) - self

    def __mul__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            return q_mul(self, other)
        r = float(other)
        return Quaternion(self.w * r, self.x * r, self.y * r, self.z * r)

    def __rmul__(self, other) -> "Quaternion":
        # only real scalars reach here, and those commute
        r = float(other)
        return Quaternion(self.w * r, self.x * r, self.y * r, self.z * r)

    def __truediv__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            return q_mul(self, q_inverse(other))
        r = float(other)
        return Quaternion(self.w / r, self.x / r, self.y / r, self.z / r)

    def isclose(self, other, tol: float = 1e-12) -> bool:
        return abs(self - as_quaternion(other)) <= tol

    def __repr__(self) -> str:
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


class ImaginaryUnit(Quaternion):
    """A pure quaternion of norm one, so that ``u * u == -1``."""

    def __post_init__(self) -> None:
        super().__post_init__()
        n = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if self.w != 0.0 or abs(n - 1.0) > 1e-12:
            raise DomainError(f"not an imaginary unit: {self.as_list()}")

    @classmethod
    def normalized(cls, x: float, y: float, z: float) -> "ImaginaryUnit":
        n = math.sqrt(x * x + y * y + z * z)
        if n == 0.0:
            raise DomainError("zero vector has no direction")
        return cls(0.0, x / n, y / n, z / n)

    def __repr__(self) -> str:
        return f"ImaginaryUnit({self.x!r}, {self.y!r}, {self.z!r})"


ONE = Quaternion(1.0)
I = ImaginaryUnit(0.0, 1.0, 0.0, 0.0)
J = ImaginaryUnit(0.0, 0.0, 1.0, 0.0)
K = ImaginaryUnit(0.0, 0.0, 0.0, 1.0)
CANONICAL_UNIT = I


@dataclass(frozen=True)
class SliceForm:
    """Polar form ``modulus * (cos(angle) + unit * sin(angle))``."""

    modulus: float
    angle: float
    unit: ImaginaryUnit

    def reconstruct(self) -> Quaternion:
        s = self.modulus * math.sin(self.angle)
        return Quaternion(
            self.modulus * math.cos(self.angle),
            s * self.unit.x,
            s * self.unit.y,
            s * self.unit.z,
        )


def as_quaternion(v) -> Quaternion:
    """Coerce a Quaternion, real number, complex (i-slice) or 4-sequence."""
    if isinstance(v, Quaternion):
        return v
    if isinstance(v, (int, float, np.floating, np.integer)):
        return Quaternion(float(v))
    if isinstance(v, (complex, np.complexfloating)):
        return Quaternion(v.real, v.imag)
    return Quaternion.from_array(v)


def parse_quaternion(text: str) -> Quaternion:
    """Parse the CLI syntax ``"w,x,y,z"``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated numbers, got {text!r}")
    return Quaternion(*(float(p) for p in parts))


def q_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b``."""
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def q_inverse(q: Quaternion) -> Quaternion:
    n2 = q.norm2()
    if n2 == 0.0:
        raise DomainError("zero quaternion has no inverse")
    return Quaternion(q.w / n2, -q.x / n2, -q.y / n2, -q.z / n2)


def slice_decompose(q: Quaternion) -> SliceForm:
    """Return the polar slice form of ``q`` with ``angle`` in ``[0, pi]``.

    Real quaternions belong to every slice; they get :data:`CANONICAL_UNIT`.
    """
    v = math.sqrt(q.x * q.x + q.y * q.y + q.z * q.z)
    modulus = abs(q)
    if v == 0.0:
        angle = math.pi if q.w < 0.0 else 0.0
        return SliceForm(modulus, angle, CANONICAL_UNIT)
    unit = ImaginaryUnit(0.0, q.x / v, q.y / v, q.z / v)
    return SliceForm(modulus, math.atan2(v, q.w), unit)


def slice_unit(q: Quaternion, default: ImaginaryUnit | None = None) -> ImaginaryUnit:
    """Imaginary unit of the slice containing ``q``.

    ``default`` overrides the canonical unit for real ``q`` only.
    """
    if q.is_real():
        return default if default is not None else CANONICAL_UNIT
    return slice_decompose(q).unit


def to_slice(q: Quaternion, unit: ImaginaryUnit) -> complex:
    """Complex coordinate ``a + ib`` of ``q = a + unit*b``.

    The component of ``q`` orthogonal to ``{1, unit}`` is discarded; callers
    pass quaternions that lie in the slice.
    """
    b = q.x * unit.x + q.y * unit.y + q.z * unit.z
    return complex(q.w, b)


def from_slice(c: complex, unit: ImaginaryUnit) -> Quaternion:
    c = complex(c)
    return Quaternion(c.real, c.imag * unit.x, c.imag * unit.y, c.imag * unit.z)


def slice_power(q: Quaternion, n: int) -> Quaternion:
    """``q**n`` computed in the slice of ``q``."""
    if n < 0:
        raise DomainError("slice_power takes n >= 0; use q_inverse first")
    unit = slice_unit(q)
    return from_slice(to_slice(q, unit) ** int(n), unit)


def slice_exp(q: Quaternion) -> Quaternion:
    """``exp(a + I b) = e**a (cos b + I sin b)``."""
    form_unit = slice_unit(q)
    b = math.sqrt(q.x * q.x + q.y * q.y + q.z * q.z)
    ea = math.exp(q.w)
    if b == 0.0:
        return Quaternion(ea)
    s = ea * math.sin(b)
    return Quaternion(ea * math.cos(b), s * form_unit.x, s * form_unit.y, s * form_unit.z)


# ---------------------------------------------------------------------------
# array helpers: quaternions stored along a trailing axis of length 4


def qmul_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product of ``(..., 4)`` arrays."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def qconj_array(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def qnorm_array(a: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(np.asarray(a, dtype=float) ** 2, axis=-1))


def embed_complex(c: np.ndarray, unit: Quaternion) -> np.ndarray:
    """Map complex numbers ``a + ib`` to quaternions ``a + unit*b``."""
    c = np.asarray(c, dtype=complex)
    out = np.empty(c.shape + (4,))
    out[..., 0] = c.real
    out[..., 1] = c.imag * unit.x
    out[..., 2] = c.imag * unit.y
    out[..., 3] = c.imag * unit.z
    return out


def left_unit_times(unit: Quaternion, a: np.ndarray) -> np.ndarray:
    """``unit * a`` for every quaternion in ``a``."""
    return qmul_array(unit.as_array(), a)


def slice_left_multiply(c: np.ndarray, unit: Quaternion, a: np.ndarray) -> np.ndarray:
    """``(Re c + unit Im c) * a`` elementwise, ``c`` broadcasting against ``a[..., 0]``."""
    c = np.asarray(c, dtype=complex)
    return c.real[..., None] * a + c.imag[..., None] * left_unit_times(unit, a)
