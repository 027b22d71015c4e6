"""
Quaternion Core
Quaternion and H⊗C arithmetic, slice coordinates and the u <-> I chart
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from exceptions import RealInput, SouthPole

Real = Union[int, float]


# ---------------------------------------------------------------------------
# Vectorised kernels on (..., 4) arrays in the basis (1, i, j, k)
# ---------------------------------------------------------------------------


def qmul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Hamilton product of two stacks of quaternions"""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    p0, p1, p2, p3 = np.moveaxis(p, -1, 0)
    q0, q1, q2, q3 = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
        ],
        axis=-1,
    )


def qconj(q: np.ndarray) -> np.ndarray:
    """Quaternion conjugate q^c"""
    q = np.asarray(q, dtype=float)
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def qnorm2(q: np.ndarray) -> np.ndarray:
    return np.sum(np.asarray(q, dtype=float) ** 2, axis=-1)


def qinv(q: np.ndarray) -> np.ndarray:
    """Multiplicative inverse; zero quaternions give inf/nan entries"""
    with np.errstate(divide="ignore", invalid="ignore"):
        return qconj(q) / qnorm2(q)[..., None]


def left_matrix(q: np.ndarray) -> np.ndarray:
    """
    Real 4x4 matrix of v -> q v

    Args:
        q: quaternion array of shape (..., 4)

    Returns:
        Array of shape (..., 4, 4)
    """
    q = np.asarray(q, dtype=float)
    q0, q1, q2, q3 = np.moveaxis(q, -1, 0)
    rows = [
        [q0, -q1, -q2, -q3],
        [q1, q0, -q3, q2],
        [q2, q3, q0, -q1],
        [q3, -q2, q1, q0],
    ]
    return np.stack([np.stack(row, axis=-1) for row in rows], axis=-2)


def split_array(q: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Write q = q1 + q2 j with q1, q2 in C_i"""
    q = np.asarray(q, dtype=float)
    return q[..., 0] + 1j * q[..., 1], q[..., 2] + 1j * q[..., 3]


def join_array(q1, q2) -> np.ndarray:
    """Inverse of split_array"""
    q1 = np.asarray(q1, dtype=complex)
    q2 = np.asarray(q2, dtype=complex)
    q1, q2 = np.broadcast_arrays(q1, q2)
    return np.stack([q1.real, q1.imag, q2.real, q2.imag], axis=-1)


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Quaternion:
    """q = q0 + q1 i + q2 j + q3 k"""

    q0: float
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    @classmethod
    def from_array(cls, arr) -> "Quaternion":
        a = np.asarray(arr, dtype=float).reshape(4)
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    @classmethod
    def from_split(cls, q1: complex, q2: complex = 0j) -> "Quaternion":
        q1 = complex(q1)
        q2 = complex(q2)
        return cls(q1.real, q1.imag, q2.real, q2.imag)

    @classmethod
    def from_complex(cls, z: complex, unit: "ImaginaryUnit" = None) -> "Quaternion":
        """Embed z = x + iy as x + I y (I defaults to i)"""
        z = complex(z)
        if unit is None:
            return cls(z.real, z.imag, 0.0, 0.0)
        return cls(z.real) + unit.as_quaternion() * z.imag

    def as_array(self) -> np.ndarray:
        return np.array([self.q0, self.q1, self.q2, self.q3], dtype=float)

    def to_json(self) -> List[float]:
        return [self.q0, self.q1, self.q2, self.q3]

    def split(self) -> Tuple[complex, complex]:
        return complex(self.q0, self.q1), complex(self.q2, self.q3)

    @property
    def real(self) -> float:
        return self.q0

    @property
    def imag(self) -> "Quaternion":
        return Quaternion(0.0, self.q1, self.q2, self.q3)

    def imag_norm(self) -> float:
        return float(np.sqrt(self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3))

    def conj(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm2(self) -> float:
        return self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3

    def norm(self) -> float:
        return float(np.sqrt(self.norm2()))

    def inverse(self) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        c = self.conj()
        return Quaternion(c.q0 / n2, c.q1 / n2, c.q2 / n2, c.q3 / n2)

    def is_real(self, tol: float = 0.0) -> bool:
        return self.imag_norm() <= tol

    def distance(self, other: "Quaternion") -> float:
        return (self - other).norm()

    def __add__(self, other):
        other = _coerce(other)
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1, self.q2 + other.q2, self.q3 + other.q3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1, self.q2 - other.q2, self.q3 - other.q3)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.q0 * other, self.q1 * other, self.q2 * other, self.q3 * other)
        other = _coerce(other)
        return Quaternion.from_array(qmul(self.as_array(), other.as_array()))

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return _coerce(other) * self

    def __truediv__(self, other):
        """Right division p q^-1"""
        if isinstance(other, (int, float)):
            return Quaternion(self.q0 / other, self.q1 / other, self.q2 / other, self.q3 / other)
        return self * _coerce(other).inverse()

    def __repr__(self) -> str:
        return f"Quaternion({self.q0!r}, {self.q1!r}, {self.q2!r}, {self.q3!r})"


def _coerce(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(float(value))
    if isinstance(value, complex):
        return Quaternion(value.real, value.imag)
    raise TypeError(f"cannot treat {type(value).__name__} as a quaternion")


ONE = Quaternion(1.0)
QI = Quaternion(0.0, 1.0)
QJ = Quaternion(0.0, 0.0, 1.0)
QK = Quaternion(0.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class ImaginaryUnit:
    """I = a i + b j + c k with a^2 + b^2 + c^2 = 1"""

    a: float
    b: float
    c: float

    def __post_init__(self):
        n2 = self.a * self.a + self.b * self.b + self.c * self.c
        if abs(n2 - 1.0) > 1e-9:
            raise ValueError(f"imaginary unit must have norm 1, got norm^2 = {n2}")

    @classmethod
    def from_vector(cls, vec) -> "ImaginaryUnit":
        """Normalise a nonzero 3-vector"""
        v = np.asarray(vec, dtype=float).reshape(3)
        n = float(np.linalg.norm(v))
        if n == 0.0:
            raise RealInput("zero vector has no direction")
        v = v / n
        return cls(float(v[0]), float(v[1]), float(v[2]))

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "ImaginaryUnit":
        return cls.from_vector([q.q1, q.q2, q.q3])

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.a, self.b, self.c)

    def as_vector(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c])

    def neg(self) -> "ImaginaryUnit":
        return ImaginaryUnit(-self.a, -self.b, -self.c)

    def __neg__(self) -> "ImaginaryUnit":
        return self.neg()


UNIT_I = ImaginaryUnit(1.0, 0.0, 0.0)
UNIT_J = ImaginaryUnit(0.0, 1.0, 0.0)
UNIT_K = ImaginaryUnit(0.0, 0.0, 1.0)


@dataclass(frozen=True)
class SliceCoords:
    """x = alpha + I beta with beta > 0"""

    alpha: float
    beta: float
    I: ImaginaryUnit

    def __post_init__(self):
        if not self.beta > 0:
            raise RealInput(f"slice coordinates need beta > 0, got {self.beta}")

    @property
    def v(self) -> complex:
        """The point alpha + i beta of the upper half-plane"""
        return complex(self.alpha, self.beta)

    def to_quaternion(self) -> Quaternion:
        return Quaternion(
            self.alpha, self.I.a * self.beta, self.I.b * self.beta, self.I.c * self.beta
        )

    def conj(self) -> "SliceCoords":
        """x^c = alpha - I beta, canonicalised to (alpha, beta, -I)"""
        return SliceCoords(self.alpha, self.beta, self.I.neg())


def decompose(q: Quaternion, tol: float = 0.0) -> SliceCoords:
    """
    Write q = alpha + I beta with beta > 0

    Args:
        q: quaternion off the real axis
        tol: |Im q| at or below this counts as real

    Returns:
        SliceCoords
    """
    beta = q.imag_norm()
    if beta <= tol or beta == 0.0:
        raise RealInput(f"{q!r} lies on the real axis")
    unit = ImaginaryUnit.from_vector([q.q1, q.q2, q.q3])
    return SliceCoords(q.q0, beta, unit)


def recompose(coords: SliceCoords) -> Quaternion:
    return coords.to_quaternion()


def decompose_array(x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Vectorised decompose

    Returns:
        (alpha, beta, units) with units of shape (..., 3); beta = 0 rows give nan units
    """
    x = np.asarray(x, dtype=float)
    alpha = x[..., 0]
    beta = np.linalg.norm(x[..., 1:], axis=-1)
    with np.errstate(divide="ignore", invalid="ignore"):
        units = x[..., 1:] / beta[..., None]
    return alpha, beta, units


def u_from_I(unit: ImaginaryUnit) -> complex:
    """Stereographic chart u = -i (b + i c) / (1 + a)"""
    if 1.0 + unit.a == 0.0:
        raise SouthPole("I = -i has no finite u")
    return -1j * complex(unit.b, unit.c) / (1.0 + unit.a)


def I_from_u(u: complex) -> ImaginaryUnit:
    """Inverse chart: a = (1 - |u|^2)/(1 + |u|^2), b + i c = 2 i u/(1 + |u|^2)"""
    u = complex(u)
    r2 = abs(u) ** 2
    a = (1.0 - r2) / (1.0 + r2)
    bc = 2j * u / (1.0 + r2)
    return ImaginaryUnit.from_vector([a, bc.real, bc.imag])


def Q_u(u: complex) -> Quaternion:
    """Q_u = 1 + u j, so that Q_u^-1 i Q_u = I(u)"""
    return Quaternion.from_split(1.0, complex(u))


# ---------------------------------------------------------------------------
# H ⊗ C
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CQuaternion:
    """p = x + sqrt(-1) y with x, y quaternions"""

    x: Quaternion
    y: Quaternion = Quaternion(0.0)

    def stem_conj(self) -> "CQuaternion":
        """p^c = x^c + sqrt(-1) y^c"""
        return CQuaternion(self.x.conj(), self.y.conj())

    def bar(self) -> "CQuaternion":
        """Complex conjugation in the sqrt(-1) factor"""
        return CQuaternion(self.x, -self.y)

    def __add__(self, other: "CQuaternion") -> "CQuaternion":
        return CQuaternion(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "CQuaternion") -> "CQuaternion":
        return CQuaternion(self.x - other.x, self.y - other.y)

    def __mul__(self, other: "CQuaternion") -> "CQuaternion":
        return cq_mul(self, other)

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.x.as_array(), self.y.as_array()])

    def distance(self, other: "CQuaternion") -> float:
        return float(np.linalg.norm(self.as_array() - other.as_array()))


def cq_mul(p: CQuaternion, q: CQuaternion) -> CQuaternion:
    """(x + √-1 y)(z + √-1 t) = xz - yt + √-1 (xt + yz)"""
    return CQuaternion(p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x)


def cq_mul_bruteforce(p: CQuaternion, q: CQuaternion) -> CQuaternion:
    """Expand both factors over the 8 real basis elements e_a ⊗ s and multiply termwise"""
    pa = p.as_array()
    qa = q.as_array()
    out = np.zeros(8)
    basis = np.eye(4)
    for s in range(2):
        for t in range(2):
            # sqrt(-1) is central and squares to -1
            sign = -1.0 if (s and t) else 1.0
            slot = 4 * ((s + t) % 2)
            for a in range(4):
                for b in range(4):
                    coef = pa[4 * s + a] * qa[4 * t + b]
                    if coef == 0.0:
                        continue
                    out[slot : slot + 4] += sign * coef * qmul(basis[a], basis[b])
    return CQuaternion(Quaternion.from_array(out[:4]), Quaternion.from_array(out[4:]))
