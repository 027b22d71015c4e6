"""
Twistor Geometry
CP^3 points, the twistor projection, the j-involution, fiber lines, twistor lifts
and conformal lifts
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from config import config
from exceptions import NotInvertible, OutOfDomain
from qcore import Quaternion, join_array, qinv, qmul
from slice_function import SliceFunction, eval_many
from utils import chordal_distance, complex_pairs


@dataclass(frozen=True)
class ProjPoint3:
    """[X0, X1, X2, X3] in CP^3"""

    coords: Tuple[complex, complex, complex, complex]

    def __post_init__(self):
        coords = tuple(complex(x) for x in self.coords)
        if len(coords) != 4:
            raise ValueError("CP^3 points need four coordinates")
        if all(x == 0 for x in coords):
            raise ValueError("homogeneous coordinates cannot all vanish")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords) -> "ProjPoint3":
        return cls(tuple(coords))

    def as_array(self) -> np.ndarray:
        return np.array(self.coords, dtype=complex)

    def normalized(self) -> "ProjPoint3":
        """Unit norm with the first nonzero coordinate real and positive"""
        arr = self.as_array()
        pivot = arr[np.flatnonzero(np.abs(arr) > 0)[0]]
        arr = arr * (abs(pivot) / pivot) / np.linalg.norm(arr)
        return ProjPoint3(tuple(arr))

    def distance(self, other: "ProjPoint3") -> float:
        return chordal_distance(self.as_array(), other.as_array())

    def equals(self, other: "ProjPoint3", tol: Optional[float] = None) -> bool:
        tol = config.CHORDAL_TOL if tol is None else tol
        return self.distance(other) < tol

    def as_json(self) -> List[List[float]]:
        return complex_pairs(self.coords)


def project_array(X: np.ndarray) -> np.ndarray:
    """
    Vectorised twistor projection of an (n, 4) complex stack

    Returns:
        (n, 4) quaternion array; rows over infinity are inf
    """
    X = np.asarray(X, dtype=complex)
    left = join_array(X[..., 0], X[..., 1])
    right = join_array(X[..., 2], X[..., 3])
    out = qmul(qinv(left), right)
    at_infinity = np.all(left == 0, axis=-1)
    out[at_infinity] = np.inf
    return out


def project(p: ProjPoint3) -> Optional[Quaternion]:
    """
    pi[X0, X1, X2, X3] = (X0 + X1 j)^-1 (X2 + X3 j)

    Returns:
        Quaternion, or None for the point at infinity
    """
    X0, X1, X2, X3 = p.coords
    if X0 == 0 and X1 == 0:
        return None
    left = Quaternion.from_split(X0, X1)
    right = Quaternion.from_split(X2, X3)
    return left.inverse() * right


def j_map_array(X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=complex)
    return np.stack([-np.conj(X[..., 1]), np.conj(X[..., 0]), -np.conj(X[..., 3]), np.conj(X[..., 2])], axis=-1)


def j_map(p: ProjPoint3) -> ProjPoint3:
    """[X0, X1, X2, X3] -> [-conj X1, conj X0, -conj X3, conj X2]"""
    return ProjPoint3(tuple(j_map_array(p.as_array())))


@dataclass(frozen=True)
class FiberLine:
    """Twistor fiber over q, or over infinity when q is None"""

    q: Optional[Quaternion]

    def point(self, X0: complex, X1: complex) -> ProjPoint3:
        """[X0, X1, X0 q1 - X1 conj(q2), X0 q2 + X1 conj(q1)]"""
        if self.q is None:
            return ProjPoint3.of(0, 0, X0, X1)
        q1, q2 = self.q.split()
        return ProjPoint3.of(X0, X1, X0 * q1 - X1 * q2.conjugate(), X0 * q2 + X1 * q1.conjugate())

    def points(self, params: Sequence[Tuple[complex, complex]]) -> np.ndarray:
        return np.array([self.point(a, b).coords for a, b in params], dtype=complex)

    @classmethod
    def at_infinity(cls) -> "FiberLine":
        return cls(None)

    def contains(self, p: ProjPoint3, tol: Optional[float] = None) -> bool:
        tol = config.CHORDAL_TOL if tol is None else tol
        image = project(p)
        if self.q is None or image is None:
            return self.q is None and image is None
        return image.distance(self.q) < tol * (1.0 + self.q.norm())


def lift_array(f: SliceFunction, u, v, strict: bool = False) -> np.ndarray:
    """
    Vectorised twistor lift [1, u, g - u hhat, h + u ghat]

    Args:
        f: slice function
        u: complex array (nan/inf entries are not allowed; use lift for u = infinity)
        v: complex array in D+
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    g, gh, h, hh = f.quadruple(v, strict=strict)
    u, g, gh, h, hh = np.broadcast_arrays(u, g, gh, h, hh)
    return np.stack([np.ones_like(u), u, g - u * hh, h + u * gh], axis=-1)


def lift(f: SliceFunction, u: Optional[complex], v: complex) -> ProjPoint3:
    """
    Twistor lift of f at (u, v)

    Args:
        f: slice function
        u: fiber coordinate; None selects the chart at u = infinity, [0, 1, -hhat, ghat]
        v: point of D+ with positive imaginary part

    Raises:
        OutOfDomain: if v is not in D+
    """
    v = complex(v)
    if v.imag <= 0 or not bool(f.domain.contains(v)):
        raise OutOfDomain(f"v = {v} is not in the domain of {f.name or 'f'}")
    g, gh, h, hh = f.quadruple(v, strict=True)
    if u is None:
        return ProjPoint3.of(0, 1, -hh, gh)
    u = complex(u)
    return ProjPoint3.of(1, u, g - u * hh, h + u * gh)


def base_points(u, v) -> np.ndarray:
    """[1, u, v, uv]: the point of Q+ over alpha + I(u) beta"""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    u, v = np.broadcast_arrays(u, v)
    return np.stack([np.ones_like(u), u, v, u * v], axis=-1)


def commuting_square_residuals(f: SliceFunction, u, v) -> np.ndarray:
    """
    |pi(lift(f, u, v)) - f(pi[1, u, v, uv])| / (1 + |f(...)|) at each sample

    Args:
        f: slice function
        u: complex fiber coordinates
        v: complex points of D+
    """
    upstairs = project_array(lift_array(f, u, v))
    downstairs = eval_many(f, project_array(base_points(u, v)))
    return np.linalg.norm(upstairs - downstairs, axis=-1) / (1.0 + np.linalg.norm(downstairs, axis=-1))


# ---------------------------------------------------------------------------
# Conformal lifts
# ---------------------------------------------------------------------------


def _block(p: Quaternion) -> np.ndarray:
    """Matrix of X0 + X1 j -> (X0 + X1 j) p on the pair (X0, X1)"""
    p1, p2 = p.split()
    return np.array([[p1, -p2.conjugate()], [p2, p1.conjugate()]], dtype=complex)


def invertibility(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> float:
    """|a|^2 |d|^2 + |b|^2 |c|^2 - 2 Re(b^c d c^c a)"""
    cross = (b.conj() * d * c.conj() * a).real
    return a.norm2() * d.norm2() + b.norm2() * c.norm2() - 2.0 * cross


def conformal_lift(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> np.ndarray:
    """
    4x4 complex matrix lifting [q1, q2] -> [q1 d + q2 c, q1 b + q2 a]

    Raises:
        NotInvertible: when the induced Mobius map is degenerate
    """
    det = invertibility(a, b, c, d)
    scale = max(a.norm2() * d.norm2(), b.norm2() * c.norm2(), 1.0)
    if abs(det) <= config.ZERO_COEF_TOL * scale:
        raise NotInvertible(f"|a|^2|d|^2 + |b|^2|c|^2 - 2Re(b^c d c^c a) = {det:.3e}")
    return np.block([[_block(d), _block(c)], [_block(b), _block(a)]])


def mobius(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Callable[[Quaternion], Optional[Quaternion]]:
    """q -> (q c + d)^-1 (q a + b); None at the pole"""

    def apply(q: Quaternion) -> Optional[Quaternion]:
        den = q * c + d
        if den.norm2() == 0.0:
            return None
        return den.inverse() * (q * a + b)

    return apply


# ---------------------------------------------------------------------------
# Lines
# ---------------------------------------------------------------------------

PLUCKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def plucker(p, q) -> np.ndarray:
    """
    Plucker coordinates of the line through two CP^3 points

    Returns:
        xi_hk = p_h q_k - p_k q_h in the order 01, 02, 03, 12, 13, 23
    """
    p = np.asarray(p.as_array() if isinstance(p, ProjPoint3) else p, dtype=complex)
    q = np.asarray(q.as_array() if isinstance(q, ProjPoint3) else q, dtype=complex)
    return np.stack([p[..., h] * q[..., k] - p[..., k] * q[..., h] for h, k in PLUCKER_PAIRS], axis=-1)


def line_through(p: ProjPoint3, q: ProjPoint3) -> np.ndarray:
    """Plucker vector of the line pq; raises if p and q coincide"""
    xi = plucker(p, q)
    if np.max(np.abs(xi)) <= config.ZERO_COEF_TOL * np.linalg.norm(p.as_array()) * np.linalg.norm(q.as_array()):
        raise ValueError("points coincide, no line through them")
    return xi


def fiber_plucker(q: Quaternion) -> np.ndarray:
    """Plucker vector of the fiber over q, spanned by its points at [1, 0] and [0, 1]"""
    line = FiberLine(q)
    return plucker(line.point(1, 0), line.point(0, 1))


def fiber_equations(q: Quaternion) -> Tuple[np.ndarray, np.ndarray]:
    """Equation vectors e1, e2 with e1 . X = e2 . X = 0 on the fiber over q"""
    q1, q2 = q.split()
    e1 = np.array([q1, -q2.conjugate(), -1, 0], dtype=complex)
    e2 = np.array([q2, q1.conjugate(), 0, -1], dtype=complex)
    return e1, e2


def quadric_Q_values(X: np.ndarray) -> np.ndarray:
    """X0 X3 - X1 X2"""
    X = np.asarray(X, dtype=complex)
    return X[..., 0] * X[..., 3] - X[..., 1] * X[..., 2]


__all__ = [
    "ProjPoint3", "FiberLine", "project", "project_array", "j_map", "j_map_array", "lift",
    "lift_array", "base_points", "commuting_square_residuals", "conformal_lift",
    "invertibility", "mobius", "plucker", "line_through", "fiber_plucker", "fiber_equations",
    "quadric_Q_values",
]
