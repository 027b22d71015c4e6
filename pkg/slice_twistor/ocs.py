"""
Orthogonal Complex Structures
Structure matrices, differentials of slice functions, push-forward structures and
the x(1 - Ii)/2 image/preimage machinery
"""

from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from config import config
from exceptions import RealInput, SingularDifferential, WrongHalfSpace
from logger import log_structured, logger
from qcore import ImaginaryUnit, Quaternion, SliceCoords, decompose, decompose_array, left_matrix, qinv, qmul
from slice_function import SliceFunction, eval_many, slice_derivative, spherical_derivative_many
from twistor import ProjPoint3

BASIS = np.eye(4)


@dataclass(frozen=True)
class CSMatrix:
    """4x4 real matrix on T_pH = H in the basis (1, i, j, k)"""

    matrix: np.ndarray
    label: str = ""
    # set by pushforward: distance to left multiplication by I_x
    residual: Optional[float] = None

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (4, 4):
            raise ValueError(f"structure matrices are 4x4, got {m.shape}")
        object.__setattr__(self, "matrix", m)

    def residuals(self) -> Dict[str, float]:
        """Distance from M^2 = -Id, M^T M = Id and det M = 1"""
        m = self.matrix
        return {
            "square": float(np.max(np.abs(m @ m + BASIS))),
            "orthogonal": float(np.max(np.abs(m.T @ m - BASIS))),
            "det": float(abs(np.linalg.det(m) - 1.0)),
        }

    def is_valid(self, tol: Optional[float] = None) -> bool:
        tol = config.STRUCTURAL_TOL if tol is None else tol
        return max(self.residuals().values()) < tol

    def distance(self, other: "CSMatrix") -> float:
        return float(np.max(np.abs(self.matrix - other.matrix)))

    def to_json(self):
        return self.matrix.tolist()


def structure_residuals_many(M: np.ndarray) -> np.ndarray:
    """Largest CSMatrix residual for each matrix of an (n, 4, 4) stack"""
    M = np.asarray(M, dtype=float)
    square = np.max(np.abs(M @ M + BASIS), axis=(-2, -1))
    orthogonal = np.max(np.abs(np.swapaxes(M, -1, -2) @ M - BASIS), axis=(-2, -1))
    det = np.abs(np.linalg.det(M) - 1.0)
    return np.maximum(np.maximum(square, orthogonal), det)


def j_from_twistor(u: complex) -> CSMatrix:
    """
    Structure at the point [1, u, ...] of the first chart

    Args:
        u: fiber coordinate x + iy

    Returns:
        -1/(1 + |u|^2) times the antisymmetric matrix in A = 1 - |u|^2, 2x, 2y
    """
    u = complex(u)
    x, y = u.real, u.imag
    r2 = abs(u) ** 2
    A = 1.0 - r2
    m = np.array(
        [
            [0.0, A, 2 * y, -2 * x],
            [-A, 0.0, -2 * x, -2 * y],
            [-2 * y, 2 * x, 0.0, A],
            [2 * x, 2 * y, -A, 0.0],
        ]
    )
    return CSMatrix(-m / (1.0 + r2), label=f"J(u={u})")


def j_at_point(p: ProjPoint3) -> CSMatrix:
    X0, X1 = p.coords[0], p.coords[1]
    if X0 == 0:
        raise ValueError("point lies outside the chart X0 = 1")
    return j_from_twistor(X1 / X0)


def j_slice(p: Quaternion) -> CSMatrix:
    """
    Left multiplication by Im(p)/|Im(p)|

    Raises:
        RealInput: if p is real
    """
    coords = decompose(p)
    unit = coords.I
    return CSMatrix(left_matrix(np.array([0.0, unit.a, unit.b, unit.c])), label="J_slice")


J_I = j_slice(Quaternion(0.0, 1.0))


def _right_matrices(q: np.ndarray) -> np.ndarray:
    """(..., 4, 4) matrices of v -> v q"""
    q = np.asarray(q, dtype=float)
    return np.stack([qmul(np.broadcast_to(BASIS[n], q.shape), q) for n in range(4)], axis=-1)


def _slice_projectors(X: np.ndarray) -> np.ndarray:
    """Orthogonal projectors of R^4 onto C_{I_x}"""
    _, beta, units = decompose_array(X)
    if np.any(beta == 0):
        raise RealInput("the differential is assembled off the real axis")
    Iq = np.concatenate([np.zeros(units.shape[:-1] + (1,)), units], axis=-1)
    e0 = np.broadcast_to(BASIS[0], Iq.shape)
    return e0[..., :, None] * e0[..., None, :] + Iq[..., :, None] * Iq[..., None, :]


def differential_many(f: SliceFunction, X: np.ndarray) -> np.ndarray:
    """
    Matrices of (df)_x for an (n, 4) stack

    (df)_x(v1 + v2) = v1 df/dx(x) + v2 d_s f(x) with v1 in C_{I_x}, v2 orthogonal to it.
    """
    X = np.asarray(X, dtype=float)
    P = _slice_projectors(X)
    D = eval_many(slice_derivative(f), X)
    S = spherical_derivative_many(f, X)
    return _right_matrices(D) @ P + _right_matrices(S) @ (BASIS - P)


@dataclass(frozen=True)
class Differential:
    x: Quaternion
    matrix: np.ndarray
    function: Optional[SliceFunction] = None

    def apply(self, v: Quaternion) -> Quaternion:
        return Quaternion.from_array(self.matrix @ v.as_array())

    def rank(self, tol: Optional[float] = None) -> int:
        singular = np.linalg.svd(self.matrix, compute_uv=False)
        tol = config.STRUCTURAL_TOL * max(1.0, float(singular[0])) if tol is None else tol
        return int(np.sum(singular > tol))

    def fd_residual(self, step: Optional[float] = None) -> float:
        """Relative distance to the central-difference Jacobian of f"""
        step = config.FD_STEP if step is None else step
        if self.function is None:
            raise ValueError("no function attached to this differential")
        x = self.x.as_array()
        plus = eval_many(self.function, x[None, :] + step * BASIS)
        minus = eval_many(self.function, x[None, :] - step * BASIS)
        jacobian = ((plus - minus) / (2.0 * step)).T
        return float(np.max(np.abs(jacobian - self.matrix)) / max(1.0, float(np.max(np.abs(self.matrix)))))


def differential(f: SliceFunction, x: Quaternion) -> Differential:
    """
    Differential of f at x

    Raises:
        RealInput: if x is real
    """
    decompose(x)
    return Differential(x=x, matrix=differential_many(f, x.as_array()[None, :])[0], function=f)


def pushforward_many(f: SliceFunction, X: np.ndarray) -> np.ndarray:
    """(df) J_x (df)^-1 for an (n, 4) stack; singular differentials give nan"""
    X = np.asarray(X, dtype=float)
    M = differential_many(f, X)
    _, _, units = decompose_array(X)
    J = left_matrix(np.concatenate([np.zeros(units.shape[:-1] + (1,)), units], axis=-1))
    out = np.full(M.shape, np.nan)
    good = np.abs(np.linalg.det(M)) > config.ZERO_COEF_TOL
    if np.any(good):
        # M J M^-1 = (M^-T J^T M^T)^T
        MT = np.swapaxes(M[good], -1, -2)
        out[good] = np.swapaxes(np.linalg.solve(MT, np.swapaxes(J[good], -1, -2) @ MT), -1, -2)
    return out


def pushforward_residuals(f: SliceFunction, X: np.ndarray) -> np.ndarray:
    """Distance between the push-forward structure and left multiplication by I_x"""
    X = np.asarray(X, dtype=float)
    _, _, units = decompose_array(X)
    J = left_matrix(np.concatenate([np.zeros(units.shape[:-1] + (1,)), units], axis=-1))
    return np.max(np.abs(pushforward_many(f, X) - J), axis=(-2, -1))


def pushforward(f: SliceFunction, x: Quaternion) -> CSMatrix:
    """
    Push-forward of the slice structure by f, taken at f(x)

    The returned matrix carries its distance to left multiplication by I_x
    in ``residual``; callers compare it with PUSHFORWARD_TOL.

    Raises:
        SingularDifferential: if (df)_x has rank below 4
    """
    d = differential(f, x)
    rank = d.rank()
    if rank < 4:
        raise SingularDifferential(f"(df)_x has rank {rank} at {x!r}")
    pushed = d.matrix @ j_slice(x).matrix @ np.linalg.inv(d.matrix)
    residual = float(np.max(np.abs(pushed - j_slice(x).matrix)))
    result = CSMatrix(pushed, label="J^f", residual=residual)
    if residual > config.PUSHFORWARD_TOL:
        log_structured(logger, "warning", "push-forward differs from I_x", x=repr(x), residual=f"{residual:.3e}")
    return result


# ---------------------------------------------------------------------------
# g(q) = q^-1 and the structure J^f
# ---------------------------------------------------------------------------


def _check_half_space(q: np.ndarray) -> None:
    if np.any(np.asarray(q)[..., 1] <= 0):
        raise WrongHalfSpace("q1 must be positive")


def dg_many(Q: np.ndarray) -> np.ndarray:
    """Closed-form Jacobians of q -> q^-1 for an (n, 4) stack"""
    Q = np.asarray(Q, dtype=float)
    n2 = np.sum(Q * Q, axis=-1)[..., None, None]
    outer = Q[..., :, None] * Q[..., None, :]
    signs = np.array([1.0, -1.0, -1.0, -1.0])[:, None]
    return signs * (n2 * BASIS - 2.0 * outer) / n2**2


def dg(q: Quaternion) -> np.ndarray:
    return dg_many(q.as_array()[None, :])[0]


def dg_fd(q: Quaternion, step: Optional[float] = None) -> np.ndarray:
    step = config.FD_STEP if step is None else step
    x = q.as_array()
    plus = qinv(x[None, :] + step * BASIS)
    minus = qinv(x[None, :] - step * BASIS)
    return ((plus - minus) / (2.0 * step)).T


def jf_many(Q: np.ndarray) -> np.ndarray:
    """Left multiplication by a i + b j + c k, the image of i under conjugation by q"""
    Q = np.asarray(Q, dtype=float)
    p0, p1, p2, p3 = np.moveaxis(Q, -1, 0)
    n2 = p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3
    a = (p0 * p0 + p1 * p1 - p2 * p2 - p3 * p3) / n2
    b = 2.0 * (p0 * p3 + p1 * p2) / n2
    c = 2.0 * (p1 * p3 - p0 * p2) / n2
    return left_matrix(np.stack([np.zeros_like(a), a, b, c], axis=-1))


def jf_matrix(q: Quaternion) -> CSMatrix:
    """
    J^f at q

    Raises:
        WrongHalfSpace: if q1 <= 0
    """
    _check_half_space(q.as_array())
    return CSMatrix(jf_many(q.as_array()[None, :])[0], label="J^f")


def verify_intertwine_many(Q: np.ndarray) -> np.ndarray:
    """||dg J^f - J_i dg||_inf for each row of an (n, 4) stack"""
    Q = np.asarray(Q, dtype=float)
    _check_half_space(Q)
    D = dg_many(Q)
    return np.max(np.abs(D @ jf_many(Q) - J_I.matrix @ D), axis=(-2, -1))


def verify_intertwine(q: Quaternion) -> float:
    """
    Residual of dg o J^f = J_i o dg for g(q) = q^-1

    Raises:
        WrongHalfSpace: if q1 <= 0
    """
    return float(verify_intertwine_many(q.as_array()[None, :])[0])


# ---------------------------------------------------------------------------
# Image and preimage of f(x) = x(1 - Ii)/2
# ---------------------------------------------------------------------------


def image_point(x: Quaternion) -> Quaternion:
    """f(x) from 2f(alpha + I beta) = alpha(a+1) + beta(a+1) i + (beta b - alpha c) j + (alpha b + beta c) k"""
    coords = decompose(x)
    alpha, beta = coords.alpha, coords.beta
    a, b, c = coords.I.a, coords.I.b, coords.I.c
    return Quaternion(alpha * (a + 1), beta * (a + 1), beta * b - alpha * c, alpha * b + beta * c) * 0.5


def preimage(q: Quaternion) -> SliceCoords:
    """
    The x with x(1 - Ii)/2 = q

    Args:
        q: target with positive i-component

    Returns:
        SliceCoords (alpha, beta, I)

    Raises:
        WrongHalfSpace: if q1 <= 0
    """
    _check_half_space(q.as_array())
    q0, q1, q2, q3 = q.q0, q.q1, q.q2, q.q3
    den = q0 * q0 + q1 * q1
    B = (q1 * q2 + q0 * q3) / den
    C = (q1 * q3 - q0 * q2) / den
    a = (1.0 - B * B - C * C) / (1.0 + B * B + C * C)
    b = B * (a + 1.0)
    c = C * (a + 1.0)
    alpha = 2.0 * q0 / (a + 1.0)
    beta = 2.0 * q1 / (a + 1.0)
    return SliceCoords(alpha, beta, ImaginaryUnit.from_vector([a, b, c]))
