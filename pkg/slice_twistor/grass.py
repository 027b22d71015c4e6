"""
Grassmannian Transforms
Twistor transform into Plucker coordinates, the real structure sigma, twistor-line
search and the affine-curve hermitian criterion
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize

import holo
from config import config
from exceptions import NotSliceAffine, XiSixVanishes
from holo import HoloMap
from logger import log_structured, logger
from qcore import Quaternion
from sampling import make_rng, random_upper
from slice_function import SliceFunction, affine, slice_derivative, slice_product
from twistor import fiber_equations, j_map_array, plucker
from utils import chordal_distance_many, complex_pairs

KLEIN_SIGNS = np.array([1.0, -1.0, 1.0])


# ---------------------------------------------------------------------------
# Points of CP^5
# ---------------------------------------------------------------------------


def klein_residual_array(xi: np.ndarray) -> np.ndarray:
    """xi1 xi6 - xi2 xi5 + xi3 xi4 on (..., 6) stacks"""
    xi = np.asarray(xi, dtype=complex)
    return xi[..., 0] * xi[..., 5] - xi[..., 1] * xi[..., 4] + xi[..., 2] * xi[..., 3]


def sigma_array(xi: np.ndarray) -> np.ndarray:
    """[xi1, ..., xi6] -> [conj xi1, conj xi5, -conj xi4, -conj xi3, conj xi2, conj xi6]"""
    xi = np.conj(np.asarray(xi, dtype=complex))
    return np.stack([xi[..., 0], xi[..., 4], -xi[..., 3], -xi[..., 2], xi[..., 1], xi[..., 5]], axis=-1)


def sigma_residual(xi: np.ndarray) -> np.ndarray:
    """Chordal distance between xi and sigma(xi)"""
    xi = np.asarray(xi, dtype=complex)
    return chordal_distance_many(xi, sigma_array(xi))


@dataclass(frozen=True)
class ProjPoint5:
    """[xi1, ..., xi6] in P(Lambda^2 C^4), basis e01, e02, e03, e12, e13, e23"""

    coords: Tuple[complex, ...]

    def __post_init__(self):
        coords = tuple(complex(x) for x in self.coords)
        if len(coords) != 6:
            raise ValueError("points of CP^5 need six coordinates")
        if all(x == 0 for x in coords):
            raise ValueError("homogeneous coordinates cannot all vanish")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords) -> "ProjPoint5":
        return cls(tuple(coords))

    def as_array(self) -> np.ndarray:
        return np.array(self.coords, dtype=complex)

    def klein_residual(self) -> float:
        """Klein relation scaled by the squared norm"""
        arr = self.as_array()
        return float(abs(klein_residual_array(arr)) / np.max(np.abs(arr)) ** 2)

    def distance(self, other: "ProjPoint5") -> float:
        return float(chordal_distance_many(self.as_array()[None, :], other.as_array()[None, :])[0])

    def equals(self, other: "ProjPoint5", tol: Optional[float] = None) -> bool:
        tol = config.CHORDAL_TOL if tol is None else tol
        return self.distance(other) < tol

    def as_json(self) -> List[List[float]]:
        return complex_pairs(self.coords)


def sigma(p: ProjPoint5) -> ProjPoint5:
    return ProjPoint5(tuple(sigma_array(p.as_array())))


def wedge_oracle(e1, e2) -> np.ndarray:
    """Plucker coordinates of span{e1, e2}: e1_h e2_k - e1_k e2_h"""
    return plucker(np.asarray(e1, dtype=complex), np.asarray(e2, dtype=complex))


def generating_vectors(f: SliceFunction, v) -> Tuple[np.ndarray, np.ndarray]:
    """e1 = [g, -hhat, -1, 0], e2 = [h, ghat, 0, -1]; the lifted line is e1 . X = e2 . X = 0"""
    g, gh, h, hh = f.quadruple(v)
    ones, zeros = np.ones_like(g), np.zeros_like(g)
    return np.stack([g, -hh, -ones, zeros], axis=-1), np.stack([h, gh, zeros, -ones], axis=-1)


def fiber_point(q: Quaternion) -> ProjPoint5:
    """Transform coordinates of the fiber over q"""
    e1, e2 = fiber_equations(q)
    return ProjPoint5(tuple(wedge_oracle(e1, e2)))


# ---------------------------------------------------------------------------
# Transform curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransformCurve:
    """Six coordinate maps v -> xi_k(v)"""

    coordinates: Tuple[HoloMap, HoloMap, HoloMap, HoloMap, HoloMap, HoloMap]
    name: str = ""

    def __post_init__(self):
        if len(self.coordinates) != 6:
            raise ValueError("a transform curve has six coordinates")

    @classmethod
    def from_strings(cls, sources: Sequence[str], name: str = "") -> "TransformCurve":
        return cls(tuple(holo.parse(s) for s in sources), name=name)

    def evaluate(self, v) -> np.ndarray:
        """(..., 6) array of coordinates"""
        v = np.asarray(v, dtype=complex)
        return np.stack([np.broadcast_to(m(v), v.shape) for m in self.coordinates], axis=-1)

    def at(self, v: complex) -> ProjPoint5:
        return ProjPoint5(tuple(self.evaluate(complex(v))))

    def klein_residual(self, v) -> np.ndarray:
        xi = self.evaluate(v)
        return np.abs(klein_residual_array(xi)) / np.max(np.abs(xi), axis=-1) ** 2

    def to_sources(self) -> List[str]:
        return [m.to_source() for m in self.coordinates]


def transform(f: SliceFunction) -> TransformCurve:
    """v -> [g ghat + hhat h, h, -g, ghat, hhat, 1]"""
    g, gh, h, hh = f.maps
    return TransformCurve((g * gh + hh * h, h, -g, gh, hh, holo.ONE), name=f"F({f.name or 'f'})")


def inverse_transform(
    curve: TransformCurve, rng: Optional[np.random.Generator] = None, samples: int = 64
) -> SliceFunction:
    """
    g = -xi3, h = xi2, ghat = xi4, hhat = xi5 after normalising xi6 to 1

    Raises:
        XiSixVanishes: when xi6 vanishes identically or at a sampled point
    """
    xi1, xi2, xi3, xi4, xi5, xi6 = curve.coordinates
    if isinstance(xi6, holo.Const) and xi6.value == 0:
        raise XiSixVanishes("xi6 is identically zero")
    rng = rng if rng is not None else make_rng(0)
    v = random_upper(rng, samples)
    if np.any(np.abs(xi6(v)) <= config.ZERO_COEF_TOL):
        raise XiSixVanishes("xi6 vanishes on the sampled domain")
    return SliceFunction(-xi3 / xi6, xi4 / xi6, xi2 / xi6, xi5 / xi6, name=f"inverse({curve.name})")


def sigma_fixed_line_check(p: ProjPoint5) -> float:
    """
    Residual of j-invariance for the line represented by p

    The line is recovered from p with xi6 = 1, its points [1, 0, g, h] and
    [0, 1, -hhat, ghat] are mapped by j, and the images are tested against the
    line's two equations.
    """
    xi = p.as_array()
    if abs(xi[5]) <= config.ZERO_COEF_TOL * np.max(np.abs(xi)):
        raise XiSixVanishes("cannot recover the line with xi6 = 0")
    xi = xi / xi[5]
    g, h, gh, hh = -xi[2], xi[1], xi[3], xi[4]
    e1 = np.array([g, -hh, -1, 0])
    e2 = np.array([h, gh, 0, -1])
    points = np.array([[1, 0, g, h], [0, 1, -hh, gh]], dtype=complex)
    images = j_map_array(points)
    images = images / np.linalg.norm(images, axis=-1, keepdims=True)
    scale = max(1.0, float(np.linalg.norm(e1)), float(np.linalg.norm(e2)))
    return float(max(np.max(np.abs(images @ e1)), np.max(np.abs(images @ e2))) / scale)


# ---------------------------------------------------------------------------
# Twistor-line search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwistorLine:
    v: complex
    residual: float

    def as_json(self) -> Dict:
        return {"v": [self.v.real, self.v.imag], "residual": self.residual}


def _local_minima(values: np.ndarray) -> np.ndarray:
    """Indices of cells not larger than any of their 8 neighbours"""
    padded = np.pad(values, 1, constant_values=np.inf)
    rows, cols = values.shape
    is_min = np.ones(values.shape, dtype=bool)
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            if dr == 0 and dc == 0:
                continue
            neighbour = padded[1 + dr : 1 + dr + rows, 1 + dc : 1 + dc + cols]
            is_min &= values <= neighbour
    is_min &= np.isfinite(values)
    return np.argwhere(is_min)


_COMPASS = np.array([[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1], [1, -1], [-1, 1], [-1, -1]], dtype=float)


def _compass_polish(residual, start: np.ndarray, step: float, min_step: float = 1e-19, max_iter: int = 20000):
    point = np.array(start, dtype=float)
    best = residual(point)
    for _ in range(max_iter):
        if step < min_step or best == 0.0:
            break
        for direction in _COMPASS:
            candidate = point + step * direction
            value = residual(candidate)
            if value < best:
                point, best = candidate, value
                break
        else:
            step /= 2.0
    return point, best


def find_twistor_lines(
    curve: TransformCurve,
    box: Sequence[float] = (-3.0, 3.0, -3.0, 3.0),
    grid: int = 400,
    tol: Optional[float] = None,
    max_candidates: int = 64,
    threads: Optional[int] = None,
) -> List[TwistorLine]:
    """
    Points v of the box where sigma(curve(v)) = curve(v)

    Args:
        curve: transform curve
        box: (x0, x1, y0, y1)
        grid: grid points per axis
        tol: acceptance threshold on the chordal residual

    Returns:
        Twistor lines sorted by v
    """
    tol = config.TWISTOR_LINE_TOL if tol is None else tol
    x0, x1, y0, y1 = (float(b) for b in box)
    xs = np.linspace(x0, x1, grid)
    ys = np.linspace(y0, y1, grid)
    V = xs[None, :] + 1j * ys[:, None]
    with np.errstate(all="ignore"):
        values = sigma_residual(curve.evaluate(V))
    values = np.where(np.isfinite(values), values, np.inf)

    minima = _local_minima(values)
    order = np.argsort(values[minima[:, 0], minima[:, 1]], kind="stable")
    starts = [V[r, c] for r, c in minima[order][:max_candidates]]
    spacing = max((x1 - x0), (y1 - y0)) / max(grid - 1, 1)
    log_structured(logger, "info", "twistor-line candidates", curve=curve.name, candidates=len(starts))

    def residual(p: np.ndarray) -> float:
        with np.errstate(all="ignore"):
            r = float(sigma_residual(curve.evaluate(complex(p[0], p[1])))[()])
        return r if np.isfinite(r) else np.inf

    def refine(v0: complex) -> TwistorLine:
        start = np.array([v0.real, v0.imag])
        simplex = np.array([start, start + [spacing, 0.0], start + [0.0, spacing]])
        result = minimize(
            residual,
            start,
            method="Nelder-Mead",
            options={"initial_simplex": simplex, "xatol": 1e-15, "fatol": 1e-18, "maxiter": 4000},
        )
        point, best = _compass_polish(residual, result.x, step=spacing * 1e-3)
        return TwistorLine(complex(point[0], point[1]), best)

    workers = threads or config.THREADS
    with ThreadPoolExecutor(max_workers=workers) as executor:
        refined = list(executor.map(refine, starts))

    slack = 1e-9
    accepted: List[TwistorLine] = []
    for line in sorted(refined, key=lambda line: line.residual):
        inside = x0 - slack <= line.v.real <= x1 + slack and y0 - slack <= line.v.imag <= y1 + slack
        if not inside or line.residual >= tol:
            continue
        if any(abs(line.v - other.v) <= config.ROOT_CLUSTER_RADIUS for other in accepted):
            continue
        accepted.append(line)
    accepted.sort(key=lambda line: (line.v.real, line.v.imag))
    log_structured(logger, "info", "twistor lines", curve=curve.name, found=len(accepted))
    return accepted


# ---------------------------------------------------------------------------
# Affine curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineCheck:
    affine: bool
    hermitian_residual: complex
    fit_residual: float
    slice_constant_residual: float
    f_plus: Quaternion
    f_minus: Quaternion
    g_plus: Quaternion
    g_minus: Quaternion
    details: Dict[str, float] = field(default_factory=dict)


def hermitian_i(p: Quaternion, q: Quaternion) -> complex:
    """h_i(p, q) = p1 conj(q1) + p2 conj(q2) for p = p1 + p2 j"""
    p1, p2 = p.split()
    q1, q2 = q.split()
    return p1 * q1.conjugate() + p2 * q2.conjugate()


def _cleared_fit(curve: TransformCurve, A: complex, B: complex, v: np.ndarray) -> float:
    """Largest residual of a degree-1 fit of xi(v)(A + B v)"""
    cleared = curve.evaluate(v) * (A + B * v)[:, None]
    design = np.vander(v, 2, increasing=True)
    coef, *_ = np.linalg.lstsq(design, cleared, rcond=None)
    residual = np.abs(design @ coef - cleared)
    return float(np.max(residual) / max(1.0, float(np.max(np.abs(cleared)))))


def check_affine_transform(
    f: SliceFunction,
    A: complex,
    B: complex,
    rng: Optional[np.random.Generator] = None,
    samples: int = 16,
    fit_tol: Optional[float] = None,
) -> AffineCheck:
    """
    Hermitian criterion for curves whose cleared transform is affine

    F = (A + x B) . f is split as s = dF/dx and c = F - x s; both must be slice
    constant. With f_{+-i} and g_{+-i} their values on C_{+-i}, the residual is
    h_i(A f_i - B g_i, conj(A) f_-i - conj(B) g_-i).

    Raises:
        NotSliceAffine: if s is not slice constant
    """
    A, B = complex(A), complex(B)
    if A == 0 and B == 0:
        raise ValueError("A and B cannot both vanish")
    fit_tol = config.MEMBERSHIP_TOL if fit_tol is None else fit_tol
    rng = rng if rng is not None else make_rng(0)
    v = random_upper(rng, max(samples, 8), box=(-2.0, 2.0, 0.2, 2.0))

    factor = affine(Quaternion.from_split(B), Quaternion.from_split(A))
    factor = SliceFunction(factor.g, factor.ghat, factor.h, factor.hhat, domain=f.domain)
    F = slice_product(factor, f)
    s = slice_derivative(F)
    ds = slice_derivative(s)
    with np.errstate(all="ignore"):
        constant_residual = float(np.max(np.abs(np.stack(ds.quadruple(v)))))
    tol = config.STRUCTURAL_TOL if F.is_expression() else 1e3 * config.FD_TOL
    if not constant_residual <= tol * (1.0 + float(np.max(np.abs(np.stack(s.quadruple(v)))))):
        raise NotSliceAffine(f"dF/dx is not slice constant (residual {constant_residual:.3e})")

    x_s = slice_product(SliceFunction(holo.V, holo.V, domain=f.domain), s)
    c = SliceFunction(F.g - x_s.g, F.ghat - x_s.ghat, F.h - x_s.h, F.hhat - x_s.hhat, domain=f.domain)

    probe = complex(v[0])
    f_plus, f_minus = _values_on_semislices(s, probe)
    g_plus, g_minus = _values_on_semislices(c, probe)
    Aq, Bq = Quaternion.from_split(A), Quaternion.from_split(B)
    Ac, Bc = Quaternion.from_split(A.conjugate()), Quaternion.from_split(B.conjugate())
    herm = hermitian_i(Aq * f_plus - Bq * g_plus, Ac * f_minus - Bc * g_minus)

    fit = _cleared_fit(transform(f), A, B, v)
    affine_curve = fit < fit_tol
    log_structured(
        logger, "info", "affine check", function=f.name, hermitian=f"{abs(herm):.3e}", fit=f"{fit:.3e}"
    )
    return AffineCheck(
        affine=affine_curve,
        hermitian_residual=herm,
        fit_residual=fit,
        slice_constant_residual=constant_residual,
        f_plus=f_plus,
        f_minus=f_minus,
        g_plus=g_plus,
        g_minus=g_minus,
    )


def _values_on_semislices(f: SliceFunction, v: complex) -> Tuple[Quaternion, Quaternion]:
    """(value on C_i+, value on C_-i+) at v"""
    on_plus, on_minus = f.on_semislices(np.array([v]))
    return Quaternion.from_array(on_plus[0]), Quaternion.from_array(on_minus[0])
