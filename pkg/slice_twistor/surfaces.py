"""
Surfaces
Homogeneous surfaces in CP^3, lift membership, fiber cardinality and splitting solvers
"""

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npoly

import holo
from config import config
from exceptions import BranchInconsistent, DegeneratePlane, OutOfDomain, TooLarge
from holo import HoloMap
from logger import log_structured, logger
from qcore import Quaternion
from sampling import make_rng
from schema import SurfaceFile, SurfaceTerm
from slice_function import SliceFunction, from_maps
from twistor import FiberLine

Exponent = Tuple[int, int, int, int]
RngLike = Union[np.random.Generator, int, None]


def _rng(rng: RngLike) -> np.random.Generator:
    return rng if isinstance(rng, np.random.Generator) else make_rng(rng)


# ---------------------------------------------------------------------------
# Homogeneous polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomoPoly:
    """Homogeneous polynomial of degree d in X0..X3"""

    degree: int
    terms: Dict[Exponent, complex]
    name: str = ""

    def __post_init__(self):
        terms = {tuple(int(e) for e in exp): complex(c) for exp, c in self.terms.items() if complex(c) != 0}
        if not terms:
            raise ValueError("a surface needs at least one nonzero coefficient")
        for exp in terms:
            if len(exp) != 4 or sum(exp) != self.degree or min(exp) < 0:
                raise ValueError(f"monomial {exp} is not of degree {self.degree}")
        object.__setattr__(self, "terms", dict(sorted(terms.items())))

    def __hash__(self):
        return hash((self.degree, tuple(self.terms.items())))

    @property
    def scale(self) -> float:
        return max(abs(c) for c in self.terms.values())

    def evaluate(self, X) -> np.ndarray:
        """P(X) on (..., 4) complex arrays"""
        X = np.asarray(X, dtype=complex)
        out = np.zeros(X.shape[:-1], dtype=complex)
        for exp, coef in self.terms.items():
            out = out + coef * np.prod(X ** np.array(exp), axis=-1)
        return out

    def restrict_affine(self, a, b) -> np.ndarray:
        """
        Coefficients in u of P(a + u b), lowest degree first

        Args:
            a: four complex coordinates
            b: four complex coordinates
        """
        a = np.asarray(a, dtype=complex)
        b = np.asarray(b, dtype=complex)
        total = np.zeros(self.degree + 1, dtype=complex)
        for exp, coef in self.terms.items():
            poly = np.array([coef], dtype=complex)
            for k, e in enumerate(exp):
                for _ in range(e):
                    poly = npoly.polymul(poly, [a[k], b[k]])
            total[: len(poly)] += poly
        return total

    def restrict_affine_many(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Row-wise restrict_affine for (n, 4) stacks; returns (n, d + 1)"""
        A = np.asarray(A, dtype=complex)
        B = np.asarray(B, dtype=complex)
        n = A.shape[0]
        total = np.zeros((n, self.degree + 1), dtype=complex)
        for exp, coef in self.terms.items():
            poly = np.full((n, 1), coef, dtype=complex)
            for k, e in enumerate(exp):
                if e == 0:
                    continue
                # (a + b u)^e by the binomial theorem
                factor = np.stack(
                    [math.comb(e, j) * A[:, k] ** (e - j) * B[:, k] ** j for j in range(e + 1)], axis=-1
                )
                poly = _rowwise_polymul(poly, factor)
            total[:, : poly.shape[1]] += poly
        return total

    def check_homogeneity(self, rng: RngLike = None, samples: int = 32) -> float:
        """max |P(lam X) - lam^d P(X)| / (1 + |lam^d P(X)|)"""
        rng = _rng(rng)
        X = rng.normal(size=(samples, 4)) + 1j * rng.normal(size=(samples, 4))
        lam = rng.normal(size=samples) + 1j * rng.normal(size=samples)
        lhs = self.evaluate(lam[:, None] * X)
        rhs = lam**self.degree * self.evaluate(X)
        return float(np.max(np.abs(lhs - rhs) / (1.0 + np.abs(rhs))))

    def to_json(self) -> Dict:
        model = SurfaceFile(
            degree=self.degree,
            terms=[SurfaceTerm(exp=list(exp), coef=[c.real, c.imag]) for exp, c in self.terms.items()],
            name=self.name or None,
        )
        return model.model_dump(exclude_none=True)

    @classmethod
    def from_json(cls, data: Union[str, Dict]) -> "HomoPoly":
        if isinstance(data, str):
            data = json.loads(data)
        model = SurfaceFile(**data)
        terms: Dict[Exponent, complex] = {}
        for term in model.terms:
            exp = tuple(term.exp)
            terms[exp] = terms.get(exp, 0j) + complex(term.coef[0], term.coef[1])
        return cls(model.degree, terms, name=model.name or "")

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "HomoPoly":
        path = Path(path)
        poly = cls.from_json(path.read_text())
        return poly if poly.name else cls(poly.degree, poly.terms, name=path.stem)

    def to_file(self, path: Union[str, Path]) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")


def _rowwise_polymul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    out = np.zeros((p.shape[0], p.shape[1] + q.shape[1] - 1), dtype=complex)
    for j in range(q.shape[1]):
        out[:, j : j + p.shape[1]] += p * q[:, j : j + 1]
    return out


def _poly(degree: int, name: str, **monomials: complex) -> HomoPoly:
    """Build from keyword monomials like X0X3=1, X1X2=-1 (X0_2 means X0^2)"""
    terms: Dict[Exponent, complex] = {}
    for key, coef in monomials.items():
        exp = [0, 0, 0, 0]
        for factor in key.split("X")[1:]:
            var, _, power = factor.partition("_")
            exp[int(var)] += int(power) if power else 1
        terms[tuple(exp)] = terms.get(tuple(exp), 0j) + complex(coef)
    return HomoPoly(degree, terms, name=name)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


def quadric_Q() -> HomoPoly:
    """X0 X3 - X1 X2, the real quadric"""
    return _poly(2, "quadric_Q", X0X3=1, X1X2=-1)


def quaddiag(lam: float, mu: float, nu: float) -> HomoPoly:
    return _poly(
        2,
        f"quaddiag({lam},{mu},{nu})",
        X0_2=np.exp(lam + 1j * nu),
        X1_2=np.exp(-lam + 1j * nu),
        X2_2=np.exp(mu - 1j * nu),
        X3_2=np.exp(-mu - 1j * nu),
    )


def quadnondiag(k: float) -> HomoPoly:
    """i(X0^2 + X1^2) + k(X1 X3 - X0 X2) + X1 X2 - X0 X3"""
    return _poly(2, f"quadnondiag({k})", X0_2=1j, X1_2=1j, X1X3=k, X0X2=-k, X1X2=1, X0X3=-1)


def quadnondiag_realized() -> HomoPoly:
    """2i(X0^2 - X1^2 + X0 X1) + (X0 X2 - X1 X3)/2 - X1 X2 - X0 X3"""
    return _poly(
        2, "quadnondiag_realized", X0_2=2j, X1_2=-2j, X0X1=2j, X0X2=0.5, X1X3=-0.5, X1X2=-1, X0X3=-1
    )


def plane(c: Sequence[complex]) -> HomoPoly:
    c0, c1, c2, c3 = (complex(x) for x in c)
    return _poly(1, "plane", X0=c0, X1=c1, X2=c2, X3=c3)


def plane_pair() -> HomoPoly:
    """X0^2 - X2^2"""
    return _poly(2, "plane_pair", X0_2=1, X2_2=-1)


def quadric_cone() -> HomoPoly:
    """X1^2 - X2 X3"""
    return _poly(2, "quadric_cone", X1_2=1, X2X3=-1)


def cubic_nonnormal_1() -> HomoPoly:
    """X0 X3^2 + X1^2 X2"""
    return _poly(3, "cubic_nonnormal_1", X0X3_2=1, X1_2X2=1)


def cubic_nonnormal_2() -> HomoPoly:
    """X0 X1 X3 + X2 X3^2 + X1^3"""
    return _poly(3, "cubic_nonnormal_2", X0X1X3=1, X2X3_2=1, X1_3=1)


def cubic_cone(c: complex) -> HomoPoly:
    """X3^3 - (c + 1) X3^2 X1 + c X3 X1^2 - X2^2 X1"""
    c = complex(c)
    return _poly(3, f"cubic_cone({c})", X3_3=1, X1X3_2=-(c + 1), X1_2X3=c, X1X2_2=-1)


def quartic_scroll() -> HomoPoly:
    """(X1 X2 - X0 X3)^2 + 2 X1 X0 (X1 X2 + X0 X3)"""
    return _poly(
        4, "quartic_scroll", X1_2X2_2=1, X0_2X3_2=1, X0X1X2X3=-2, X0X1_2X2=2, X0_2X1X3=2
    )


CATALOG = {
    "quadric_Q": quadric_Q,
    "quadnondiag_realized": quadnondiag_realized,
    "plane_pair": plane_pair,
    "quadric_cone": quadric_cone,
    "cubic_nonnormal_1": cubic_nonnormal_1,
    "cubic_nonnormal_2": cubic_nonnormal_2,
    "quartic_scroll": quartic_scroll,
}


def load_surface(ref: str) -> HomoPoly:
    """Path, catalog name or inline JSON"""
    text = ref.strip()
    if text.startswith("{"):
        return HomoPoly.from_json(text)
    path = Path(text)
    if path.is_file():
        return HomoPoly.from_file(path)
    candidate = config.SURFACES_DIR / f"{text}.json"
    if candidate.is_file():
        return HomoPoly.from_file(candidate)
    if text in CATALOG:
        return CATALOG[text]()
    raise FileNotFoundError(f"no surface named {ref!r}")


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MembershipReport:
    residual: float
    tolerance: float
    contained: bool
    samples: int
    worst_v: Optional[complex] = None


def lift_affine_parts(f: SliceFunction, v) -> Tuple[np.ndarray, np.ndarray]:
    """Lift coordinates as a + u b: a = [1, 0, g, h], b = [0, 1, -hhat, ghat]"""
    g, gh, h, hh = f.quadruple(v)
    ones, zeros = np.ones_like(g), np.zeros_like(g)
    return np.stack([ones, zeros, g, h], axis=-1), np.stack([zeros, ones, -hh, gh], axis=-1)


def sample_lift_domain(
    f: SliceFunction,
    rng: np.random.Generator,
    samples: int,
    margin: float = 1e-3,
    box: Tuple[float, float, float, float] = (-2.0, 2.0, 0.2, 2.0),
) -> np.ndarray:
    """Points of D+ where the quadruple is finite and every sqrt stays off its cut"""
    x0, x1, y0, y1 = box
    kept: List[np.ndarray] = []
    have = 0
    for _ in range(50):
        v = rng.uniform(x0, x1, 2 * samples) + 1j * rng.uniform(y0, y1, 2 * samples)
        v = v[f.domain.contains(v)]
        quad = np.stack(f.quadruple(v))
        ok = np.all(np.isfinite(quad), axis=0)
        for m in f.maps:
            ok &= holo.cut_distance(m, v) >= margin
        kept.append(v[ok])
        have += int(ok.sum())
        if have >= samples:
            break
    v = np.concatenate(kept)[:samples]
    if len(v) < samples:
        raise OutOfDomain(f"only {len(v)} admissible sample points found for {f.name or 'f'}")
    return v


def contains_lift(
    P: HomoPoly,
    f: SliceFunction,
    samples: int = 500,
    rng: RngLike = None,
    tol: Optional[float] = None,
    margin: float = 1e-3,
) -> MembershipReport:
    """
    Check whether the twistor lift of f lies on P = 0

    P(a + u b) is expanded in u at sampled v; the residual is the largest
    coefficient magnitude over all samples.
    """
    rng = _rng(rng)
    tol = config.MEMBERSHIP_TOL if tol is None else tol
    v = sample_lift_domain(f, rng, samples, margin)
    A, B = lift_affine_parts(f, v)
    coefficients = P.restrict_affine_many(A, B)
    per_sample = np.max(np.abs(coefficients), axis=1)
    worst = int(np.argmax(per_sample))
    residual = float(per_sample[worst])
    log_structured(
        logger, "info", "membership", surface=P.name, function=f.name, residual=f"{residual:.3e}"
    )
    return MembershipReport(residual, tol, residual < tol, len(v), complex(v[worst]))


def _is_exact(value: complex) -> bool:
    return all(Fraction(x).limit_denominator(10**6) == Fraction(x) for x in (value.real, value.imag))


def _symbolic_ready(m: HoloMap) -> bool:
    if isinstance(m, holo.Const):
        return _is_exact(m.value)
    if isinstance(m, (holo.Exp, holo.SampledMap)):
        return False
    return all(_symbolic_ready(child) for child in m.children())


@dataclass(frozen=True)
class SymbolicCheck:
    status: str
    points: List[str] = field(default_factory=list)


def symbolic_crosscheck(P: HomoPoly, f: SliceFunction, points: int = 3, rng: RngLike = None) -> SymbolicCheck:
    """
    Exact expansion in u at rational points v with sympy

    Returns:
        status 'passed', 'failed' or 'skipped' (degree above 4 or inexact constants)
    """
    import sympy

    if P.degree > 4 or not all(_symbolic_ready(m) for m in f.maps) or not all(
        _is_exact(c) for c in P.terms.values()
    ):
        return SymbolicCheck("skipped")
    rng = _rng(rng)
    u, v = sympy.symbols("u v")
    exprs = [holo.to_sympy(m, v) for m in f.maps]
    coefs = {exp: sympy.nsimplify(c.real) + sympy.I * sympy.nsimplify(c.imag) for exp, c in P.terms.items()}
    used: List[str] = []
    for _ in range(points):
        point = sympy.Rational(int(rng.integers(-20, 21)), 10) + sympy.I * sympy.Rational(
            int(rng.integers(3, 21)), 10
        )
        g, gh, h, hh = (e.subs(v, point) for e in exprs)
        X = [sympy.Integer(1), u, g - u * hh, h + u * gh]
        total = sum(c * sympy.Mul(*[X[k] ** e for k, e in enumerate(exp)]) for exp, c in coefs.items())
        poly = sympy.Poly(sympy.expand(total), u)
        used.append(str(point))
        if any(sympy.simplify(c) != 0 for c in poly.all_coeffs()):
            logger.warning(f"symbolic membership fails at v = {point}")
            return SymbolicCheck("failed", used)
    return SymbolicCheck("passed", used)


# ---------------------------------------------------------------------------
# Fibers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiberResult:
    """Intersection of a fiber with the surface"""

    count: int
    multiplicities: List[int]
    contained: bool
    roots: List[Optional[complex]] = field(default_factory=list)

    @property
    def distinct(self) -> int:
        return len(self.multiplicities)

    @property
    def tangency(self) -> bool:
        return any(m >= 2 for m in self.multiplicities)

    @property
    def flags(self) -> str:
        if self.contained:
            return "contained-fiber"
        return "tangency" if self.tangency else "generic"


def cluster_roots(roots: np.ndarray, radius: Optional[float] = None) -> List[Tuple[complex, int]]:
    """Greedy clustering of roots within ``radius``; returns (centre, multiplicity)"""
    radius = config.ROOT_CLUSTER_RADIUS if radius is None else radius
    clusters: List[List[complex]] = []
    for root in sorted(np.asarray(roots, dtype=complex), key=lambda z: (z.real, z.imag)):
        for members in clusters:
            if abs(root - np.mean(members)) <= radius * max(1.0, abs(root)):
                members.append(root)
                break
        else:
            clusters.append([root])
    return [(complex(np.mean(members)), len(members)) for members in clusters]


def fiber_form(P: HomoPoly, q: Optional[Quaternion]) -> np.ndarray:
    """Binary form of P on the fiber over q, dehomogenised at X0 = 1, X1 = t (lowest first)"""
    line = FiberLine(q)
    return P.restrict_affine(line.point(1, 0).as_array(), line.point(0, 1).as_array())


def fiber_cardinality(P: HomoPoly, q: Optional[Quaternion], tol: Optional[float] = None) -> FiberResult:
    """
    Points of P = 0 on the fiber over q, counted with multiplicity

    Roots at t = infinity appear as None and absorb the drop in degree.
    """
    tol = config.ZERO_COEF_TOL if tol is None else tol
    coefs = fiber_form(P, q)
    norm = 1.0 if q is None else q.norm()
    scale = P.scale * (1.0 + norm) ** P.degree
    negligible = np.abs(coefs) <= tol * scale
    if np.all(negligible):
        return FiberResult(P.degree, [], True)
    degree = int(np.max(np.flatnonzero(~negligible)))
    roots = np.roots(coefs[: degree + 1][::-1]) if degree > 0 else np.array([], dtype=complex)
    clusters = cluster_roots(roots)
    multiplicities = [m for _, m in clusters]
    found: List[Optional[complex]] = [z for z, _ in clusters]
    if degree < P.degree:
        multiplicities.append(P.degree - degree)
        found.append(None)
    return FiberResult(int(sum(multiplicities)), multiplicities, False, found)


@dataclass
class DiscriminantReport:
    """Fiber cardinalities over a grid in H"""

    points: np.ndarray
    results: List[FiberResult]
    degree: int

    CSV_HEADER = ["q0", "q1", "q2", "q3", "count", "flags", "multiplicities"]

    def rows(self) -> List[List]:
        return [
            [
                *(float(x) for x in point),
                result.count,
                result.flags,
                ";".join(str(m) for m in result.multiplicities),
            ]
            for point, result in zip(self.points, self.results)
        ]

    def summary(self) -> Dict[str, int]:
        out = {"cells": len(self.results), "contained-fiber": 0, "tangency": 0, "generic": 0}
        for result in self.results:
            out[result.flags] += 1
        out["non-generic-cardinality"] = sum(
            1 for r in self.results if not r.contained and r.count != self.degree
        )
        return out


def scan_grid(box: Sequence[float], resolution: Union[int, Sequence[int]]) -> np.ndarray:
    """Grid over [a0, b0] x ... x [a3, b3]; a resolution of 1 takes the midpoint"""
    if len(box) != 8:
        raise ValueError("a box in H needs eight numbers")
    res = [int(resolution)] * 4 if np.ndim(resolution) == 0 else [int(r) for r in resolution]
    cells = int(np.prod(res))
    if cells > config.MAX_SCAN_CELLS:
        raise TooLarge(f"{cells} cells exceed the limit of {config.MAX_SCAN_CELLS}")
    axes = []
    for k, n in enumerate(res):
        lo, hi = float(box[2 * k]), float(box[2 * k + 1])
        axes.append(np.array([(lo + hi) / 2]) if n == 1 else np.linspace(lo, hi, n))
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)


def discriminant_scan(
    P: HomoPoly, box: Sequence[float], resolution: Union[int, Sequence[int]], threads: Optional[int] = None
) -> DiscriminantReport:
    """
    Fiber cardinality over a grid of quaternions

    Raises:
        TooLarge: when the grid exceeds MAX_SCAN_CELLS
    """
    points = scan_grid(box, resolution)
    workers = threads or config.THREADS
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(lambda p: fiber_cardinality(P, Quaternion.from_array(p)), points))
    report = DiscriminantReport(points, results, P.degree)
    log_structured(logger, "info", "scan finished", surface=P.name, **report.summary())
    return report


# ---------------------------------------------------------------------------
# Splitting solvers
# ---------------------------------------------------------------------------


def _map(m) -> HoloMap:
    if isinstance(m, str):
        return holo.parse(m)
    return holo.lift_const(m)


def solve_plane_splitting(
    c: Sequence[complex],
    g=None,
    hhat=None,
    branch: str = "c3",
    h=None,
    ghat=None,
) -> SliceFunction:
    """
    Splitting of a slice function whose lift lies on c0 X0 + c1 X1 + c2 X2 + c3 X3 = 0

    The c3 branch takes (g, hhat) and solves h = -(c0 + c2 g)/c3,
    ghat = -(c1 - c2 hhat)/c3. The c2 branch, used when c3 = 0, takes (h, ghat)
    and solves g = -(c0 + c3 h)/c2, hhat = (c1 + c3 ghat)/c2.

    Raises:
        DegeneratePlane: if c2 = c3 = 0
    """
    c0, c1, c2, c3 = (complex(x) for x in c)
    if c2 == 0 and c3 == 0:
        raise DegeneratePlane("the plane does not involve X2 or X3")
    if branch == "c3" and c3 == 0:
        branch = "c2"
    logger.info(f"plane splitting on branch {branch}")
    if branch == "c3":
        g_map = _map(holo.V if g is None else g)
        hh_map = _map(0 if hhat is None else hhat)
        h_map = -(c0 + c2 * g_map) / c3
        gh_map = -(c1 - c2 * hh_map) / c3
    elif branch == "c2":
        if c2 == 0:
            raise DegeneratePlane("c2 = 0 leaves the symmetric branch undefined")
        h_map = _map(holo.V if h is None else h)
        gh_map = _map(0 if ghat is None else ghat)
        g_map = -(c0 + c3 * h_map) / c2
        hh_map = (c1 + c3 * gh_map) / c2
    else:
        raise ValueError(f"unknown branch {branch!r}")
    return SliceFunction(g_map, gh_map, h_map, hh_map, name="plane_splitting")


def solve_quaddiag_splitting(
    lam: float, mu: float, nu: float, sign: int = 1, probe: complex = 0.3 + 0.7j
) -> SliceFunction:
    """
    Splitting whose lift lies on the diagonal quadric with parameters (lam, mu, nu)

    g = v, ghat = kappa v with kappa = sign e^(mu - lam),
    h = i sqrt(e^(mu + i nu) (e^(lam + i nu) + e^(mu - i nu) v^2)) and
    hhat = e^(-2 mu) kappa h, which keeps e^mu g hhat = e^-mu h ghat exact.

    Raises:
        BranchInconsistent: if hhat is not finite at the probe or hhat^2 disagrees
            numerically with its closed form there
    """
    kappa = (1.0 if sign >= 0 else -1.0) * math.exp(mu - lam)
    v = holo.V
    e = lambda x: holo.Const(complex(np.exp(x)))  # noqa: E731
    h = 1j * holo.sqrt(e(mu + 1j * nu) * (e(lam + 1j * nu) + e(mu - 1j * nu) * v**2))
    hhat = math.exp(-2 * mu) * kappa * h

    principal = 1j * holo.sqrt(
        e(-mu + 1j * nu) * (e(-lam + 1j * nu) + e(-mu - 1j * nu) * (kappa**2) * v**2)
    )
    ours, theirs = hhat(probe), principal(probe)
    if not (np.isfinite(ours) and np.isfinite(theirs)):
        raise BranchInconsistent(f"hhat is not finite at probe {probe} for ({lam}, {mu}, {nu})")
    if abs(ours**2 - theirs**2) > config.MEMBERSHIP_TOL * (1.0 + abs(theirs) ** 2):
        raise BranchInconsistent(f"hhat^2 mismatch at probe {probe}: {ours**2} vs {theirs**2}")
    branch = 1 if abs(ours - theirs) <= abs(ours + theirs) else -1
    log_structured(logger, "info", "quaddiag branch", kappa=f"{kappa:.6g}", hhat_sign=branch)
    return SliceFunction(v, kappa * v, h, hhat, name=f"quaddiag_splitting({lam},{mu},{nu})")


def solve_cubic_cone_splitting(c: complex, ghat="v") -> SliceFunction:
    """g = h = 0, hhat = sqrt(ghat^3 - (c + 1) ghat^2 + c ghat) on the principal branch"""
    c = complex(c)
    gh = _map(ghat)
    hh = holo.sqrt(gh**3 - (c + 1) * gh**2 + c * gh)
    return SliceFunction(holo.ZERO, gh, holo.ZERO, hh, name=f"cubic_cone_splitting({c})")


# Catalog functions with known splittings
def plane_pair_function() -> SliceFunction:
    """Lift [1, u, 1, v] on X0^2 - X2^2"""
    return from_maps(1, 0, holo.V, 0, name="plane_pair")


def quadric_cone_function() -> SliceFunction:
    return from_maps(0, holo.V, 0, -1 / holo.V, name="quadric_cone")


def cubic_nonnormal_1_function() -> SliceFunction:
    return from_maps(-holo.V**2, holo.V, 0, 0, name="cubic_nonnormal_1")


def cubic_nonnormal_2_function() -> SliceFunction:
    return from_maps(-1 / holo.V, holo.V, 0, holo.V**-2, name="cubic_nonnormal_2")


def quadnondiag_function() -> SliceFunction:
    """g = -ghat = v, h = 2i + v/2, hhat = 2i - v/2"""
    v = holo.V
    return from_maps(v, -v, 2j + v / 2, 2j - v / 2, name="quadnondiag")
