"""
Slice Functions
Splitting-quadruple representation, representation formula and slice calculus
"""

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np

import holo
from config import config
from exceptions import (
    DegenerateUnits,
    DomainMismatch,
    NotAStem,
    OutOfDomain,
    RealInput,
    ZeroNormal,
)
from holo import HoloMap, Region
from logger import logger
from qcore import (
    ImaginaryUnit,
    Quaternion,
    decompose,
    decompose_array,
    join_array,
    qinv,
    qmul,
    split_array,
)
from sampling import random_quaternions, random_units
from schema import FunctionFile, RegionModel

QI_ARR = np.array([0.0, 1.0, 0.0, 0.0])
ONE_ARR = np.array([1.0, 0.0, 0.0, 0.0])

MapLike = Union[HoloMap, str, complex, float, int]


def _as_map(m: MapLike) -> HoloMap:
    if isinstance(m, HoloMap):
        return m
    if isinstance(m, str):
        return holo.parse(m)
    return holo.Const(complex(m))


@dataclass(frozen=True)
class SliceFunction:
    """
    Slice function on a circular domain, stored as (g, ghat, h, hhat)

    On C_i+ the function is g(v) + h(v) j; on C_-i+, read through conj(v),
    it is conj(ghat(v)) + conj(hhat(v)) j.
    """

    g: HoloMap
    ghat: HoloMap
    h: HoloMap = holo.ZERO
    hhat: HoloMap = holo.ZERO
    domain: Region = field(default_factory=Region.upper)
    provenance: str = "expression"
    name: str = ""
    normal_guard: Optional[HoloMap] = field(default=None, compare=False)

    @property
    def maps(self) -> Tuple[HoloMap, HoloMap, HoloMap, HoloMap]:
        return self.g, self.ghat, self.h, self.hhat

    def is_expression(self) -> bool:
        return all(m.is_expression() for m in self.maps)

    def quadruple(self, v, strict: bool = False):
        """Evaluate (g, ghat, h, hhat) at complex points"""
        return tuple(m.eval(v, strict=strict) for m in self.maps)

    def on_semislices(self, v, strict: bool = False) -> Tuple[np.ndarray, np.ndarray]:
        """Values on C_i+ and C_-i+ at alpha +- i beta, as quaternion arrays"""
        g, gh, h, hh = self.quadruple(v, strict)
        return join_array(g, h), join_array(np.conj(gh), np.conj(hh))

    def eval(self, x: Quaternion) -> Quaternion:
        return eval_slice(self, x)

    def __call__(self, x):
        if isinstance(x, Quaternion):
            return eval_slice(self, x)
        return eval_many(self, x)

    def with_name(self, name: str) -> "SliceFunction":
        return replace(self, name=name)

    def to_json(self) -> Dict:
        return FunctionFile(
            g=self.g.to_source(),
            ghat=self.ghat.to_source(),
            h=self.h.to_source(),
            hhat=self.hhat.to_source(),
            domain=RegionModel(**self.domain.to_json()),
            name=self.name or None,
        ).model_dump(exclude_none=True)

    def to_file(self, path: Union[str, Path]) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def from_maps(g: MapLike, ghat: MapLike, h: MapLike = 0, hhat: MapLike = 0, **kwargs) -> SliceFunction:
    return SliceFunction(_as_map(g), _as_map(ghat), _as_map(h), _as_map(hhat), **kwargs)


def from_strings(g: str, ghat: str, h: str = "0", hhat: str = "0", **kwargs) -> SliceFunction:
    """Parse the four splitting expressions"""
    return SliceFunction(holo.parse(g), holo.parse(ghat), holo.parse(h), holo.parse(hhat), **kwargs)


def from_json(data: Union[str, Dict]) -> SliceFunction:
    """Build from the JSON form {"g", "ghat", "h", "hhat", "domain"}"""
    if isinstance(data, str):
        data = json.loads(data)
    model = FunctionFile(**data)
    domain = Region.from_json(model.domain.model_dump() if model.domain else None)
    return SliceFunction(
        holo.parse(model.g),
        holo.parse(model.ghat),
        holo.parse(model.h),
        holo.parse(model.hhat),
        domain=domain,
        name=model.name or "",
    )


def from_file(path: Union[str, Path]) -> SliceFunction:
    path = Path(path)
    func = from_json(path.read_text())
    return func if func.name else func.with_name(path.stem)


def load_function(ref: str) -> SliceFunction:
    """Path, catalog name in the functions directory, or inline JSON"""
    text = ref.strip()
    if text.startswith("{"):
        return from_json(text)
    path = Path(text)
    if path.is_file():
        return from_file(path)
    candidate = config.FUNCTIONS_DIR / (text if text.endswith(".json") else f"{text}.json")
    if candidate.is_file():
        return from_file(candidate)
    raise FileNotFoundError(f"no function named {ref!r}")


def identity() -> SliceFunction:
    return from_maps(holo.V, holo.V, name="identity")


def constant(q: Quaternion) -> SliceFunction:
    q1, q2 = q.split()
    return from_maps(q1, q1.conjugate(), q2, q2.conjugate(), name="constant")


def real_polynomial(coeffs) -> SliceFunction:
    """sum c_n x^n with real c_n, lowest degree first"""
    poly: HoloMap = holo.ZERO
    for n, c in enumerate(coeffs):
        if complex(c).imag != 0:
            raise ValueError("real_polynomial needs real coefficients")
        poly = poly + holo.Const(float(complex(c).real)) * holo.power(holo.V, n)
    return from_maps(poly, poly, name="real_polynomial")


def affine(a: Quaternion, b: Quaternion) -> SliceFunction:
    """x a + b"""
    a1, a2 = a.split()
    b1, b2 = b.split()
    v = holo.V
    return from_maps(
        v * a1 + b1, v * a1.conjugate() + b1.conjugate(),
        v * a2 + b2, v * a2.conjugate() + b2.conjugate(),
        name="affine",
    )


def semislice_identity(sign: int = -1) -> SliceFunction:
    """x(1 - Ii)/2 for sign=-1, x(1 + Ii)/2 for sign=+1"""
    if sign < 0:
        return from_maps(holo.V, 0, name="x(1-Ii)/2")
    return from_maps(0, holo.V, name="x(1+Ii)/2")


def semislice_constant(sign: int = -1) -> SliceFunction:
    """1 - Ii for sign=-1, 1 + Ii for sign=+1"""
    if sign < 0:
        return from_maps(2, 0, name="1-Ii")
    return from_maps(0, 2, name="1+Ii")


def x_minus_j() -> SliceFunction:
    """x - j, with N(x - j) = x^2 + 1"""
    return from_maps(holo.V, holo.V, -1, -1, name="x-j")


def mobius_semislice(A: float, B: float, C: float, D: float) -> SliceFunction:
    """(Cx + D)^(-.) . (Ax + B)(1 - Ii)/2"""
    denominator = reciprocal(real_polynomial([D, C]))
    numerator = from_maps(holo.Const(A) * holo.V + B, 0)
    return replace(slice_product(denominator, numerator), name=f"mobius({A},{B};{C},{D})")


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def eval_many(f: SliceFunction, X, strict: bool = False) -> np.ndarray:
    """
    Representation formula on an (n, 4) array of quaternions

    f(alpha + I beta) = 1/2 [(1 - Ii)(g + h j) + (1 + Ii)(conj ghat + conj hhat j)]
    """
    X = np.asarray(X, dtype=float)
    alpha, beta, units = decompose_array(X)
    if np.any(beta <= config.REAL_AXIS_MARGIN):
        if strict:
            raise RealInput("evaluation point too close to the real axis")
        beta = np.where(beta <= config.REAL_AXIS_MARGIN, np.nan, beta)
    v = alpha + 1j * beta
    if strict:
        if not np.all(f.domain.contains(v)):
            raise OutOfDomain(f"point outside the {f.domain.kind} domain of {f.name or 'f'}")
        if f.normal_guard is not None:
            n = f.normal_guard.eval(v, strict=False)
            if np.any(np.abs(n) <= config.ZERO_COEF_TOL):
                raise ZeroNormal("evaluation point lies on the zero set of N(f)")
    on_plus, on_minus = f.on_semislices(v, strict=strict)
    Iq = np.concatenate([np.zeros(units.shape[:-1] + (1,)), units], axis=-1)
    Ii = qmul(Iq, QI_ARR)
    return 0.5 * (qmul(ONE_ARR - Ii, on_plus) + qmul(ONE_ARR + Ii, on_minus))


def eval_slice(f: SliceFunction, x: Quaternion) -> Quaternion:
    """Evaluate at a single quaternion off the real axis"""
    decompose(x)
    return Quaternion.from_array(eval_many(f, x.as_array()[None, :], strict=True)[0])


def eval_repr_general(
    f: SliceFunction, x: Quaternion, J: ImaginaryUnit, K: ImaginaryUnit
) -> Quaternion:
    """
    General representation formula

    f(alpha + I beta) = (I - K)(J - K)^-1 f(alpha + J beta) - (I - J)(J - K)^-1 f(alpha + K beta)
    """
    if np.array_equal(J.as_vector(), K.as_vector()):
        raise DegenerateUnits("J and K must differ")
    coords = decompose(x)
    Iq, Jq, Kq = coords.I.as_quaternion(), J.as_quaternion(), K.as_quaternion()
    at_J = eval_slice(f, Quaternion(coords.alpha) + Jq * coords.beta)
    at_K = eval_slice(f, Quaternion(coords.alpha) + Kq * coords.beta)
    inv = (Jq - Kq).inverse()
    return (Iq - Kq) * inv * at_J - (Iq - Jq) * inv * at_K


# ---------------------------------------------------------------------------
# Stem functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StemPair:
    """
    Stem function F = F1 + sqrt(-1) F2

    Either four holomorphic channels phi_k on D+ with F = sum e_k phi_k, so that
    F1 = sum e_k Re phi_k and F2 = sum e_k Im phi_k, or a pair of callables
    z -> (..., 4) defined on D.
    """

    channels: Optional[Tuple[HoloMap, HoloMap, HoloMap, HoloMap]] = None
    F1: Optional[Callable[[np.ndarray], np.ndarray]] = field(default=None, compare=False)
    F2: Optional[Callable[[np.ndarray], np.ndarray]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.channels is None and (self.F1 is None or self.F2 is None):
            raise ValueError("a stem pair needs channels or both F1 and F2")

    def evaluate(self, z) -> Tuple[np.ndarray, np.ndarray]:
        """(F1(z), F2(z)) as (..., 4) arrays"""
        z = np.asarray(z, dtype=complex)
        if self.channels is None:
            return np.asarray(self.F1(z), dtype=float), np.asarray(self.F2(z), dtype=float)
        upper = np.where(z.imag >= 0, z, np.conj(z))
        values = np.stack([phi(upper) for phi in self.channels], axis=-1)
        F1 = values.real
        F2 = values.imag * np.where(z.imag >= 0, 1.0, -1.0)[..., None]
        return F1, F2


def from_stem(F: StemPair, rng: Optional[np.random.Generator] = None, samples: int = 64) -> SliceFunction:
    """
    Induce the slice function f(alpha + I beta) = F1(z) + I F2(z)

    Raises:
        NotAStem: when sampled callables break F(conj z) = conj F(z)
    """
    if F.channels is not None:
        p0, p1, p2, p3 = F.channels
        return SliceFunction(
            p0 + 1j * p1, p0 - 1j * p1, p2 + 1j * p3, p2 - 1j * p3, provenance="stem"
        )

    rng = rng if rng is not None else np.random.default_rng(0)
    z = rng.uniform(-2, 2, samples) + 1j * rng.uniform(0.1, 2, samples)
    A1, A2 = F.evaluate(z)
    B1, B2 = F.evaluate(np.conj(z))
    scale = 1.0 + np.max(np.abs(A1)) + np.max(np.abs(A2))
    parity = max(np.max(np.abs(A1 - B1)), np.max(np.abs(A2 + B2)))
    if parity > config.STRUCTURAL_TOL * scale:
        raise NotAStem(f"stem parity fails with residual {parity:.3e}")

    def f_i(w):
        F1, F2 = F.evaluate(w)
        return F1 + qmul(QI_ARR, F2)

    def complex_part(w):
        return split_array(f_i(w))[0]

    def j_part(w):
        return split_array(f_i(w))[1]

    return SliceFunction(
        holo.SampledMap(complex_part, label="stem:g"),
        holo.SampledMap(lambda w: np.conj(complex_part(np.conj(w))), label="stem:ghat"),
        holo.SampledMap(j_part, label="stem:h"),
        holo.SampledMap(lambda w: np.conj(j_part(np.conj(w))), label="stem:hhat"),
        provenance="stem",
    )


def to_stem(f: SliceFunction) -> StemPair:
    """phi0 = (g + ghat)/2, phi1 = (g - ghat)/2i, phi2 = (h + hhat)/2, phi3 = (h - hhat)/2i"""
    half = 0.5
    return StemPair(
        channels=(
            (f.g + f.ghat) * half,
            (f.g - f.ghat) * (-0.5j),
            (f.h + f.hhat) * half,
            (f.h - f.hhat) * (-0.5j),
        )
    )


def stem_values(f: SliceFunction, v) -> Tuple[np.ndarray, np.ndarray]:
    """
    F1(v) = (f_i(v) + f_i(conj v))/2 and F2(v) = -i (f_i(v) - f_i(conj v))/2 for v in C+
    """
    on_plus, on_minus = f.on_semislices(v)
    F1 = 0.5 * (on_plus + on_minus)
    F2 = qmul(-QI_ARR, 0.5 * (on_plus - on_minus))
    return F1, F2


@dataclass(frozen=True)
class SlicenessVerdict:
    is_slice: bool
    residual: float
    parity_residual: float
    consistency_residual: float


def check_sliceness(
    fn: Callable[[np.ndarray], np.ndarray],
    J: ImaginaryUnit,
    K: ImaginaryUnit,
    rng: np.random.Generator,
    samples: int = 200,
    tol: Optional[float] = None,
) -> SlicenessVerdict:
    """
    Decide whether a quaternion function is slice

    Reconstructs F2 = (J - K)^-1 (f(alpha + J beta) - f(alpha + K beta)) and
    F1 = f(alpha + J beta) - J F2, then measures the parity of (F1, F2) and how
    well F1 + I F2 predicts f(alpha + I beta) for random units I.
    """
    if np.array_equal(J.as_vector(), K.as_vector()):
        raise DegenerateUnits("J and K must differ")
    tol = config.STRUCTURAL_TOL if tol is None else tol
    alpha = rng.uniform(-2, 2, samples)
    beta = rng.uniform(0.1, 2, samples)
    Jq = np.array([0.0, J.a, J.b, J.c])
    Kq = np.array([0.0, K.a, K.b, K.c])
    inv = qinv(Jq - Kq)

    def point(unit, b):
        return np.column_stack([alpha, unit[None, 1:] * b[:, None]])

    def reconstruct(b):
        at_J = fn(point(Jq, b))
        at_K = fn(point(Kq, b))
        F2 = qmul(inv, at_J - at_K)
        F1 = at_J - qmul(Jq, F2)
        return F1, F2

    F1, F2 = reconstruct(beta)
    G1, G2 = reconstruct(-beta)
    parity = float(max(np.max(np.abs(F2 + G2)), np.max(np.abs(F1 - G1))))

    units = random_units(rng, samples)
    Iq = np.column_stack([np.zeros(samples), units])
    predicted = F1 + qmul(Iq, F2)
    actual = fn(np.column_stack([alpha, units * beta[:, None]]))
    consistency = float(np.max(np.abs(predicted - actual)))

    residual = max(parity, consistency)
    logger.info(f"sliceness: parity={parity:.3e} consistency={consistency:.3e}")
    return SlicenessVerdict(residual <= tol, residual, parity, consistency)


def ellipsoid_map(lam: float) -> Callable[[np.ndarray], np.ndarray]:
    """x -> I_x + lam i I_x i"""

    def fn(X):
        _, _, units = decompose_array(X)
        Iq = np.concatenate([np.zeros(units.shape[:-1] + (1,)), units], axis=-1)
        return Iq + lam * qmul(qmul(QI_ARR, Iq), QI_ARR)

    return fn


def check_regular(F: StemPair, rng: np.random.Generator, samples: int = 64, step: Optional[float] = None) -> float:
    """Max Cauchy-Riemann residual dF1/da - dF2/db, dF2/da + dF1/db by central differences"""
    h = config.FD_STEP if step is None else step
    z = rng.uniform(-2, 2, samples) + 1j * rng.uniform(0.2, 2, samples)

    def partials(shift):
        p1, p2 = F.evaluate(z + shift)
        m1, m2 = F.evaluate(z - shift)
        return (p1 - m1) / (2 * h), (p2 - m2) / (2 * h)

    d1a, d2a = partials(h)
    d1b, d2b = partials(1j * h)
    return float(max(np.max(np.abs(d1a - d2b)), np.max(np.abs(d2a + d1b))))


# ---------------------------------------------------------------------------
# Slice algebra
# ---------------------------------------------------------------------------


def _combinator(g, gh, h, hh, domain: Region, name: str, guard: Optional[HoloMap] = None) -> SliceFunction:
    return SliceFunction(g, gh, h, hh, domain=domain, provenance="combinator", name=name, normal_guard=guard)


def slice_product(f: SliceFunction, g: SliceFunction) -> SliceFunction:
    """Splitting of f . g = (g1 g2 - h1 hhat2, ghat1 ghat2 - hhat1 h2, g1 h2 + h1 ghat2, ghat1 hhat2 + hhat1 g2)"""
    if f.domain != g.domain:
        raise DomainMismatch(f"{f.domain} vs {g.domain}")
    g1, gh1, h1, hh1 = f.maps
    g2, gh2, h2, hh2 = g.maps
    guard = f.normal_guard if f.normal_guard is not None else g.normal_guard
    return _combinator(
        g1 * g2 - h1 * hh2,
        gh1 * gh2 - hh1 * h2,
        g1 * h2 + h1 * gh2,
        gh1 * hh2 + hh1 * g2,
        f.domain,
        f"({f.name or 'f'}).({g.name or 'g'})",
        guard,
    )


def conjugate(f: SliceFunction) -> SliceFunction:
    """f^c = (ghat, g, -h, -hhat)"""
    return _combinator(f.ghat, f.g, -f.h, -f.hhat, f.domain, f"({f.name or 'f'})^c")


def normal_map(f: SliceFunction) -> HoloMap:
    """n = g ghat + h hhat, the common splitting entry of N(f)"""
    return f.g * f.ghat + f.h * f.hhat


def normal(f: SliceFunction) -> SliceFunction:
    """N(f) = f^c . f = (n, n, 0, 0)"""
    n = normal_map(f)
    return _combinator(n, n, holo.ZERO, holo.ZERO, f.domain, f"N({f.name or 'f'})")


def reciprocal(f: SliceFunction) -> SliceFunction:
    """f^(-.) = N(f)^-1 f^c"""
    n = normal_map(f)
    return _combinator(
        f.ghat / n, f.g / n, -f.h / n, -f.hhat / n, f.domain, f"({f.name or 'f'})^-1", guard=n
    )


def stem_product_eval(f: SliceFunction, g: SliceFunction, X) -> np.ndarray:
    """Oracle: multiply the stems in H⊗C and induce the result at X"""
    X = np.asarray(X, dtype=float)
    alpha, beta, units = decompose_array(X)
    v = alpha + 1j * beta
    F1, F2 = stem_values(f, v)
    G1, G2 = stem_values(g, v)
    P1 = qmul(F1, G1) - qmul(F2, G2)
    P2 = qmul(F1, G2) + qmul(F2, G1)
    Iq = np.concatenate([np.zeros(units.shape[:-1] + (1,)), units], axis=-1)
    return P1 + qmul(Iq, P2)


def slice_derivative(f: SliceFunction) -> SliceFunction:
    """df/dx with splitting (g', ghat', h', hhat')"""
    return replace(
        f,
        g=f.g.derivative(),
        ghat=f.ghat.derivative(),
        h=f.h.derivative(),
        hhat=f.hhat.derivative(),
        name=f"d({f.name or 'f'})",
        normal_guard=None,
    )


def spherical_derivative_many(f: SliceFunction, X) -> np.ndarray:
    """1/2 Im(x)^-1 (f(x) - f(x^c))"""
    X = np.asarray(X, dtype=float)
    Xc = X * np.array([1.0, -1.0, -1.0, -1.0])
    im = X * np.array([0.0, 1.0, 1.0, 1.0])
    return 0.5 * qmul(qinv(im), eval_many(f, X) - eval_many(f, Xc))


def spherical_derivative(f: SliceFunction, x: Quaternion) -> Quaternion:
    decompose(x)
    return Quaternion.from_array(spherical_derivative_many(f, x.as_array()[None, :])[0])


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantAffineClass:
    """
    kind is one of constant, slice-constant, slice-affine, neither

    Coefficients use the basis e+- = (1 +- Ii)/2 with J = i: q- is the value
    on C_i+ and q+ the value on C_-i+.
    """

    kind: str
    coefficients: Dict[str, Quaternion]
    extends_to_R: bool


def _sample_domain(f: SliceFunction, rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.uniform(-2, 2, 4 * n) + 1j * rng.uniform(0.2, 2, 4 * n)
    v = v[f.domain.contains(v)]
    if len(v) < n:
        raise OutOfDomain("could not sample the domain of f")
    return v[:n]


def _semislice_values(f: SliceFunction, v: complex) -> Tuple[Quaternion, Quaternion]:
    on_plus, on_minus = f.on_semislices(np.array([v]))
    return Quaternion.from_array(on_plus[0]), Quaternion.from_array(on_minus[0])


def _vanishes(f: SliceFunction, v: np.ndarray, tol: float) -> bool:
    values = np.stack(f.quadruple(v))
    return bool(np.all(np.isfinite(values)) and np.max(np.abs(values)) <= tol)


def classify_constant_affine(
    f: SliceFunction, rng: np.random.Generator, samples: int = 32, tol: Optional[float] = None
) -> ConstantAffineClass:
    if tol is None:
        tol = config.STRUCTURAL_TOL if f.is_expression() else 1e3 * config.FD_TOL
    v = _sample_domain(f, rng, samples)
    d1 = slice_derivative(f)

    if _vanishes(d1, v, tol):
        q_minus, q_plus = _semislice_values(f, v[0])
        extends = q_plus.distance(q_minus) <= tol
        kind = "constant" if extends else "slice-constant"
        return ConstantAffineClass(kind, {"q+": q_plus, "q-": q_minus}, extends)

    if _vanishes(slice_derivative(d1), v, tol):
        s_minus, s_plus = _semislice_values(d1, v[0])
        x_s = slice_product(from_maps(holo.V, holo.V, domain=f.domain), d1)
        remainder = SliceFunction(
            f.g - x_s.g, f.ghat - x_s.ghat, f.h - x_s.h, f.hhat - x_s.hhat, domain=f.domain
        )
        c_minus, c_plus = _semislice_values(remainder, v[0])
        extends = s_plus.distance(s_minus) <= tol and c_plus.distance(c_minus) <= tol
        coefficients = {"q1+": s_plus, "q1-": s_minus, "q0+": c_plus, "q0-": c_minus}
        return ConstantAffineClass("slice-affine", coefficients, extends)

    return ConstantAffineClass("neither", {}, False)


def is_real(f: SliceFunction, rng: np.random.Generator, samples: int = 64, tol: Optional[float] = None) -> bool:
    """f(C_J) in C_J for random J, and f(x^c) = f(x)^c"""
    tol = config.STRUCTURAL_TOL if tol is None else tol
    X = random_quaternions(rng, samples, min_imag=0.1)
    Y = eval_many(f, X)
    units = X[:, 1:] / np.linalg.norm(X[:, 1:], axis=1, keepdims=True)
    im = Y[:, 1:]
    off_slice = im - np.sum(im * units, axis=1, keepdims=True) * units
    Yc = eval_many(f, X * np.array([1.0, -1.0, -1.0, -1.0]))
    conj_gap = Y - Yc * np.array([1.0, -1.0, -1.0, -1.0])
    scale = 1.0 + np.max(np.abs(Y))
    return bool(max(np.max(np.abs(off_slice)), np.max(np.abs(conj_gap))) <= tol * scale)


def extends_to_R(f: SliceFunction, rng: np.random.Generator, samples: int = 32, eps: float = 1e-9) -> bool:
    """ghat = conj(g) and hhat = conj(h) on points alpha + i eps approaching R"""
    alpha = rng.uniform(-2, 2, samples)
    v = alpha + 1j * eps
    g, gh, h, hh = f.quadruple(v)
    gap = np.concatenate([np.abs(gh - np.conj(g)), np.abs(hh - np.conj(h))])
    if not np.all(np.isfinite(gap)):
        return False
    return bool(np.max(gap) <= config.FD_TOL)
