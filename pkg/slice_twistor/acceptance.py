"""
Acceptance Battery
End-to-end identities checked by the `suite` command
"""

import math
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

import grass
import holo
import ocs
import surfaces
from config import config
from logger import log_structured, logger
from performance import performance_context
from qcore import UNIT_I, UNIT_J, Quaternion
from sampling import make_rng, random_complex, random_quaternions, random_upper, spawn
from schema import CheckResult
from slice_function import (
    SliceFunction,
    affine,
    check_sliceness,
    ellipsoid_map,
    eval_many,
    from_maps,
    identity,
    mobius_semislice,
    real_polynomial,
    semislice_constant,
    semislice_identity,
    x_minus_j,
)
from twistor import commuting_square_residuals, lift_array, quadric_Q_values
from utils import chordal_distance_many, create_check

SOUTH = (-1.0, 0.0, 0.0)

# Verdict thresholds for counts and separations; numerical tolerances come from the table
NO_MISSES = 0.5
OFF_QUADRIC_FRACTION = 0.99
REJECTION_MARGIN = 1.0
FALSIFIER_MARGIN = 1e-3

Tolerances = Optional[Dict[str, float]]


def resolve_tolerances(overrides: Tolerances = None) -> Dict[str, float]:
    """
    Configured tolerance table with per-run overrides applied

    Raises:
        KeyError: for a name that is not in the table
    """
    table = config.tolerances()
    for name, value in (overrides or {}).items():
        if name not in table:
            raise KeyError(f"unknown tolerance {name!r}")
        table[name] = float(value)
    return table


def battery() -> List[SliceFunction]:
    """Expression-built functions used by several checks"""
    return [
        identity(),
        real_polynomial([0, 0, 1]).with_name("x^2"),
        x_minus_j(),
        semislice_identity(-1),
        semislice_constant(-1),
        surfaces.cubic_nonnormal_1_function(),
    ]


def balanced_semislice() -> SliceFunction:
    """x on C_i+ and x j on C_-i+; slopes 1 and j are h_i-orthogonal"""
    return from_maps(holo.V, 0, 0, holo.V, name="x | xj")


def check_lift_identity(
    rng: np.random.Generator, samples: int = 1000, tol: Tolerances = None
) -> List[CheckResult]:
    """Lift of x(1 - Ii)/2 is [1, u, v, 0]"""
    tol = resolve_tolerances(tol)
    u = random_complex(rng, samples)
    v = random_upper(rng, samples)
    lifted = lift_array(semislice_identity(-1), u, v)
    expected = np.stack([np.ones_like(u), u, v, np.zeros_like(u)], axis=-1)
    residual = np.max(chordal_distance_many(lifted, expected))
    return [create_check("lift identity", residual, tol["chordal"])]


def check_commuting_square(
    rng: np.random.Generator, samples: int = 500, tol: Tolerances = None
) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    checks = []
    for f in battery():
        u = random_complex(rng, samples)
        v = random_upper(rng, samples, box=(-2.0, 2.0, 0.1, 2.0))
        residual = np.max(commuting_square_residuals(f, u, v))
        checks.append(create_check(f"commuting square {f.name}", residual, tol["chordal"]))
    return checks


def check_real_quadric(
    rng: np.random.Generator, samples: int = 500, tol: Tolerances = None
) -> List[CheckResult]:
    """Real functions lift into X0 X3 = X1 X2, x(1 - Ii)/2 does not"""
    tol = resolve_tolerances(tol)
    u = random_complex(rng, samples)
    v = random_upper(rng, samples)
    real_lift = lift_array(real_polynomial([1, 0, 1]), u, v)
    on_quadric = np.abs(quadric_Q_values(real_lift)) / np.linalg.norm(real_lift, axis=-1) ** 2
    off_lift = lift_array(semislice_identity(-1), u, v)
    off_quadric = np.abs(quadric_Q_values(off_lift)) / np.linalg.norm(off_lift, axis=-1) ** 2
    violated = float(np.mean(off_quadric > tol["structural"]))
    return [
        create_check("real lift on Q", np.max(on_quadric), tol["structural"]),
        create_check("x(1-Ii)/2 lift off Q (fraction)", violated, OFF_QUADRIC_FRACTION, above=True),
    ]


def check_surface_memberships(
    rng: np.random.Generator, samples: int = 500, tol: Tolerances = None
) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    cases: List[Tuple[surfaces.HomoPoly, SliceFunction]] = [
        (surfaces.plane([0, 0, 0, 1]), semislice_identity(-1)),
        (surfaces.cubic_nonnormal_1(), surfaces.cubic_nonnormal_1_function()),
        (surfaces.cubic_nonnormal_2(), surfaces.cubic_nonnormal_2_function()),
        (surfaces.quadric_cone(), surfaces.quadric_cone_function()),
    ]
    cases += [(surfaces.cubic_cone(c), surfaces.solve_cubic_cone_splitting(c)) for c in (0, 1, 2)]
    checks = []
    for P, f in cases:
        report = surfaces.contains_lift(P, f, samples=samples, rng=rng, tol=tol["membership"])
        checks.append(create_check(f"membership {P.name}", report.residual, report.tolerance))
    return checks


QUADDIAG_CASES = [(0.0, 0.0, 0.0), (0.3, 0.3, math.pi / 2), (0.2, 0.7, 0.3)]


def check_quadric_solver(
    rng: np.random.Generator, samples: int = 500, tol: Tolerances = None
) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    checks = []
    for lam, mu, nu in QUADDIAG_CASES:
        f = surfaces.solve_quaddiag_splitting(lam, mu, nu)
        report = surfaces.contains_lift(
            surfaces.quaddiag(lam, mu, nu), f, samples=samples, rng=rng, tol=tol["membership"], margin=1e-3
        )
        checks.append(create_check(f"quaddiag solver ({lam:g},{mu:g},{nu:.4g})", report.residual, report.tolerance))
    return checks


def _example_curves() -> List[Tuple[SliceFunction, Callable[[np.ndarray], np.ndarray]]]:
    def const(*values):
        return lambda v: np.broadcast_to(np.array(values, dtype=complex), v.shape + (6,))

    def linear(index):
        def fn(v):
            out = np.zeros(v.shape + (6,), dtype=complex)
            out[..., index] = v if index == 3 else -v
            out[..., 5] = 1.0
            return out

        return fn

    return [
        (semislice_constant(-1), const(0, 0, -2, 0, 0, 1)),
        (semislice_constant(1), const(0, 0, 0, 2, 0, 1)),
        (semislice_identity(-1), linear(2)),
        (semislice_identity(1), linear(3)),
    ]


def check_transforms(
    rng: np.random.Generator, samples: int = 200, tol: Tolerances = None
) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    v = random_upper(rng, samples)
    exact = 0.0
    for f, expected in _example_curves():
        exact = max(exact, float(np.max(np.abs(grass.transform(f).evaluate(v) - expected(v)))))

    klein = 0.0
    wedge = 0.0
    functions = battery() + [surfaces.solve_quaddiag_splitting(*case) for case in QUADDIAG_CASES]
    for f in functions:
        xi = grass.transform(f).evaluate(v)
        klein = max(klein, float(np.max(np.abs(grass.klein_residual_array(xi)) / np.max(np.abs(xi), axis=-1) ** 2)))
        e1, e2 = grass.generating_vectors(f, v)
        gap = np.abs(xi - grass.wedge_oracle(e1, e2)) / np.max(np.abs(xi), axis=-1, keepdims=True)
        wedge = max(wedge, float(np.max(gap)))
    return [
        create_check("transform examples", exact, tol["structural"]),
        create_check("Klein relation", klein, tol["structural"]),
        create_check("wedge oracle", wedge, tol["structural"]),
    ]


def check_twistor_lines(rng: np.random.Generator, tol: Tolerances = None) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    curve = grass.transform(surfaces.solve_quaddiag_splitting(math.log(2), math.log(2), math.pi / 2))
    lines = grass.find_twistor_lines(curve, tol=tol["twistor_line"])
    targets = [-1.0, 1.0]
    if len(lines) == len(targets):
        offset = max(abs(line.v - t) for line, t in zip(lines, targets))
        worst = max(line.residual for line in lines)
    else:
        offset = worst = math.inf
    empty_curve = grass.transform(surfaces.solve_quaddiag_splitting(0.0, 0.0, 0.5))
    spurious = len(grass.find_twistor_lines(empty_curve, tol=tol["twistor_line"]))
    return [
        create_check("twistor lines at +-1", offset, tol["root_cluster_radius"]),
        create_check("twistor line residual", worst, tol["twistor_line"]),
        create_check("no twistor lines for nu=0.5", spurious, NO_MISSES),
    ]


MOBIUS_CASES = [(1.0, 0.0, 0.0, 1.0), (2.0, 1.0, 1.0, 1.0), (1.0, 0.0, 1.0, 1.0)]


def check_hermitian(rng: np.random.Generator, tol: Tolerances = None) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    checks = []
    for A, B, C, D in MOBIUS_CASES:
        f = mobius_semislice(A, B, C, D)
        result = grass.check_affine_transform(f, D, C, rng=rng, fit_tol=tol["membership"])
        residual = abs(result.hermitian_residual) if result.affine else math.inf
        checks.append(create_check(f"hermitian mobius({A:g},{B:g};{C:g},{D:g})", residual, tol["structural"]))

    result = grass.check_affine_transform(balanced_semislice(), 1.0, 0.0, rng=rng, fit_tol=tol["membership"])
    residual = abs(result.hermitian_residual) if result.affine else math.inf
    checks.append(create_check("hermitian x | xj", residual, tol["structural"]))

    falsifier = affine(Quaternion(1.0, 0.0, 1.0), Quaternion(0.0)).with_name("x(1+j)")
    result = grass.check_affine_transform(falsifier, 1.0, 0.0, rng=rng, fit_tol=tol["membership"])
    checks.append(
        create_check("hermitian falsifier x(1+j)", abs(result.hermitian_residual), FALSIFIER_MARGIN, above=True)
    )
    return checks


def _upper_i(rng: np.random.Generator, n: int) -> np.ndarray:
    Q = rng.normal(size=(n, 4))
    Q[:, 1] = np.abs(Q[:, 1]) + 0.05
    return Q


def check_ocs(rng: np.random.Generator, samples: int = 1000, tol: Tolerances = None) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    Q = _upper_i(rng, samples)
    intertwine = np.max(ocs.verify_intertwine_many(Q))

    X = random_quaternions(rng, samples, min_imag=0.1, avoid_unit=SOUTH, unit_margin=0.1)
    f0 = semislice_identity(-1)
    pushed = ocs.pushforward_many(f0, X)
    pushforward = np.max(ocs.pushforward_residuals(f0, X))

    u = random_complex(rng, samples)
    matrices = [np.stack([ocs.j_from_twistor(z).matrix for z in u]), ocs.jf_many(Q), pushed]
    matrices.append(np.stack([ocs.j_slice(Quaternion.from_array(x)).matrix for x in X[:50]]))
    structure = max(float(np.max(ocs.structure_residuals_many(M))) for M in matrices)
    return [
        create_check("intertwining dg J^f = J_i dg", intertwine, tol["structural"]),
        create_check("push-forward is left multiplication by I_x", pushforward, tol["pushforward"]),
        create_check("structure matrix invariants", structure, tol["structural"]),
    ]


def check_image_preimage(
    rng: np.random.Generator, samples: int = 1000, tol: Tolerances = None
) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    round_trip = 0.0
    for row in _upper_i(rng, samples):
        q = Quaternion.from_array(row)
        x = ocs.preimage(q).to_quaternion()
        round_trip = max(round_trip, ocs.image_point(x).distance(q) / (1.0 + q.norm()))

    X = random_quaternions(rng, samples, min_imag=0.05, avoid_unit=SOUTH, unit_margin=1e-3)
    images = eval_many(semislice_identity(-1), X)
    return [
        create_check("preimage round trip", round_trip, tol["structural"]),
        create_check("image in q1 > 0 (min q1)", float(np.min(images[:, 1])), 0.0, above=True),
    ]


def check_quartic_scroll(
    rng: np.random.Generator, samples: int = 1000, tol: Tolerances = None
) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    P = surfaces.quartic_scroll()
    missed = sum(
        not surfaces.fiber_cardinality(P, Quaternion(t * t, t), tol=tol["zero_coef"]).contained
        for t in (0.3, 0.7, 1.5)
    )

    generic = rng.normal(size=(samples, 4))
    not_four = sum(
        surfaces.fiber_cardinality(P, Quaternion.from_array(q), tol=tol["zero_coef"]).count != P.degree
        for q in generic
    )

    radius = rng.uniform(0.1, 0.45, 5)
    angle = rng.uniform(0.0, 2 * math.pi, 5)
    no_tangency = 0
    for r, a in zip(radius, angle):
        q = Quaternion(0.25 - r * r, 0.0, r * math.cos(a), r * math.sin(a))
        result = surfaces.fiber_cardinality(P, q, tol=tol["zero_coef"])
        no_tangency += int(result.contained or 2 not in result.multiplicities)
    return [
        create_check("scroll fibers over the parabola contained (misses)", missed, NO_MISSES),
        create_check("random scroll fibers with 4 points counting multiplicity (misses)", not_four, NO_MISSES),
        create_check("tangent fibers over the paraboloid (misses)", no_tangency, NO_MISSES),
    ]


def check_negative_control(
    rng: np.random.Generator, samples: int = 200, tol: Tolerances = None
) -> List[CheckResult]:
    tol = resolve_tolerances(tol)
    verdict = check_sliceness(ellipsoid_map(2.0), UNIT_I, UNIT_J, rng, samples=samples)
    accepted = 0.0
    for f in battery():
        result = check_sliceness(lambda X, f=f: eval_many(f, X), UNIT_I, UNIT_J, rng, samples=samples)
        accepted = max(accepted, result.residual)
    return [
        create_check("ellipsoid map rejected", verdict.residual, REJECTION_MARGIN, above=True),
        create_check("expression-built functions accepted", accepted, tol["structural"]),
    ]


SUITE: List[Tuple[str, Callable[..., List[CheckResult]], float]] = [
    ("lift-identity", check_lift_identity, 1.0),
    ("commuting-square", check_commuting_square, 5.0),
    ("real-quadric", check_real_quadric, 2.0),
    ("surface-membership", check_surface_memberships, 10.0),
    ("quadric-solver", check_quadric_solver, 5.0),
    ("transforms", check_transforms, 2.0),
    ("twistor-lines", check_twistor_lines, 10.0),
    ("hermitian", check_hermitian, 3.0),
    ("ocs", check_ocs, 5.0),
    ("image-preimage", check_image_preimage, 2.0),
    ("quartic-scroll", check_quartic_scroll, 5.0),
    ("negative-control", check_negative_control, 1.0),
]


def run_suite(seed: int, tol: Tolerances = None) -> Tuple[List[CheckResult], Dict[str, float]]:
    """
    Run every acceptance group with its own seeded generator

    Args:
        seed: base seed; group k uses the k-th spawned generator
        tol: overrides for the configured tolerance table, by name

    Returns:
        (checks, wall time per group)
    """
    table = resolve_tolerances(tol)
    children = spawn(make_rng(seed), len(SUITE))
    checks: List[CheckResult] = []
    timings: Dict[str, float] = {}
    for (name, fn, budget), rng in zip(SUITE, children):
        with performance_context(name, budget) as timer:
            group = fn(rng, tol=table)
        timings[name] = timer.elapsed
        failing = [c.name for c in group if not c.verdict]
        log_structured(logger, "info", "suite group", group=name, checks=len(group), failing=len(failing))
        checks.extend(group)
    return checks, timings
