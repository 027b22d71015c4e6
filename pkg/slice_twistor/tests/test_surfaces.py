"""
Unit Tests for Surfaces
"""

import sys
sys.path.append('..')

import math

import numpy as np
import pytest

from exceptions import BranchInconsistent, DegeneratePlane, TooLarge
from qcore import Quaternion
from sampling import make_rng
from slice_function import identity, load_function, real_polynomial, x_minus_j
from surfaces import (
    CATALOG,
    HomoPoly,
    cluster_roots,
    contains_lift,
    cubic_cone,
    cubic_nonnormal_1,
    cubic_nonnormal_1_function,
    cubic_nonnormal_2,
    cubic_nonnormal_2_function,
    discriminant_scan,
    fiber_cardinality,
    load_surface,
    plane,
    plane_pair,
    plane_pair_function,
    quaddiag,
    quadnondiag_function,
    quadnondiag_realized,
    quadric_cone,
    quadric_cone_function,
    quadric_Q,
    quartic_scroll,
    scan_grid,
    solve_cubic_cone_splitting,
    solve_plane_splitting,
    solve_quaddiag_splitting,
    symbolic_crosscheck,
)


def test_homogeneous_polynomials():
    """Test construction, homogeneity and JSON form"""
    for build in CATALOG.values():
        P = build()
        assert P.check_homogeneity(rng=1) < 1e-10, P.name

    with pytest.raises(ValueError):
        HomoPoly(2, {(1, 0, 0, 0): 1.0})
    with pytest.raises(ValueError):
        HomoPoly(1, {(1, 0, 0, 0): 0.0})

    P = quartic_scroll()
    rebuilt = HomoPoly.from_json(P.to_json())
    assert rebuilt == P

    X = np.array([[1, 2, 3, 4]], dtype=complex)
    assert quadric_Q().evaluate(X)[0] == 1 * 4 - 2 * 3

    print("✅ Homogeneous polynomial tests passed")


def test_restrict_affine():
    """Test P(a + u b) coefficient extraction"""
    P = quadric_Q()
    a = np.array([1, 0, 2, 3], dtype=complex)
    b = np.array([0, 1, -1, 5], dtype=complex)
    # (1)(3 + 5u) - (u)(2 - u) = 3 + 3u + u^2
    assert np.allclose(P.restrict_affine(a, b), [3, 3, 1])
    assert np.allclose(P.restrict_affine_many(a[None, :], b[None, :])[0], [3, 3, 1])

    print("✅ Affine restriction tests passed")


def test_catalog_loading():
    """Test loading surfaces by name, path and inline JSON"""
    assert load_surface("quadric_Q") == quadric_Q()
    assert load_surface("cubic_nonnormal_1") == cubic_nonnormal_1()
    inline = load_surface('{"degree": 1, "terms": [{"exp": [0, 0, 0, 1], "coef": [1, 0]}]}')
    assert inline.terms == plane([0, 0, 0, 1]).terms
    with pytest.raises(FileNotFoundError):
        load_surface("no_such_surface")

    print("✅ Catalog loading tests passed")


def test_surface_file_round_trip(tmp_path):
    """Test writing a surface file and loading it by path"""
    P = cubic_nonnormal_2()
    path = tmp_path / "cubic.json"
    P.to_file(path)
    assert HomoPoly.from_file(path) == P
    assert load_surface(str(path)).terms == P.terms

    print("✅ Surface file round trip tests passed")


def test_contains_lift_catalog():
    """Test membership for the catalog surfaces with known splittings"""
    cases = [
        (quadric_Q(), real_polynomial([1.0, 0.0, 1.0])),
        (cubic_nonnormal_1(), cubic_nonnormal_1_function()),
        (cubic_nonnormal_2(), cubic_nonnormal_2_function()),
        (quadric_cone(), quadric_cone_function()),
        (plane_pair(), plane_pair_function()),
        (quadnondiag_realized(), quadnondiag_function()),
    ]
    for P, f in cases:
        report = contains_lift(P, f, samples=500, rng=31)
        assert report.contained, (P.name, report.residual)
        assert report.residual < 1e-8

    print("✅ Catalog membership tests passed")


def test_contains_lift_rejects():
    """Test that non-members are rejected"""
    report = contains_lift(quadric_Q(), x_minus_j(), samples=100, rng=32)
    assert not report.contained
    assert report.residual > 1e-3
    assert report.worst_v is not None

    report = contains_lift(plane([0, 0, 0, 1]), identity(), samples=100, rng=32)
    assert not report.contained

    print("✅ Membership rejection tests passed")


def test_catalog_function_files():
    """Test the shipped function files against their surfaces"""
    assert contains_lift(cubic_nonnormal_1(), load_function("cubic1"), rng=33).contained
    assert contains_lift(quadric_cone(), load_function("cone"), rng=33).contained
    assert contains_lift(plane_pair(), load_function("planepair"), rng=33).contained

    print("✅ Function file tests passed")


def test_plane_splitting():
    """Test the plane solver on both branches"""
    f = solve_plane_splitting([0, 0, 0, 1], g="v", hhat=0)
    v = 0.3 + 0.8j
    assert f.h(v) == 0 and f.ghat(v) == 0
    assert contains_lift(plane([0, 0, 0, 1]), f, rng=34).contained

    f = solve_plane_splitting([1, 0, 0, 1], g="v", hhat=1)
    assert f.h(v) == pytest.approx(-1.0)
    assert f.ghat(v) == pytest.approx(0.0)
    report = contains_lift(plane([1, 0, 0, 1]), f, rng=34)
    assert report.residual < 1e-12

    f = solve_plane_splitting([0, 0, 1, 0])
    assert f.g(v) == 0
    assert contains_lift(plane([0, 0, 1, 0]), f, rng=34).contained

    with pytest.raises(DegeneratePlane):
        solve_plane_splitting([1, 1, 0, 0])

    print("✅ Plane splitting tests passed")


def test_quaddiag_splitting():
    """Test the diagonal quadric solver"""
    lam, mu, nu = 0.2, 0.7, 0.3
    f = solve_quaddiag_splitting(lam, mu, nu)
    assert f.ghat(1.0) == pytest.approx(math.exp(0.5))
    report = contains_lift(quaddiag(lam, mu, nu), f, samples=500, rng=35)
    assert report.residual < 1e-8

    minus = solve_quaddiag_splitting(lam, mu, nu, sign=-1)
    assert minus.ghat(1.0) == pytest.approx(-math.exp(0.5))
    assert contains_lift(quaddiag(lam, mu, nu), minus, rng=35).contained

    # lam = mu gives h^2 = e^(2 lam) (1 - v^2) at nu = pi/2
    f = solve_quaddiag_splitting(0.3, 0.3, math.pi / 2)
    v = 0.4 + 0.5j
    assert f.h(v) ** 2 == pytest.approx(math.exp(0.6) * (1 - v**2))

    # non-finite parameters leave no square root pairing to compare
    with pytest.raises(BranchInconsistent):
        solve_quaddiag_splitting(0.0, 0.0, math.inf)

    print("✅ Diagonal quadric splitting tests passed")


def test_cubic_cone_splitting():
    """Test cubic cone splittings for nodal, cuspidal and generic c"""
    for c in (0, 1, 2):
        f = solve_cubic_cone_splitting(c)
        report = contains_lift(cubic_cone(c), f, samples=500, rng=36)
        assert report.residual < 1e-8, c

    nodal = solve_cubic_cone_splitting(0)
    v = 0.5 + 1.0j
    assert nodal.hhat(v) ** 2 == pytest.approx(v**3 - v**2)

    print("✅ Cubic cone splitting tests passed")


def test_symbolic_crosscheck():
    """Test exact sympy expansion at rational points"""
    assert symbolic_crosscheck(cubic_nonnormal_1(), cubic_nonnormal_1_function(), rng=37).status == "passed"
    assert symbolic_crosscheck(plane([0, 0, 0, 1]), identity(), rng=37).status == "failed"
    skipped = symbolic_crosscheck(quaddiag(0.2, 0.7, 0.3), solve_quaddiag_splitting(0.2, 0.7, 0.3))
    assert skipped.status == "skipped"

    print("✅ Symbolic cross-check tests passed")


def test_cluster_roots():
    """Test multiplicity clustering"""
    clusters = cluster_roots(np.array([1.0, 1.0 + 1e-9, 2.0, -1j]))
    assert sorted(m for _, m in clusters) == [1, 1, 2]

    print("✅ Root clustering tests passed")


def test_fiber_cardinality():
    """Test fiber intersections with the quartic scroll and the real quadric"""
    P = quartic_scroll()
    t = 0.7
    assert fiber_cardinality(P, Quaternion(t * t, t)).contained

    generic = fiber_cardinality(P, Quaternion(1.0, 0.0, 1.0))
    assert not generic.contained
    assert generic.count == 4

    # On the paraboloid q1 = 0, q0 = 1/4 - (q2^2 + q3^2): two double roots
    tangent = fiber_cardinality(P, Quaternion(0.0, 0.0, 0.5, 0.0))
    assert tangent.tangency
    assert sorted(tangent.multiplicities) == [2, 2]

    # Q meets the fiber over 1 + 2i at t = 0 and t = infinity
    result = fiber_cardinality(quadric_Q(), Quaternion(1.0, 2.0))
    assert result.count == 2 and result.distinct == 2
    assert None in result.roots
    assert fiber_cardinality(quadric_Q(), Quaternion(3.0)).contained

    print("✅ Fiber cardinality tests passed")


def test_discriminant_scan():
    """Test the grid scan on a plane"""
    report = discriminant_scan(plane([0, 0, 0, 1]), [-1, 1] * 4, 3, threads=2)
    summary = report.summary()
    assert summary["cells"] == 81
    assert summary["contained-fiber"] == 1
    assert summary["generic"] == 80
    assert summary["non-generic-cardinality"] == 0
    assert len(report.rows()) == 81 and report.rows()[0][4] == 1

    assert scan_grid([0, 1] * 4, 1).shape == (1, 4)
    with pytest.raises(TooLarge):
        scan_grid([0, 1] * 4, 65)
    with pytest.raises(ValueError):
        scan_grid([0, 1] * 3, 2)

    print("✅ Discriminant scan tests passed")


def test_scroll_scan_across_paraboloid():
    """Test that tangent fibers keep their full count in scan rows"""
    report = discriminant_scan(quartic_scroll(), [0, 0, 0, 0, 0.5, 0.5, 0, 0], 1)
    assert report.rows() == [[0.0, 0.0, 0.5, 0.0, 4, "tangency", "2;2"]]
    assert report.summary()["tangency"] == 1
    assert report.summary()["non-generic-cardinality"] == 0

    # q0 in {-0.75, -0.25, 0.25}, q2 in {0, 0.5, 1}; (0.25, 0) and (-0.75, 1) lie on the paraboloid
    report = discriminant_scan(quartic_scroll(), [-0.75, 0.25, 0, 0, 0, 1, 0, 0], [3, 1, 3, 1], threads=2)
    rows = {(row[0], row[2]): row for row in report.rows()}
    assert rows[(0.25, 0.0)][4:6] == [4, "tangency"]
    assert rows[(-0.75, 1.0)][4:6] == [4, "tangency"]
    assert all(row[4] == 4 for row in report.rows())
    assert report.summary()["non-generic-cardinality"] == 0

    print("✅ Scroll scan tests passed")


def test_random_fibers_have_full_count():
    """Test that random fibers meet every catalog surface in d points with multiplicity"""
    rng = make_rng(11)
    points = rng.normal(size=(1000, 4))
    for name, build in CATALOG.items():
        P = build()
        results = [fiber_cardinality(P, Quaternion.from_array(q)) for q in points]
        assert not any(r.contained for r in results), name
        assert all(r.count == P.degree for r in results), name

    print("✅ Random fiber cardinality tests passed")


if __name__ == "__main__":
    print("🧪 Running Surface Tests...\n")

    test_homogeneous_polynomials()
    test_restrict_affine()
    test_catalog_loading()
    test_contains_lift_catalog()
    test_contains_lift_rejects()
    test_catalog_function_files()
    test_plane_splitting()
    test_quaddiag_splitting()
    test_cubic_cone_splitting()
    test_symbolic_crosscheck()
    test_cluster_roots()
    test_fiber_cardinality()
    test_discriminant_scan()
    test_scroll_scan_across_paraboloid()
    test_random_fibers_have_full_count()

    print("\n🎉 All surface tests completed!")
