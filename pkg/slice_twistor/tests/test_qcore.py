"""
Unit Tests for Quaternion Core
"""

import sys
sys.path.append('..')

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import RealInput, SouthPole
from qcore import (
    CQuaternion,
    ImaginaryUnit,
    I_from_u,
    QI,
    QJ,
    QK,
    Q_u,
    Quaternion,
    UNIT_I,
    UNIT_J,
    cq_mul,
    cq_mul_bruteforce,
    decompose,
    decompose_array,
    left_matrix,
    qmul,
    recompose,
    u_from_I,
)

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, finite, finite, finite, finite)


def test_hamilton_rules():
    """Test i^2 = j^2 = k^2 = ijk = -1"""
    minus_one = Quaternion(-1.0)
    assert QI * QI == minus_one
    assert QJ * QJ == minus_one
    assert QK * QK == minus_one
    assert QI * QJ * QK == minus_one
    assert QI * QJ == QK
    assert QJ * QI == -QK

    print("✅ Hamilton rule tests passed")


@settings(max_examples=50)
@given(quaternions, quaternions, quaternions)
def test_product_associative(p, q, r):
    """Test associativity of the Hamilton product"""
    lhs = (p * q) * r
    rhs = p * (q * r)
    assert lhs.distance(rhs) <= 1e-9 * (1 + p.norm() * q.norm() * r.norm())


@settings(max_examples=50)
@given(quaternions, quaternions)
def test_left_matrix_matches_product(p, q):
    """Test that left_matrix(p) @ q is p q"""
    via_matrix = left_matrix(p.as_array()) @ q.as_array()
    assert np.allclose(via_matrix, qmul(p.as_array(), q.as_array()), atol=1e-9)


def test_inverse_and_division():
    """Test inverse and right division"""
    q = Quaternion(1.0, 2.0, 3.0, 1.0)
    assert (q * q.inverse()).distance(Quaternion(1.0)) < 1e-12
    assert ((q / q) - 1).norm() < 1e-12

    with pytest.raises(ZeroDivisionError):
        Quaternion(0.0).inverse()

    print("✅ Inverse tests passed")


def test_decompose_example():
    """Test slice coordinates of 1 + 2i + 3j + k"""
    coords = decompose(Quaternion(1.0, 2.0, 3.0, 1.0))
    assert coords.alpha == 1.0
    assert coords.beta == pytest.approx(np.sqrt(14.0))
    assert np.allclose(coords.I.as_vector(), np.array([2.0, 3.0, 1.0]) / np.sqrt(14.0))
    assert recompose(coords).distance(Quaternion(1.0, 2.0, 3.0, 1.0)) < 1e-12

    conj = coords.conj()
    assert conj.beta == coords.beta
    assert conj.to_quaternion().distance(Quaternion(1.0, -2.0, -3.0, -1.0)) < 1e-12

    print("✅ Decompose tests passed")


def test_decompose_rejects_reals():
    """Test that real quaternions have no slice coordinates"""
    with pytest.raises(RealInput):
        decompose(Quaternion(2.5))
    with pytest.raises(RealInput):
        decompose(Quaternion(2.5, 1e-12), tol=1e-10)

    alpha, beta, units = decompose_array(np.array([[1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 2.0, 0.0]]))
    assert beta[0] == 0.0 and np.all(np.isnan(units[0]))
    assert np.allclose(units[1], [0.0, 1.0, 0.0])

    print("✅ Real axis tests passed")


def test_imaginary_unit_validation():
    """Test that non-unit vectors are rejected"""
    with pytest.raises(ValueError):
        ImaginaryUnit(1.0, 1.0, 0.0)
    with pytest.raises(RealInput):
        ImaginaryUnit.from_vector([0.0, 0.0, 0.0])
    # Unit imaginary quaternions square to -1
    unit = ImaginaryUnit.from_vector([1.0, -2.0, 2.0]).as_quaternion()
    assert (unit * unit).distance(Quaternion(-1.0)) < 1e-12

    print("✅ Imaginary unit tests passed")


def test_chart_fixed_points():
    """Test u = 0 at i and u = -i at j"""
    assert u_from_I(UNIT_I) == 0
    assert abs(u_from_I(UNIT_J) - (-1j)) < 1e-12
    assert np.allclose(I_from_u(0).as_vector(), [1.0, 0.0, 0.0])

    with pytest.raises(SouthPole):
        u_from_I(UNIT_I.neg())

    print("✅ Chart fixed point tests passed")


@settings(max_examples=50)
@given(finite, finite)
def test_chart_round_trip(re, im):
    """Test u -> I(u) -> u"""
    u = complex(re, im)
    back = u_from_I(I_from_u(u))
    assert abs(back - u) <= 1e-9 * (1 + abs(u) ** 2)


@settings(max_examples=50)
@given(finite, finite)
def test_Q_u_conjugates_i(re, im):
    """Test Q_u^-1 i Q_u = I(u)"""
    u = complex(re, im)
    Q = Q_u(u)
    rotated = Q.inverse() * QI * Q
    assert rotated.distance(I_from_u(u).as_quaternion()) < 1e-9


def test_complexified_product():
    """Test the closed-form H⊗C product against the basis expansion"""
    rng = np.random.default_rng(7)
    for _ in range(20):
        a, b, c, d = (Quaternion.from_array(rng.normal(size=4)) for _ in range(4))
        p = CQuaternion(a, b)
        q = CQuaternion(c, d)
        assert cq_mul(p, q).distance(cq_mul_bruteforce(p, q)) < 1e-12

    # sqrt(-1) commutes with quaternions
    s = CQuaternion(Quaternion(0.0), Quaternion(1.0))
    x = CQuaternion(QJ, QK)
    assert (s * x).distance(x * s) < 1e-14
    assert (s * s).distance(CQuaternion(Quaternion(-1.0))) < 1e-14

    print("✅ H⊗C product tests passed")


def test_embeddings_and_conjugations():
    """Test slice embeddings and the two conjugations on H⊗C"""
    assert Quaternion.from_complex(2 + 3j).distance(Quaternion(2.0, 3.0)) < 1e-15
    assert Quaternion.from_complex(2 + 3j, UNIT_J).distance(Quaternion(2.0, 0.0, 3.0)) < 1e-15

    unit = ImaginaryUnit.from_quaternion(Quaternion(0.0, 0.0, 3.0, 4.0))
    assert np.allclose(unit.as_vector(), [0.0, 0.6, 0.8])

    p = CQuaternion(Quaternion(1.0, 2.0, 3.0, 4.0), Quaternion(-1.0, 0.5, 0.0, 2.0))
    assert p.stem_conj().distance(CQuaternion(p.x.conj(), p.y.conj())) < 1e-15
    assert p.bar().distance(CQuaternion(p.x, Quaternion(0.0) - p.y)) < 1e-15
    assert p.bar().bar().distance(p) < 1e-15
    assert p.stem_conj().bar().distance(p.bar().stem_conj()) < 1e-15

    print("✅ Embedding and conjugation tests passed")


if __name__ == "__main__":
    print("🧪 Running Quaternion Core Tests...\n")

    test_hamilton_rules()
    test_inverse_and_division()
    test_decompose_example()
    test_decompose_rejects_reals()
    test_imaginary_unit_validation()
    test_chart_fixed_points()
    test_complexified_product()
    test_embeddings_and_conjugations()

    print("\n🎉 All quaternion core tests completed!")
