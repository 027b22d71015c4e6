"""
Unit Tests for Slice Functions
"""

import sys
sys.path.append('..')

import json

import numpy as np
import pytest

from exceptions import DegenerateUnits, DomainMismatch, NotAStem, RealInput, ZeroNormal
from holo import Region, V
from qcore import QI, QJ, Quaternion, UNIT_I, UNIT_J, UNIT_K, qmul
from sampling import make_rng, random_quaternions
from slice_function import (
    StemPair,
    affine,
    check_regular,
    check_sliceness,
    classify_constant_affine,
    conjugate,
    constant,
    ellipsoid_map,
    eval_many,
    eval_repr_general,
    extends_to_R,
    from_json,
    from_file,
    from_maps,
    from_stem,
    from_strings,
    identity,
    is_real,
    load_function,
    normal,
    real_polynomial,
    reciprocal,
    semislice_constant,
    semislice_identity,
    slice_derivative,
    slice_product,
    spherical_derivative,
    spherical_derivative_many,
    stem_product_eval,
    to_stem,
    x_minus_j,
)


def _close(p: Quaternion, q: Quaternion, tol: float = 1e-10) -> bool:
    return p.distance(q) <= tol * (1 + q.norm())


def test_eval_examples():
    """Test the representation formula on documented points"""
    assert _close(identity().eval(Quaternion(1.0, 0.0, 2.0)), Quaternion(1.0, 0.0, 2.0))

    f = semislice_identity(-1)
    assert _close(f.eval(QI), QI)
    assert _close(f.eval(-QI), Quaternion(0.0))
    # x(1 - Ii)/2 vanishes on the whole C_-i+ half-slice
    assert _close(f.eval(Quaternion(3.0, -0.5)), Quaternion(0.0))

    with pytest.raises(RealInput):
        identity().eval(Quaternion(2.0))

    print("✅ Evaluation tests passed")


def test_eval_respects_orientation():
    """Test which splitting entries feed each half-slice"""
    f = from_strings("v^2 - 2i", "v^2 + 1", "3*v", "v - i")
    # Values on C_i+ are g + h j
    v = 0.3 + 0.7j
    value = f.eval(Quaternion(v.real, v.imag))
    expected = Quaternion.from_split(v**2 - 2j, 3 * v)
    assert _close(value, expected)
    # Values on C_-i+ read conj(ghat) + conj(hhat) j
    value = f.eval(Quaternion(v.real, -v.imag))
    expected = Quaternion.from_split(np.conj(v**2 + 1), np.conj(v - 1j))
    assert _close(value, expected)

    print("✅ Orientation tests passed")


def test_representation_formula_general():
    """Test eval_repr_general against direct evaluation"""
    x = Quaternion(1.0, 1.0)
    assert _close(eval_repr_general(identity(), x, UNIT_J, UNIT_K), x)

    f = semislice_identity(-1)
    x = Quaternion(1.0, 0.0, 1.0)
    assert _close(eval_repr_general(f, x, UNIT_J, UNIT_K), f.eval(x))
    assert _close(eval_repr_general(f, x, UNIT_I, UNIT_I.neg()), f.eval(x))

    with pytest.raises(DegenerateUnits):
        eval_repr_general(f, x, UNIT_J, UNIT_J)

    print("✅ General representation formula tests passed")


def test_stem_constructors():
    """Test from_stem on channel data"""
    identity_stem = StemPair(channels=(V, 0 * V, 0 * V, 0 * V))
    f = from_stem(identity_stem)
    x = Quaternion(0.5, 0.2, -1.0, 0.3)
    assert _close(f.eval(x), x)

    one_minus_Ii = from_stem(StemPair(channels=(1 + 0 * V, -1j + 0 * V, 0 * V, 0 * V)))
    assert one_minus_Ii.g(0.5j) == pytest.approx(2.0)
    assert one_minus_Ii.ghat(0.5j) == pytest.approx(0.0)
    target = semislice_constant(-1)
    assert _close(one_minus_Ii.eval(x), target.eval(x))

    print("✅ Stem constructor tests passed")


def test_stem_round_trip():
    """Test from_stem(to_stem(f)) = f on samples"""
    rng = make_rng(12)
    f = from_strings("v^2 - 2i", "v^2 + 1", "3*v", "v - i")
    g = from_stem(to_stem(f))
    X = random_quaternions(rng, 200, min_imag=0.1)
    assert np.max(np.abs(eval_many(f, X) - eval_many(g, X))) < 1e-10

    print("✅ Stem round-trip tests passed")


def test_sampled_stems():
    """Test closure stems and the parity check"""
    def F1(z):
        return np.stack([z.real, 0 * z.real, 0 * z.real, 0 * z.real], axis=-1)

    def F2(z):
        return np.stack([z.imag, 0 * z.real, 0 * z.real, 0 * z.real], axis=-1)

    f = from_stem(StemPair(F1=F1, F2=F2), rng=make_rng(1))
    x = Quaternion(0.5, 0.2, -1.0, 0.3)
    assert _close(f.eval(x), x, tol=1e-9)

    def bad_F2(z):
        return np.stack([np.ones_like(z.real), 0 * z.real, 0 * z.real, 0 * z.real], axis=-1)

    with pytest.raises(NotAStem):
        from_stem(StemPair(F1=F1, F2=bad_F2), rng=make_rng(1))

    print("✅ Sampled stem tests passed")


def test_check_sliceness():
    """Test the sliceness verdict on slice and non-slice maps"""
    rng = make_rng(13)
    f = from_strings("v^2 - 2i", "v^2 + 1", "3*v", "v - i")
    verdict = check_sliceness(lambda X: eval_many(f, X), UNIT_J, UNIT_K, rng)
    assert verdict.is_slice and verdict.residual < 1e-10

    verdict = check_sliceness(ellipsoid_map(2.0), UNIT_J, UNIT_K, rng)
    assert not verdict.is_slice
    assert verdict.residual > 1.0

    verdict = check_sliceness(ellipsoid_map(0.0), UNIT_J, UNIT_K, rng)
    assert verdict.is_slice

    with pytest.raises(DegenerateUnits):
        check_sliceness(ellipsoid_map(0.0), UNIT_J, UNIT_J, rng)

    print("✅ Sliceness tests passed")


def test_slice_product():
    """Test the slice product against pointwise and stem-product oracles"""
    rng = make_rng(14)
    X = random_quaternions(rng, 100, min_imag=0.1)

    square = slice_product(identity(), identity())
    assert np.allclose(eval_many(square, X), qmul(X, X), atol=1e-10)

    # Real left factor gives the pointwise product
    f = real_polynomial([1.0, -2.0, 1.0])
    g = from_strings("v - i", "v + 3", "2", "1i")
    assert np.allclose(eval_many(slice_product(f, g), X), qmul(eval_many(f, X), eval_many(g, X)))

    # Non-commuting factors
    p = affine(Quaternion(1.0), -QI)
    q = affine(Quaternion(1.0), QJ)
    assert np.allclose(eval_many(slice_product(p, q), X), stem_product_eval(p, q, X), atol=1e-10)
    assert np.allclose(eval_many(slice_product(q, p), X), stem_product_eval(q, p, X), atol=1e-10)

    with pytest.raises(DomainMismatch):
        slice_product(identity(), from_maps(V, V, domain=Region.box(-1, 1, 0.1, 1)))

    print("✅ Slice product tests passed")


def test_conjugate_and_normal():
    """Test f^c and N(f)"""
    q0 = Quaternion(1.0, 2.0, -1.0, 0.5)
    x = Quaternion(0.3, 0.4, 0.1, -0.2)
    const = constant(q0)
    assert _close(conjugate(const).eval(x), q0.conj())
    assert _close(normal(const).eval(x), Quaternion(q0.norm2()))

    f = x_minus_j()
    assert _close(normal(f).eval(QI), Quaternion(0.0))
    assert _close(normal(f).eval(x), x * x + 1)

    rng = make_rng(15)
    X = random_quaternions(rng, 50, min_imag=0.1)
    s = semislice_identity(-1)
    assert np.allclose(eval_many(normal(s), X), stem_product_eval(conjugate(s), s, X), atol=1e-10)

    print("✅ Conjugate and normal tests passed")


def test_reciprocal():
    """Test f . f^(-.) = 1 off the zero set of N(f)"""
    rng = make_rng(16)
    f = x_minus_j()
    inv = reciprocal(f)
    X = random_quaternions(rng, 50, min_imag=0.1)
    product = eval_many(slice_product(f, inv), X)
    assert np.allclose(product, np.tile([1.0, 0.0, 0.0, 0.0], (50, 1)), atol=1e-9)

    with pytest.raises(ZeroNormal):
        inv.eval(QI)

    print("✅ Reciprocal tests passed")


def test_derivatives():
    """Test slice and spherical derivatives"""
    square = real_polynomial([0.0, 0.0, 1.0])
    x = Quaternion(0.7, 0.2, -0.4, 1.1)
    assert _close(slice_derivative(square).eval(x), x * 2)
    assert _close(spherical_derivative(square, x), Quaternion(1.4))

    const = constant(Quaternion(1.0, 2.0, 3.0, 4.0))
    assert _close(slice_derivative(const).eval(x), Quaternion(0.0))
    assert _close(spherical_derivative(const, x), Quaternion(0.0))

    print("✅ Derivative tests passed")


def test_spherical_derivative_on_spheres():
    """Test that ds f depends only on the sphere of x"""
    rng = make_rng(17)
    f = semislice_identity(-1)
    X = random_quaternions(rng, 100, min_imag=0.2)
    # Same alpha and beta, fresh units
    rotated = random_quaternions(rng, 100, min_imag=0.2)
    units = rotated[:, 1:] / np.linalg.norm(rotated[:, 1:], axis=1, keepdims=True)
    Y = np.column_stack([X[:, 0], units * np.linalg.norm(X[:, 1:], axis=1, keepdims=True)])
    assert np.allclose(spherical_derivative_many(f, X), spherical_derivative_many(f, Y), atol=1e-10)

    # df/dx of x(1 - Ii)/2 is the slice constant (1 - Ii)/2
    x = Quaternion(0.4, 0.3, -0.5, 0.2)
    unit = x.imag / x.imag_norm()
    assert _close(slice_derivative(f).eval(x), (1 - unit * QI) / 2)

    print("✅ Spherical derivative tests passed")


def test_classify_constant_affine():
    """Test the constant / slice-constant / slice-affine classification"""
    rng = make_rng(18)

    result = classify_constant_affine(semislice_identity(-1), rng)
    assert result.kind == "slice-affine"
    assert _close(result.coefficients["q1-"], Quaternion(1.0))
    assert _close(result.coefficients["q1+"], Quaternion(0.0))
    assert _close(result.coefficients["q0-"], Quaternion(0.0))
    assert not result.extends_to_R

    a = Quaternion(1.0, 2.0, 0.0, -1.0)
    result = classify_constant_affine(affine(a, QJ), rng)
    assert result.kind == "slice-affine"
    assert _close(result.coefficients["q1+"], a)
    assert _close(result.coefficients["q1-"], a)
    assert result.extends_to_R

    result = classify_constant_affine(semislice_constant(-1), rng)
    assert result.kind == "slice-constant"
    assert _close(result.coefficients["q-"], Quaternion(2.0))
    assert _close(result.coefficients["q+"], Quaternion(0.0))

    assert classify_constant_affine(constant(QJ), rng).kind == "constant"
    assert classify_constant_affine(real_polynomial([0, 0, 1]), rng).kind == "neither"

    print("✅ Classification tests passed")


def test_real_and_extension_flags():
    """Test is_real, extends_to_R and check_regular"""
    rng = make_rng(19)
    assert is_real(real_polynomial([1.0, 0.0, 3.0]), rng)
    assert not is_real(x_minus_j(), rng)
    assert extends_to_R(identity(), rng)
    assert not extends_to_R(semislice_identity(-1), rng)

    assert check_regular(to_stem(x_minus_j()), rng) < 1e-6

    def F1(z):
        return np.stack([z.real, 0 * z.real, 0 * z.real, 0 * z.real], axis=-1)

    def F2(z):
        return np.zeros(z.shape + (4,))

    assert check_regular(StemPair(F1=F1, F2=F2), rng) > 0.5

    print("✅ Real and regularity flag tests passed")


def test_json_and_catalog():
    """Test JSON serialisation and catalog loading"""
    f = from_strings("v", "v", "-1", "-1", name="x-j")
    data = f.to_json()
    assert data["g"] == "v" and data["h"] == "(-1)"
    rebuilt = from_json(json.dumps(data))
    x = Quaternion(0.1, 0.5, 0.2, 0.3)
    assert _close(rebuilt.eval(x), f.eval(x))

    catalog = load_function("identity")
    assert _close(catalog.eval(x), x)
    inline = load_function('{"g": "2", "ghat": "0"}')
    assert _close(inline.eval(QI), Quaternion(2.0))

    with pytest.raises(FileNotFoundError):
        load_function("no_such_function")

    print("✅ JSON and catalog tests passed")


def test_file_round_trip(tmp_path):
    """Test writing a function file and reading it back"""
    f = x_minus_j()
    path = tmp_path / "shifted.json"
    f.to_file(path)
    rebuilt = from_file(path)
    assert rebuilt.name == f.name
    x = Quaternion(0.3, -0.2, 0.7, 0.1)
    assert _close(rebuilt.eval(x), f.eval(x))

    unnamed = tmp_path / "unnamed.json"
    unnamed.write_text('{"g": "v", "ghat": "0"}')
    assert from_file(unnamed).name == "unnamed"

    print("✅ File round trip tests passed")


if __name__ == "__main__":
    print("🧪 Running Slice Function Tests...\n")

    test_eval_examples()
    test_eval_respects_orientation()
    test_representation_formula_general()
    test_stem_constructors()
    test_stem_round_trip()
    test_sampled_stems()
    test_check_sliceness()
    test_slice_product()
    test_conjugate_and_normal()
    test_reciprocal()
    test_derivatives()
    test_spherical_derivative_on_spheres()
    test_classify_constant_affine()
    test_real_and_extension_flags()
    test_json_and_catalog()

    print("\n🎉 All slice function tests completed!")
