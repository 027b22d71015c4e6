"""
Unit Tests for Holomorphic Maps
"""

import sys
sys.path.append('..')

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import BranchCut, HoloSyntaxError, OutOfDomain, Pole
from holo import (
    Region,
    SampledMap,
    V,
    central_difference,
    cut_distance,
    from_json,
    has_real_coefficients,
    parse,
    reflect,
    to_json,
    to_sympy,
)

SOURCES = [
    "v^2",
    "1/v",
    "sqrt(1 - v^2)",
    "(2i + v/2)",
    "exp(v) * (3 - 2i) - v^-2",
    "-(5/4 * v^2 + 4)",
    "(v - 1)^3 / (v + 2i)",
]


def test_eval_examples():
    """Test evaluation at documented points"""
    assert parse("v^2").eval(1 + 1j) == pytest.approx(2j)
    assert parse("sqrt(1 - v^2)").eval(0) == pytest.approx(1.0)
    assert parse("(-5/4)*v^2 - 4").eval(-4j) == pytest.approx(16.0)
    assert parse("(2i + v/2)").eval(2.0) == pytest.approx(1 + 2j)

    values = parse("v^2").eval(np.array([1.0, 1j]))
    assert np.allclose(values, [1.0, -1.0])

    print("✅ Evaluation tests passed")


def test_regions():
    """Test region membership and JSON form"""
    points = np.array([0.0, 1.0, 1j, -1j])
    assert Region.plane().contains(points).all()
    assert list(Region.upper().contains(points)) == [False, False, True, False]
    assert list(Region.punctured().contains(points)) == [False, True, True, True]
    assert list(Region.punctured(0.0, 1.0).contains(points)) == [True, True, False, True]
    assert list(Region.box(-0.5, 0.5, -2.0, 0.0).contains(points)) == [True, False, False, True]

    assert Region.punctured(1.0, 2.0).to_json() == {"kind": "punctured_plane", "params": [1.0, 2.0]}
    with pytest.raises(ValueError):
        Region("disc")

    print("✅ Region tests passed")


def test_eval_errors():
    """Test poles, branch cuts and domain descriptors"""
    with pytest.raises(Pole):
        parse("1/v").eval(0)
    with pytest.raises(Pole):
        parse("v^-2").eval(0)
    with pytest.raises(BranchCut):
        parse("sqrt(v)").eval(-4.0)

    # Non-strict evaluation returns nan at poles
    assert np.isnan(parse("1/v").eval(0, strict=False))

    upper = V.restrict(Region.upper())
    assert upper.eval(1j) == 1j
    with pytest.raises(OutOfDomain):
        upper.eval(-1j)

    print("✅ Evaluation error tests passed")


def test_branch_cut_signed_zero():
    """Test that -0 imaginary parts read as +0 on the cut"""
    m = parse("sqrt(v)")
    above = m.eval(complex(-4.0, 0.0), strict=False)
    below_zero = m.eval(complex(-4.0, -0.0), strict=False)
    assert above == pytest.approx(2j)
    assert below_zero == pytest.approx(2j)

    # Just below the cut the principal branch jumps
    assert m.eval(complex(-4.0, -1e-9)) == pytest.approx(-2j, abs=1e-6)

    assert cut_distance(m, np.array([-4.0 + 0.5j]))[0] == pytest.approx(0.5)
    assert cut_distance(parse("v^2"), np.array([1.0]))[0] == np.inf

    print("✅ Branch cut tests passed")


def test_derivative_examples():
    """Test exact derivatives"""
    assert parse("v^2").derivative().eval(3.0) == pytest.approx(6.0)
    assert parse("1/v").derivative().eval(2.0) == pytest.approx(-0.25)
    d = parse("sqrt(1 - v^2)").derivative().eval(1j)
    assert d == pytest.approx(-1j / np.sqrt(2))
    assert parse("exp(2*v)").derivative().eval(0) == pytest.approx(2.0)

    print("✅ Derivative tests passed")


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(SOURCES),
    st.floats(min_value=-2, max_value=2),
    st.floats(min_value=0.3, max_value=2),
)
def test_derivative_matches_central_difference(src, re, im):
    """Test exact derivatives against the central-difference oracle"""
    m = parse(src)
    v = complex(re, im)
    exact = m.derivative().eval(v, strict=False)
    numeric = central_difference(m, v, step=1e-5)
    if not np.isfinite(exact):
        return
    assert abs(exact - numeric) <= 1e-6 * (1 + abs(exact))


def test_print_parse_round_trip():
    """Test that printing then parsing is stable"""
    for src in SOURCES:
        printed = parse(src).to_source()
        assert parse(printed).to_source() == printed

    print("✅ Print/parse round-trip tests passed")


def test_json_form():
    """Test the nested-array JSON form"""
    m = parse("v * (1 + 2i)")
    data = to_json(m)
    assert data[0] == "mul"
    assert data[1] == ["v"]
    rebuilt = from_json(data)
    assert rebuilt.to_source() == m.to_source()

    with pytest.raises(ValueError):
        from_json(["nope", 1])
    with pytest.raises(ValueError):
        SampledMap(lambda v: v).to_json()

    print("✅ JSON form tests passed")


def test_syntax_errors_report_offset():
    """Test byte offsets of grammar errors"""
    cases = [("", 0), ("v + * 2", 4), ("sqrt(v", 6), ("foo(v)", 0), ("v^x", 2), ("1/0", 1)]
    for src, offset in cases:
        with pytest.raises(HoloSyntaxError) as info:
            parse(src)
        assert info.value.offset == offset, src

    print("✅ Syntax error tests passed")


def test_reflection():
    """Test v -> conj(m(conj v))"""
    real_map = parse("v^2 + 3*v - 1")
    assert has_real_coefficients(real_map)
    pts = np.array([0.5 + 1j, -1 + 0.2j, 2 + 3j])
    assert np.allclose(reflect(real_map)(pts), real_map(pts))

    m = parse("2i + v/2")
    assert not has_real_coefficients(m)
    assert np.allclose(reflect(m)(pts), np.conj(m(np.conj(pts))))
    assert reflect(reflect(m)) is m
    assert reflect(m).to_source() == parse("(-2i) + v/2").to_source()

    print("✅ Reflection tests passed")


def test_sympy_bridge():
    """Test exact conversion to sympy"""
    import sympy

    v = sympy.Symbol("v")
    expr = to_sympy(parse("v^2 - 1/2"))
    assert sympy.simplify(expr - (v**2 - sympy.Rational(1, 2))) == 0

    print("✅ Sympy bridge tests passed")


if __name__ == "__main__":
    print("🧪 Running Holomorphic Map Tests...\n")

    test_eval_examples()
    test_regions()
    test_eval_errors()
    test_branch_cut_signed_zero()
    test_derivative_examples()
    test_print_parse_round_trip()
    test_json_form()
    test_syntax_errors_report_offset()
    test_reflection()
    test_sympy_bridge()

    print("\n🎉 All holomorphic map tests completed!")
