"""
Input Validation Module
Validates command-line arguments before any numerics run
"""

from typing import Sequence, Tuple

from utils import parse_complex, parse_quaternion


def validate_seed(seed) -> Tuple[bool, str]:
    """
    Validate a random seed

    Args:
        seed: value of --seed

    Returns:
        Tuple of (is_valid, error_message)
    """
    if seed is None:
        return False, "A seed is required for sampling commands"

    if seed < 0:
        return False, "Seed must be non-negative"

    return True, ""


def validate_samples(samples: int, minimum: int = 1, maximum: int = 10**6) -> Tuple[bool, str]:
    """Validate a sample count"""
    if samples < minimum:
        return False, f"Sample count must be at least {minimum}"

    if samples > maximum:
        return False, f"Sample count too large (max {maximum})"

    return True, ""


def validate_box(box: Sequence[float]) -> Tuple[bool, str]:
    """
    Validate a box x0 x1 y0 y1

    Args:
        box: four floats

    Returns:
        Tuple of (is_valid, error_message)
    """
    if len(box) != 4:
        return False, "Box needs exactly four numbers: x0 x1 y0 y1"

    x0, x1, y0, y1 = box
    if not x0 < x1 or not y0 < y1:
        return False, "Box bounds must satisfy x0 < x1 and y0 < y1"

    return True, ""


def validate_scan_box(box: Sequence[float]) -> Tuple[bool, str]:
    """Validate the 4D box of a discriminant scan (eight numbers)"""
    if len(box) != 8:
        return False, "Scan box needs eight numbers: lo hi for each quaternion component"

    for lo, hi in zip(box[0::2], box[1::2]):
        if not lo <= hi:
            return False, "Scan box bounds must satisfy lo <= hi"

    return True, ""


def validate_grid(grid: int, maximum: int = 4000) -> Tuple[bool, str]:
    """Validate a per-axis grid resolution"""
    if grid < 2:
        return False, "Grid needs at least 2 points per axis"

    if grid > maximum:
        return False, f"Grid too fine (max {maximum} points per axis)"

    return True, ""


def validate_tolerance(tol) -> Tuple[bool, str]:
    """Validate an override tolerance"""
    if tol is None:
        return True, ""

    if not tol > 0:
        return False, "Tolerance must be positive"

    return True, ""



def validate_quaternion_literal(text: str) -> Tuple[bool, str]:
    """
    Validate a quaternion literal such as '1+2j-k' or '1,2,-1,0'

    Args:
        text: value of --x or --q

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not text or not text.strip():
        return False, "Quaternion literal cannot be empty"

    try:
        parse_quaternion(text)
    except ValueError as e:
        return False, f"Invalid quaternion literal: {e}"

    return True, ""


def validate_complex_literal(text: str) -> Tuple[bool, str]:
    """Validate a complex literal such as '1+i' or '-0.5i'"""
    if not text or not text.strip():
        return False, "Complex literal cannot be empty"

    try:
        parse_complex(text)
    except ValueError as e:
        return False, f"Invalid complex literal: {e}"

    return True, ""
