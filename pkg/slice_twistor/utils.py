"""
Utility Functions
Literal parsing and formatting, projective distance and check records
"""

import json
import re
from typing import Dict, List, Sequence

import numpy as np

from qcore import Quaternion
from schema import CheckResult

_TERM = re.compile(r"\s*([+-]?)\s*(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)?\s*\*?\s*([ijk]?)\s*")


def _terms(text: str, units: str) -> Dict[str, float]:
    """Split '1-2i+0.5j' into {'': 1, 'i': -2, 'j': 0.5}"""
    src = text.strip()
    if not src:
        raise ValueError("empty literal")
    out: Dict[str, float] = {}
    pos = 0
    while pos < len(src):
        match = _TERM.match(src, pos)
        if not match or match.end() == pos:
            raise ValueError(f"malformed literal {text!r} at offset {pos}")
        sign, number, unit = match.groups()
        if number is None and not unit:
            raise ValueError(f"malformed literal {text!r} at offset {pos}")
        if pos > 0 and not sign:
            raise ValueError(f"missing sign in {text!r} at offset {pos}")
        if unit and unit not in units:
            raise ValueError(f"unit {unit!r} not allowed in {text!r}")
        value = float(number) if number is not None else 1.0
        out[unit] = out.get(unit, 0.0) + (-value if sign == "-" else value)
        pos = match.end()
    return out


def parse_complex(text: str) -> complex:
    """
    Parse a complex literal such as '1+i', '2i', '-0.5-3i'

    Args:
        text: literal with 'i' as the imaginary unit

    Returns:
        complex value
    """
    terms = _terms(text, "i")
    return complex(terms.get("", 0.0), terms.get("i", 0.0))


def parse_quaternion(text: str) -> Quaternion:
    """Parse '1+2j-k', a JSON list [q0, q1, q2, q3] or the bare form 'q0,q1,q2,q3'"""
    src = text.strip()
    if "," in src and not src.startswith("["):
        src = f"[{src}]"
    if src.startswith("["):
        values = json.loads(src)
        if len(values) != 4:
            raise ValueError("quaternion lists need four entries")
        return Quaternion(*(float(x) for x in values))
    terms = _terms(src, "ijk")
    return Quaternion(terms.get("", 0.0), terms.get("i", 0.0), terms.get("j", 0.0), terms.get("k", 0.0))


def _num(x: float) -> str:
    return repr(float(x))


def format_complex(z: complex) -> str:
    """Inverse of parse_complex, with full float precision"""
    z = complex(z)
    sign = "-" if z.imag < 0 or (z.imag == 0 and np.signbit(z.imag)) else "+"
    return f"{_num(z.real)}{sign}{_num(abs(z.imag))}i"


def format_quaternion(q: Quaternion) -> str:
    parts = [_num(q.q0)]
    for value, unit in ((q.q1, "i"), (q.q2, "j"), (q.q3, "k")):
        sign = "-" if value < 0 else "+"
        parts.append(f"{sign}{_num(abs(value))}{unit}")
    return "".join(parts)


def complex_pairs(values: Sequence[complex]) -> List[List[float]]:
    """JSON form of complex coordinates: [[re, im], ...]"""
    return [[float(complex(z).real), float(complex(z).imag)] for z in values]


def chordal_distance(p, q) -> float:
    """
    d(p, q) = sqrt(1 - |<p, q>|^2 / (|p|^2 |q|^2)) for homogeneous coordinate vectors

    Args:
        p: complex vector
        q: complex vector of the same length

    Returns:
        distance in [0, 1]
    """
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    if not np.any(p) or not np.any(q):
        raise ValueError("homogeneous coordinates cannot all vanish")
    return float(chordal_distance_many(p[None, :], q[None, :])[0])


def chordal_distance_many(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """
    Row-wise chordal distance of two (n, m) stacks

    Uses |p|^2 |q|^2 - |<p, q>|^2 = sum_{h<k} |p_h q_k - p_k q_h|^2, which keeps
    full relative precision near d = 0.
    """
    P = np.asarray(P, dtype=complex)
    Q = np.asarray(Q, dtype=complex)
    m = P.shape[-1]
    wedge = np.zeros(P.shape[:-1])
    for h in range(m):
        for k in range(h + 1, m):
            wedge = wedge + np.abs(P[..., h] * Q[..., k] - P[..., k] * Q[..., h]) ** 2
    norms = np.linalg.norm(P, axis=-1) * np.linalg.norm(Q, axis=-1)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.minimum(np.sqrt(wedge) / norms, 1.0)


def create_check(name: str, residual: float, tolerance: float, above: bool = False) -> CheckResult:
    """
    Build a check whose verdict depends only on residual vs tolerance

    Args:
        name: check name
        residual: measured residual (nan counts as failure)
        tolerance: threshold
        above: pass when the residual exceeds the tolerance (falsification checks)
    """
    residual = float(residual)
    if np.isnan(residual):
        verdict = False
    else:
        verdict = residual > tolerance if above else residual < tolerance
    return CheckResult(name=name, residual=residual, tolerance=float(tolerance), verdict=verdict)

