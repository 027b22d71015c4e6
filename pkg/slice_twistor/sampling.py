"""
Sampling Helpers
Seeded random points for property checks; the generator is always passed in
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np


def make_rng(seed: Optional[int]) -> np.random.Generator:
    """Derive a generator from an integer seed through a SeedSequence"""
    return np.random.default_rng(np.random.SeedSequence(seed))


def spawn(rng: np.random.Generator, n: int) -> List[np.random.Generator]:
    """Independent child generators for data-parallel sampling"""
    return rng.spawn(n)


def random_units(
    rng: np.random.Generator, n: int, avoid: Optional[Sequence[float]] = None, margin: float = 1e-3
) -> np.ndarray:
    """
    Uniform imaginary units as an (n, 3) array

    Args:
        rng: generator
        n: number of units
        avoid: a unit that samples must stay away from
        margin: minimum distance from ``avoid``
    """
    out = np.empty((0, 3))
    while len(out) < n:
        vec = rng.normal(size=(2 * n + 4, 3))
        vec /= np.linalg.norm(vec, axis=1, keepdims=True)
        if avoid is not None:
            keep = np.linalg.norm(vec - np.asarray(avoid, dtype=float), axis=1) > margin
            vec = vec[keep]
        out = np.concatenate([out, vec])
    return out[:n]


def random_quaternions(
    rng: np.random.Generator,
    n: int,
    scale: float = 2.0,
    min_imag: float = 1e-3,
    avoid_unit: Optional[Sequence[float]] = None,
    unit_margin: float = 1e-3,
) -> np.ndarray:
    """Quaternions with |Im q| >= min_imag, as an (n, 4) array"""
    alpha = rng.uniform(-scale, scale, size=n)
    beta = rng.uniform(min_imag, scale, size=n)
    units = random_units(rng, n, avoid=avoid_unit, margin=unit_margin)
    return np.column_stack([alpha, units * beta[:, None]])


def random_upper(
    rng: np.random.Generator,
    n: int,
    box: Tuple[float, float, float, float] = (-2.0, 2.0, 0.05, 2.0),
) -> np.ndarray:
    """Complex samples in a box [x0, x1] x [y0, y1] of the upper half-plane"""
    x0, x1, y0, y1 = box
    return rng.uniform(x0, x1, size=n) + 1j * rng.uniform(y0, y1, size=n)


def random_complex(rng: np.random.Generator, n: int, scale: float = 2.0) -> np.ndarray:
    return rng.uniform(-scale, scale, size=n) + 1j * rng.uniform(-scale, scale, size=n)
