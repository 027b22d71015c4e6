"""
Configuration Module
Handles environment variables and numerical settings
"""

import os
from pathlib import Path
from typing import List, Tuple

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _float_env(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    return float(raw)


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    return int(raw)


class Config:
    """Library and CLI configuration"""

    # Parallelism
    THREADS = max(1, _int_env("SLICE_TWISTOR_THREADS", os.cpu_count() or 1))

    # Logging
    LOG_LEVEL = os.getenv("SLICE_TWISTOR_LOG_LEVEL", "WARNING")

    # Tolerances
    STRUCTURAL_TOL = _float_env("STRUCTURAL_TOL", 1e-10)
    FD_TOL = _float_env("FD_TOL", 1e-6)
    FD_STEP = _float_env("FD_STEP", 1e-5)
    CHORDAL_TOL = _float_env("CHORDAL_TOL", 1e-9)
    TWISTOR_LINE_TOL = _float_env("TWISTOR_LINE_TOL", 1e-8)
    ROOT_CLUSTER_RADIUS = _float_env("ROOT_CLUSTER_RADIUS", 1e-6)
    ZERO_COEF_TOL = _float_env("ZERO_COEF_TOL", 1e-12)
    MEMBERSHIP_TOL = _float_env("MEMBERSHIP_TOL", 1e-8)
    REAL_AXIS_MARGIN = _float_env("REAL_AXIS_MARGIN", 1e-12)
    PUSHFORWARD_TOL = _float_env("PUSHFORWARD_TOL", 1e-8)

    # Guards
    MAX_SCAN_CELLS = _int_env("MAX_SCAN_CELLS", 64**4)

    # Paths
    DATA_DIR = Path(os.getenv("SLICE_TWISTOR_DATA_DIR", Path(__file__).parent / "data"))
    SURFACES_DIR = DATA_DIR / "surfaces"
    FUNCTIONS_DIR = DATA_DIR / "functions"

    @classmethod
    def tolerances(cls) -> dict:
        """Tolerance table echoed into run reports"""
        return {
            "structural": cls.STRUCTURAL_TOL,
            "fd": cls.FD_TOL,
            "fd_step": cls.FD_STEP,
            "chordal": cls.CHORDAL_TOL,
            "twistor_line": cls.TWISTOR_LINE_TOL,
            "root_cluster_radius": cls.ROOT_CLUSTER_RADIUS,
            "zero_coef": cls.ZERO_COEF_TOL,
            "membership": cls.MEMBERSHIP_TOL,
            "pushforward": cls.PUSHFORWARD_TOL,
        }

    @classmethod
    def validate(cls) -> Tuple[bool, List[str]]:
        """Validate configuration values"""
        problems = []
        for name, value in cls.tolerances().items():
            if not value > 0:
                problems.append(f"tolerance {name} must be positive, got {value}")
        if cls.MAX_SCAN_CELLS < 1:
            problems.append("MAX_SCAN_CELLS must be at least 1")
        if not cls.DATA_DIR.exists():
            problems.append(f"data directory not found: {cls.DATA_DIR}")
        return len(problems) == 0, problems


# Create config instance
config = Config()
