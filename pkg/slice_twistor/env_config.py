"""
Environment Configuration Validator
Checks that numeric environment overrides parse before a run starts
"""

import os
from typing import Any, Dict, List, Tuple

from logger import logger

OPTIONAL_ENV_VARS = {
    "SLICE_TWISTOR_THREADS": "Worker thread cap for scans and searches (default: CPU count)",
    "SLICE_TWISTOR_LOG_LEVEL": "Logging level (default: WARNING)",
    "SLICE_TWISTOR_DATA_DIR": "Catalog directory (default: ./data)",
    "STRUCTURAL_TOL": "Tolerance for structural identities (default: 1e-10)",
    "FD_TOL": "Tolerance for finite-difference checks (default: 1e-6)",
    "FD_STEP": "Central difference step (default: 1e-5)",
    "CHORDAL_TOL": "Projective equality threshold (default: 1e-9)",
    "TWISTOR_LINE_TOL": "sigma fixed-point acceptance (default: 1e-8)",
    "ROOT_CLUSTER_RADIUS": "Root multiplicity clustering radius (default: 1e-6)",
    "ZERO_COEF_TOL": "Identically-zero binary form threshold (default: 1e-12)",
    "MEMBERSHIP_TOL": "Surface membership threshold (default: 1e-8)",
    "REAL_AXIS_MARGIN": "Distance from R below which evaluation is rejected (default: 1e-12)",
    "PUSHFORWARD_TOL": "Push-forward structure agreement (default: 1e-8)",
    "MAX_SCAN_CELLS": "Discriminant scan guard (default: 64^4)",
}

_INT_VARS = {"SLICE_TWISTOR_THREADS", "MAX_SCAN_CELLS"}
_TEXT_VARS = {"SLICE_TWISTOR_LOG_LEVEL", "SLICE_TWISTOR_DATA_DIR"}


def validate_environment() -> Tuple[bool, List[str]]:
    """
    Validate that numeric environment overrides are well formed

    Returns:
        Tuple of (is_valid, malformed_vars)
    """
    malformed = []

    for var_name in OPTIONAL_ENV_VARS:
        value = os.getenv(var_name)
        if value is None or var_name in _TEXT_VARS:
            continue
        try:
            parsed = int(value) if var_name in _INT_VARS else float(value)
        except ValueError:
            malformed.append(var_name)
            logger.warning(f"Malformed environment variable: {var_name}={value!r}")
            continue
        if parsed <= 0:
            malformed.append(var_name)
            logger.warning(f"Environment variable must be positive: {var_name}={value!r}")

    return len(malformed) == 0, malformed


def get_environment_status() -> Dict[str, Any]:
    """Get environment configuration status"""
    is_valid, malformed = validate_environment()
    status: Dict[str, Any] = {"optional_vars": {}, "all_valid": is_valid, "malformed": malformed}

    for var_name, description in OPTIONAL_ENV_VARS.items():
        value = os.getenv(var_name)
        status["optional_vars"][var_name] = {
            "description": description,
            "is_set": value is not None,
            "value": value,
        }

    return status
