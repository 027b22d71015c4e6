"""
Error Handler Module
Maps domain errors onto command exit codes
"""

import functools
from typing import Callable

from exceptions import HoloSyntaxError, SliceTwistorError
from logger import log_structured, logger

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Raised when command-line arguments are invalid"""
    pass


def exit_code_for(exc: BaseException) -> int:
    """Usage problems exit 2, numerical failures exit 1"""
    if isinstance(exc, (UsageError, HoloSyntaxError, FileNotFoundError, ValueError, KeyError)):
        return EXIT_USAGE
    if isinstance(exc, SliceTwistorError):
        return EXIT_NUMERICAL
    return EXIT_NUMERICAL


def handle_exceptions(func: Callable[..., int]) -> Callable[..., int]:
    """Decorator turning raised errors into logged exit codes"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except Exception as e:
            code = exit_code_for(e)
            log_structured(
                logger, "error", f"Error in {func.__name__}",
                error=type(e).__name__, detail=str(e), exit_code=code,
            )
            return code

    return wrapper
