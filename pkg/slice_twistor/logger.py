"""
Logging Configuration Module
Provides centralized logging for the library and CLI
"""

import logging
import sys
from typing import Union

from config import config


def setup_logger(
    name: str = "slice_twistor", level: Union[int, str, None] = None
) -> logging.Logger:
    """
    Setup and configure the package logger

    Args:
        name: Logger name
        level: Logging level; defaults to config.LOG_LEVEL

    Returns:
        Configured logger instance
    """
    if level is None:
        level = config.LOG_LEVEL.upper()

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Avoid duplicate handlers
    if logger.handlers:
        return logger

    # stdout carries JSON reports
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(funcName)s() - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    console_handler.setFormatter(formatter)

    logger.addHandler(console_handler)

    return logger


def set_level(level: Union[int, str]) -> None:
    """Change the level of the package logger and its handlers"""
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)


def log_structured(logger: logging.Logger, level: str, message: str, **kwargs):
    """
    Log with structured data

    Args:
        logger: Logger instance
        level: Log level (info, warning, error, etc.)
        message: Log message
        **kwargs: Additional structured data
    """
    extra_data = " | ".join([f"{k}={v}" for k, v in kwargs.items()])
    full_message = f"{message} | {extra_data}" if extra_data else message
    getattr(logger, level)(full_message)


# Create default logger
logger = setup_logger()
