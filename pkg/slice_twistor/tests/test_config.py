"""
Configuration and Error Handling Tests
"""

import sys
sys.path.append('..')

import logging

from config import Config, config
from env_config import get_environment_status, validate_environment
from error_handler import EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, UsageError, exit_code_for, handle_exceptions
from exceptions import HoloSyntaxError, Pole, RealInput
from logger import setup_logger
from performance import performance_context


def test_config_defaults():
    """Test default tolerances and the data catalog"""
    ok, problems = config.validate()
    assert ok, problems
    assert config.THREADS >= 1
    assert config.SURFACES_DIR.is_dir()
    assert config.FUNCTIONS_DIR.is_dir()
    assert set(config.tolerances()) >= {"structural", "membership", "twistor_line", "pushforward"}

    print("✅ Config default tests passed")


def test_validate_environment(monkeypatch):
    """Test numeric environment overrides"""
    monkeypatch.setenv("STRUCTURAL_TOL", "1e-9")
    monkeypatch.setenv("SLICE_TWISTOR_LOG_LEVEL", "debug")
    assert validate_environment() == (True, [])

    monkeypatch.setenv("MAX_SCAN_CELLS", "many")
    monkeypatch.setenv("FD_TOL", "-1")
    ok, malformed = validate_environment()
    assert not ok
    assert set(malformed) == {"MAX_SCAN_CELLS", "FD_TOL"}

    status = get_environment_status()
    assert status["all_valid"] == False
    assert status["optional_vars"]["STRUCTURAL_TOL"] == {
        "description": "Tolerance for structural identities (default: 1e-10)",
        "is_set": True,
        "value": "1e-9",
    }
    assert status["optional_vars"]["CHORDAL_TOL"]["is_set"] == False

    print("✅ Environment validation tests passed")


def test_logger_level_from_config(monkeypatch):
    """Test that the logger takes its default level from the config"""
    monkeypatch.setattr(Config, "LOG_LEVEL", "info")
    assert setup_logger("slice_twistor.config_level").level == logging.INFO
    assert setup_logger("slice_twistor.explicit_level", "ERROR").level == logging.ERROR

    print("✅ Logger level tests passed")


def test_exit_codes():
    """Test the error to exit code mapping"""
    assert exit_code_for(UsageError("bad")) == EXIT_USAGE
    assert exit_code_for(HoloSyntaxError("unexpected token", 3)) == EXIT_USAGE
    assert exit_code_for(FileNotFoundError("x.json")) == EXIT_USAGE
    assert exit_code_for(RealInput("real")) == EXIT_NUMERICAL
    assert exit_code_for(Pole("pole")) == EXIT_NUMERICAL

    @handle_exceptions
    def fails():
        raise RealInput("real")

    @handle_exceptions
    def succeeds():
        return EXIT_OK

    assert fails() == EXIT_NUMERICAL
    assert succeeds() == EXIT_OK

    print("✅ Exit code tests passed")


def test_performance_context():
    """Test wall-clock timing of a named block"""
    with performance_context("block", budget=60.0) as timer:
        sum(range(1000))
    assert timer.elapsed >= 0.0
    assert timer.tracker.metrics["block"][-1] == timer.elapsed

    print("✅ Performance context tests passed")


if __name__ == "__main__":
    print("🧪 Running Configuration Tests...\n")

    test_config_defaults()
    test_exit_codes()
    test_performance_context()

    print("\n🎉 All configuration tests completed!")
