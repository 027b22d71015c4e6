"""
Performance Profiler
Wall-clock timing of verification checks
"""

import time
from typing import Dict

from logger import log_structured, logger


class PerformanceTracker:
    """Track wall time per named check"""

    def __init__(self):
        self.metrics: Dict[str, list] = {}
        self.start_times: Dict[str, float] = {}

    def start_timer(self, name: str):
        """Start a timer"""
        self.start_times[name] = time.perf_counter()

    def end_timer(self, name: str) -> float:
        """End a timer and return elapsed seconds"""
        if name not in self.start_times:
            return 0.0

        elapsed = time.perf_counter() - self.start_times.pop(name)
        self.metrics.setdefault(name, []).append(elapsed)
        return elapsed


class PerformanceContext:
    """Context manager timing one check"""

    def __init__(self, name: str, tracker: PerformanceTracker, budget: float = 0.0):
        self.name = name
        self.tracker = tracker
        self.budget = budget
        self.elapsed = 0.0

    def __enter__(self):
        self.tracker.start_timer(self.name)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed = self.tracker.end_timer(self.name)
        if self.budget and self.elapsed > self.budget:
            log_structured(
                logger, "warning", "check over budget",
                check=self.name, elapsed=f"{self.elapsed:.2f}s", budget=f"{self.budget:.0f}s",
            )


# Global performance tracker
_performance_tracker = PerformanceTracker()


def performance_context(name: str, budget: float = 0.0) -> PerformanceContext:
    """Create a timing context on the global tracker"""
    return PerformanceContext(name, _performance_tracker, budget)
