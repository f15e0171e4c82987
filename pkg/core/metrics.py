"""
Solver metrics and monitoring for the time-dependent AB laboratory
path: core/metrics.py
"""

import time
from collections import defaultdict, deque
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Iterator, List, Optional

from core.logging_config import get_metrics_logger, get_performance_logger


@dataclass
class SolverMetrics:
    """Metrics for a single numeric operation"""
    operation: str
    label: str
    steps: int
    duration_ms: float
    ok: bool = True
    timestamp: datetime = field(default_factory=datetime.now)


class MetricsManager:
    """Collects per-operation solver records for one process run"""

    def __init__(self):
        self.metrics_logger = get_metrics_logger()
        self.perf_logger = get_performance_logger()

        self.records: deque = deque(maxlen=10000)
        self.error_counts: Dict[str, int] = defaultdict(int)
        self.durations: Dict[str, deque] = defaultdict(lambda: deque(maxlen=1000))

        self.start_time = time.time()
        self.total_operations = 0
        self.total_errors = 0

    def record(self, metrics: SolverMetrics):
        """Record a finished operation"""
        self.records.append(metrics)
        self.durations[metrics.operation].append(metrics.duration_ms)
        self.total_operations += 1

        self.metrics_logger.info(
            f"{metrics.operation.upper()} | {metrics.label} | "
            f"Steps: {metrics.steps} | "
            f"Duration: {metrics.duration_ms:.2f}ms | "
            f"Status: {'OK' if metrics.ok else 'FAILED'}"
        )

    @contextmanager
    def track(self, operation: str, label: str = "", steps: int = 0) -> Iterator[Dict[str, Any]]:
        """Time a block; the yielded dict may update `steps` before exit"""
        info: Dict[str, Any] = {"steps": steps}
        start = time.perf_counter()
        ok = True
        try:
            yield info
        except Exception:
            ok = False
            raise
        finally:
            duration = (time.perf_counter() - start) * 1000
            self.record(SolverMetrics(
                operation=operation,
                label=label,
                steps=int(info.get("steps", 0)),
                duration_ms=duration,
                ok=ok,
            ))
            self.record_performance(operation, duration, {"label": label} if label else None)

    def record_error(self, error_type: str, error_message: str, context: Optional[Dict[str, Any]] = None):
        """Record error occurrence"""
        self.error_counts[error_type] += 1
        self.total_errors += 1

        context_str = f" | Context: {context}" if context else ""
        self.metrics_logger.error(
            f"ERROR | Type: {error_type} | Message: {error_message}{context_str}"
        )

    def record_performance(self, operation: str, duration_ms: float, details: Optional[Dict[str, Any]] = None):
        """Record a timing that is not tied to a solver record"""
        details_str = f" | {details}" if details else ""
        self.perf_logger.info(
            f"PERFORMANCE | {operation} | Duration: {duration_ms:.2f}ms{details_str}"
        )

    def get_summary(self) -> Dict[str, Any]:
        """Current run summary"""
        return {
            "uptime_seconds": time.time() - self.start_time,
            "total_operations": self.total_operations,
            "total_errors": self.total_errors,
            "error_rate": (self.total_errors / self.total_operations) if self.total_operations else 0.0,
            "duration_percentiles": {
                op: self._percentiles(list(values)) for op, values in self.durations.items()
            },
            "error_breakdown": dict(self.error_counts),
            "memory_usage_mb": self._get_memory_usage(),
        }

    @staticmethod
    def _percentiles(data: List[float]) -> Dict[str, float]:
        if not data:
            return {"p50": 0.0, "p90": 0.0, "p99": 0.0}
        sorted_data = sorted(data)
        n = len(sorted_data)
        return {
            "p50": sorted_data[int(n * 0.5)],
            "p90": sorted_data[min(int(n * 0.9), n - 1)],
            "p99": sorted_data[min(int(n * 0.99), n - 1)],
        }

    def _get_memory_usage(self) -> float:
        """Get current memory usage in MB"""
        try:
            import psutil
            process = psutil.Process()
            return process.memory_info().rss / 1024 / 1024
        except ImportError:
            return 0.0

    def log_final_summary(self):
        """Log final summary statistics"""
        summary = self.get_summary()
        self.metrics_logger.info(
            f"FINAL_SUMMARY | "
            f"Uptime: {summary['uptime_seconds']:.1f}s | "
            f"Operations: {summary['total_operations']} | "
            f"Error Rate: {summary['error_rate']:.3f} | "
            f"Memory: {summary['memory_usage_mb']:.1f}MB"
        )
