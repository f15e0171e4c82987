"""
Logging configuration for the time-dependent AB laboratory
path: core/logging_config.py
"""

import logging
import logging.handlers
from pathlib import Path
from typing import Optional

from core.config import settings


def _rotating_handler(log_dir: Path, name: str, max_bytes: int, backups: int) -> logging.Handler:
    return logging.handlers.RotatingFileHandler(
        log_dir / name,
        maxBytes=max_bytes,
        backupCount=backups,
        encoding="utf-8",
    )


def setup_logging(level: Optional[str] = None, file_logging: Optional[bool] = None):
    """Setup root, metrics, performance and error loggers"""

    level = level or settings.LOG_LEVEL
    file_logging = settings.FILE_LOGGING if file_logging is None else file_logging

    handlers = [logging.StreamHandler()]  # stderr, stdout carries command output
    log_dir = Path(settings.LOG_DIR)
    if file_logging:
        log_dir.mkdir(parents=True, exist_ok=True)
        handlers.append(_rotating_handler(log_dir, "app.log", 10 * 1024 * 1024, 5))

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=settings.LOG_FORMAT,
        handlers=handlers,
        force=True,
    )

    record_formatter = logging.Formatter(
        "%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )

    # Solver metrics logger
    metrics_logger = logging.getLogger("metrics")
    metrics_logger.setLevel(logging.INFO)
    metrics_logger.handlers.clear()
    metrics_logger.propagate = False
    if file_logging:
        handler = _rotating_handler(log_dir, settings.METRICS_LOG_FILE, 50 * 1024 * 1024, 10)
        handler.setFormatter(record_formatter)
        metrics_logger.addHandler(handler)
    else:
        metrics_logger.addHandler(logging.NullHandler())

    # Performance logger
    perf_logger = logging.getLogger("performance")
    perf_logger.setLevel(logging.INFO)
    perf_logger.handlers.clear()
    perf_logger.propagate = False
    if file_logging:
        handler = _rotating_handler(log_dir, settings.PERFORMANCE_LOG_FILE, 20 * 1024 * 1024, 5)
        handler.setFormatter(record_formatter)
        perf_logger.addHandler(handler)
    else:
        perf_logger.addHandler(logging.NullHandler())

    # Error logger
    error_logger = logging.getLogger("errors")
    error_logger.setLevel(logging.ERROR)
    error_logger.handlers.clear()
    error_logger.propagate = False
    if file_logging:
        handler = _rotating_handler(log_dir, settings.ERROR_LOG_FILE, 20 * 1024 * 1024, 5)
        handler.setFormatter(logging.Formatter(
            "%(asctime)s [%(levelname)s] %(name)s:%(lineno)d - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        ))
        error_logger.addHandler(handler)
    else:
        error_logger.addHandler(logging.NullHandler())


def get_metrics_logger():
    """Get the metrics logger instance"""
    return logging.getLogger("metrics")


def get_performance_logger():
    """Get the performance logger instance"""
    return logging.getLogger("performance")


def get_error_logger():
    """Get the error logger instance"""
    return logging.getLogger("errors")
