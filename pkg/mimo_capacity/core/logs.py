"""Logging helpers.

Library modules only create loggers; handlers are installed by the CLI.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterator
from contextlib import contextmanager

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

logger = logging.getLogger(__name__)


def configure_logging(level: int | str = logging.WARNING) -> None:
    """Install a stderr handler on the package logger.

    Args:
        level: Logging level name or number
    """
    root = logging.getLogger("mimo_capacity")
    root.setLevel(level)
    if not any(getattr(h, "_mimo_capacity", False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._mimo_capacity = True  # type: ignore[attr-defined]
        root.addHandler(handler)


@contextmanager
def timed(operation: str, log: logging.Logger = logger) -> Iterator[None]:
    """Log the start and duration of ``operation`` at DEBUG.

    Example:
        >>> with timed("capacity sweep"):
        ...     pass
    """
    start = time.perf_counter()
    log.debug("Starting: %s", operation)
    try:
        yield
    finally:
        log.debug("Completed: %s in %.3fs", operation, time.perf_counter() - start)


__all__ = ["LOG_FORMAT", "configure_logging", "timed"]
