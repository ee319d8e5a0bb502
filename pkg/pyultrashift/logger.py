from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
import logging
import sys

__all__ = ['get_logger', 'logging_at']

_logger: logging.Logger | None = None

# stdout carries command output, so diagnostics go to stderr
default_handler = logging.StreamHandler(sys.stderr)
default_handler.setFormatter(logging.Formatter('[%(levelname)s] %(message)s'))

def get_logger() -> logging.Logger:
    """Gets the logger shared by every module of the package. This is a singleton instance."""
    global _logger

    if _logger is None:
        _logger = logging.getLogger('pyultrashift')
        _logger.propagate = False
        _logger.addHandler(default_handler)

    return _logger

@contextmanager
def logging_at(level: int | None) -> Iterator[logging.Logger]:
    """
    Runs the enclosed block with the package logger at `level` and restores
    the previous level afterwards.

    `None` keeps the current level, which is what nested report operations
    running on worker threads pass so that they never touch the shared level.
    """
    logger = get_logger()
    if level is None:
        yield logger
        return

    previous = logger.level
    logger.setLevel(level)
    try:
        yield logger
    finally:
        logger.setLevel(previous)
