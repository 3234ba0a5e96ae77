"""
Logging configuration module
"""

import logging
import os
import sys
from pathlib import Path
from typing import Optional
from datetime import datetime

_configured_loggers = set()
_level_override: Optional[str] = None


class LocalTimeFormatter(logging.Formatter):
    """Custom formatter that uses local timezone."""

    def formatTime(self, record, datefmt=None):
        """Format time using local timezone."""
        ct = datetime.fromtimestamp(record.created)
        if datefmt:
            return ct.strftime(datefmt)
        return ct.strftime(self.default_time_format)


def setup_logger(
    name: str = "monomial_scrolls",
    log_level: Optional[str] = None,
    log_file: Optional[Path] = None
) -> logging.Logger:
    """
    Configure and return a logger instance.

    Console output goes to stderr; stdout is reserved for command results.

    Args:
        name: Logger name
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
                   Falls back to the LOG_LEVEL environment variable, then INFO.
        log_file: Optional file path for file logging

    Returns:
        Configured logger instance
    """
    level_name = (log_level or _level_override or os.getenv('LOG_LEVEL', 'INFO')).upper()
    level = getattr(logging, level_name, logging.INFO)

    logger = logging.getLogger(name)
    _configured_loggers.add(name)
    logger.setLevel(level)

    # Remove existing handlers to avoid duplicates
    logger.handlers.clear()
    logger.propagate = False

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)

    formatter = LocalTimeFormatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def set_log_level(log_level: str) -> None:
    """Apply a level to every logger configured through setup_logger."""
    global _level_override
    _level_override = log_level
    level = getattr(logging, log_level.upper(), logging.INFO)
    for name in _configured_loggers:
        logger = logging.getLogger(name)
        logger.setLevel(level)
        for handler in logger.handlers:
            handler.setLevel(level)
