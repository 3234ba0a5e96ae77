"""
Utilities package
"""

from src.utils.logger import setup_logger, set_log_level
from src.utils.error_handler import (
    ErrorHandler,
    ErrorType,
    MonomialScrollsError,
    InvalidSemigroupError,
    InvalidCurveError,
    InvalidScrollError,
    PreconditionError,
    GenusCapError,
)

__all__ = [
    'setup_logger',
    'set_log_level',
    'ErrorHandler',
    'ErrorType',
    'MonomialScrollsError',
    'InvalidSemigroupError',
    'InvalidCurveError',
    'InvalidScrollError',
    'PreconditionError',
    'GenusCapError',
]
