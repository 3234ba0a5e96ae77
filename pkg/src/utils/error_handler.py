"""
Error types, exceptions and the error ledger used by batch runs and the CLI
"""

import csv
import os
from collections import Counter
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, List, Dict, Any
from enum import Enum

from src.utils.logger import setup_logger


class ErrorType(Enum):
    """Types of errors that can occur while analysing curves and scrolls"""
    USAGE_ERROR = "usage_error"
    VALIDATION_ERROR = "validation_error"
    PRECONDITION_ERROR = "precondition_error"
    GENUS_CAP_ERROR = "genus_cap_error"
    FIXTURE_MISMATCH = "fixture_mismatch"
    STORAGE_ERROR = "storage_error"
    UNKNOWN_ERROR = "unknown_error"

    @property
    def exit_code(self) -> int:
        """CLI exit status for this error type."""
        if self is ErrorType.USAGE_ERROR:
            return 1
        if self is ErrorType.FIXTURE_MISMATCH:
            return 3
        return 2


class MonomialScrollsError(ValueError):
    """Base error; carries the ErrorType used for ledgers and exit codes."""

    error_type = ErrorType.UNKNOWN_ERROR

    def __init__(self, message: str, error_type: Optional[ErrorType] = None):
        super().__init__(message)
        if error_type is not None:
            self.error_type = error_type


class InvalidSemigroupError(MonomialScrollsError):
    """Generators do not define a numerical semigroup."""
    error_type = ErrorType.VALIDATION_ERROR


class InvalidCurveError(MonomialScrollsError):
    """Exponent list does not define a rational monomial curve."""
    error_type = ErrorType.VALIDATION_ERROR


class InvalidScrollError(MonomialScrollsError):
    """Scroll type or divisor class input is malformed."""
    error_type = ErrorType.VALIDATION_ERROR


class PreconditionError(MonomialScrollsError):
    """An operation was called outside the range where it is defined."""
    error_type = ErrorType.PRECONDITION_ERROR


class GenusCapError(MonomialScrollsError):
    """Requested enumeration exceeds the configured genus cap."""
    error_type = ErrorType.GENUS_CAP_ERROR


class ErrorHandler:
    """
    Handler for tracking and logging failures of batch computations.
    Records errors to a CSV ledger and provides detailed logging.
    """

    HEADERS = ['subject', 'error_type', 'error_message', 'timestamp', 'context']

    def __init__(self, errors_csv_path: Optional[Path] = None):
        """
        Initialize error handler.

        Args:
            errors_csv_path: Path to CSV file for storing errors.
                            Default: ERRORS_CSV_PATH env var or data/errors.csv
        """
        if errors_csv_path is None:
            errors_csv_path = Path(os.getenv('ERRORS_CSV_PATH', 'data/errors.csv'))

        self.errors_csv_path = errors_csv_path
        self.logger = setup_logger(name="error_handler")

        self.errors_csv_path.parent.mkdir(parents=True, exist_ok=True)
        self._initialize_csv()

    def _initialize_csv(self):
        """Initialize CSV file with headers if it doesn't exist."""
        if not self.errors_csv_path.exists():
            try:
                with open(self.errors_csv_path, 'w', newline='', encoding='utf-8') as f:
                    writer = csv.writer(f)
                    writer.writerow(self.HEADERS)
                self.logger.debug(f"Initialized errors CSV file: {self.errors_csv_path}")
            except OSError as e:
                self.logger.error(f"Failed to initialize errors CSV file: {e}")

    def record_error(
        self,
        subject: str,
        error_type: ErrorType,
        error_message: str,
        context: Optional[Dict[str, Any]] = None
    ) -> bool:
        """
        Record an error to CSV file and log it.

        Args:
            subject: What was being computed (e.g. an exponent list "3,6,9")
            error_type: Type of error (ErrorType enum)
            error_message: Error message description
            context: Optional context dictionary with additional information

        Returns:
            True if error was recorded successfully, False otherwise
        """
        timestamp = datetime.now(timezone.utc).isoformat()
        context_str = str(context) if context else ""

        log_message = f"Error on {subject}: [{error_type.value}] {error_message}"
        if context:
            log_message += f" | Context: {context}"
        self.logger.error(log_message)

        try:
            with open(self.errors_csv_path, 'a', newline='', encoding='utf-8') as f:
                writer = csv.writer(f)
                writer.writerow([subject, error_type.value, error_message, timestamp, context_str])
            return True
        except OSError as e:
            self.logger.error(f"Failed to record error to CSV: {e}")
            return False

    def record_exception(self, subject: str, exc: Exception,
                         context: Optional[Dict[str, Any]] = None) -> bool:
        """Record an exception, taking its type from MonomialScrollsError when available."""
        error_type = getattr(exc, 'error_type', ErrorType.UNKNOWN_ERROR)
        return self.record_error(subject, error_type, str(exc), context)

    def record_validation_error(
        self,
        subject: str,
        error_message: str,
        validation_rule: Optional[str] = None
    ) -> bool:
        """
        Record a validation error.

        Args:
            subject: Input that failed validation
            error_message: Error message
            validation_rule: Validation rule that failed (e.g. 'gcd_one')

        Returns:
            True if error was recorded successfully
        """
        context = {'validation_rule': validation_rule} if validation_rule else None
        return self.record_error(subject, ErrorType.VALIDATION_ERROR, error_message, context)

    def record_precondition_error(
        self,
        subject: str,
        error_message: str,
        operation: Optional[str] = None
    ) -> bool:
        """Record an operation called outside its domain (e.g. canonical model at genus 1)."""
        context = {'operation': operation} if operation else None
        return self.record_error(subject, ErrorType.PRECONDITION_ERROR, error_message, context)

    def record_storage_error(
        self,
        subject: str,
        error_message: str,
        operation: Optional[str] = None
    ) -> bool:
        """Record a database or file persistence failure."""
        context = {'operation': operation} if operation else None
        return self.record_error(subject, ErrorType.STORAGE_ERROR, error_message, context)

    def get_errors(self, subject: Optional[str] = None,
                   error_type: Optional[ErrorType] = None) -> List[Dict[str, Any]]:
        """
        Get errors from CSV file.

        Args:
            subject: Filter by subject (None = all)
            error_type: Filter by error type (None = all types)

        Returns:
            List of error dictionaries
        """
        errors = []

        if not self.errors_csv_path.exists():
            return errors

        try:
            with open(self.errors_csv_path, 'r', encoding='utf-8') as f:
                reader = csv.DictReader(f)
                for row in reader:
                    if subject and row['subject'] != subject:
                        continue
                    if error_type and row['error_type'] != error_type.value:
                        continue
                    errors.append({key: row[key] for key in self.HEADERS})
        except OSError as e:
            self.logger.error(f"Error reading errors CSV file: {e}")

        return errors

    def get_error_count(self, subject: Optional[str] = None,
                        error_type: Optional[ErrorType] = None) -> int:
        """Get count of errors matching the filters."""
        return len(self.get_errors(subject=subject, error_type=error_type))

    def get_error_summary(self) -> Dict[str, Any]:
        """Totals of the ledger per error type and per subject."""
        errors = self.get_errors()
        by_type = Counter(error['error_type'] for error in errors)
        by_subject = Counter(error['subject'] for error in errors)
        return {
            'total_errors': len(errors),
            'by_type': dict(by_type),
            'by_subject': dict(by_subject),
            'unique_subjects_with_errors': len(by_subject),
        }

    def clear_errors(self) -> bool:
        """Empty the ledger, leaving only the header row."""
        try:
            if self.errors_csv_path.exists():
                self.errors_csv_path.unlink()
            self._initialize_csv()
            self.logger.info("Cleared all errors from CSV file")
            return True
        except OSError as e:
            self.logger.error(f"Failed to clear errors: {e}")
            return False
