"""
Error handling framework for coxhurwitz.

Provides the exception hierarchy shared by every package and a helper that
turns exceptions into user-facing messages.
"""

from typing import Any, Optional
import logging

logger = logging.getLogger(__name__)


class CoxeterError(Exception):
    """Base exception for all coxhurwitz errors."""
    
    def __init__(self, message: str, user_message: Optional[str] = None):
        super().__init__(message)
        self.user_message = user_message or message


class ConfigurationError(CoxeterError):
    """Raised when a configuration value or system parameter is inconsistent."""


class ScalarArithmeticError(CoxeterError):
    """Raised for invalid exact arithmetic such as division by zero."""


class ValidationError(CoxeterError):
    """Raised when a Coxeter matrix is malformed."""
    
    def __init__(self, message: str, user_message: Optional[str] = None):
        if user_message is None:
            user_message = (
                f"Invalid Coxeter matrix: {message}\n"
                "A Coxeter matrix must be:\n"
                "• symmetric\n"
                "• 1 on the diagonal\n"
                "• an integer ≥ 2 or inf off the diagonal"
            )
        super().__init__(message, user_message)


class SystemMismatchError(CoxeterError):
    """Raised when elements of different Coxeter systems are combined."""
    
    def __init__(self, message: str = "Elements belong to different Coxeter systems"):
        super().__init__(message)


class DomainError(CoxeterError):
    """Raised when an argument lies outside the domain of an operation."""


class BudgetError(CoxeterError):
    """Raised when a search exceeds its configured budget."""
    
    def __init__(self, message: str, partial: Any = None, user_message: Optional[str] = None):
        if user_message is None:
            user_message = (
                f"{message}\n\n"
                "Raise the budget with --budget or the COXHURWITZ_BUDGET "
                "environment variable."
            )
        super().__init__(message, user_message)
        self.partial = partial


class PartialOrbitError(BudgetError):
    """Raised when a Hurwitz orbit outgrows its budget; carries the partial orbit."""


class ContractError(CoxeterError):
    """Raised when a precondition of an operation is violated."""
    
    def __init__(self, precondition: str, detail: str = ""):
        message = f"Precondition violated: {precondition}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.precondition = precondition


class InternalError(CoxeterError):
    """Raised when a computation contradicts a proven statement or invariant."""
    
    def __init__(self, message: str):
        user_msg = (
            f"Internal error: {message}\n\n"
            "This indicates a bug. Please check the logs for more details."
        )
        super().__init__(message, user_msg)


class UnsupportedError(CoxeterError):
    """Raised when an operation is requested outside its supported scope."""


class GroupFileParseError(CoxeterError):
    """Raised when a group file cannot be parsed."""
    
    def __init__(self, line_number: int, message: str):
        full = f"line {line_number}: {message}"
        super().__init__(full, f"Could not parse group file ({full})")
        self.line_number = line_number


def handle_error(error: Exception, logger_obj: Optional[logging.Logger] = None) -> str:
    """
    Handle an exception and return a user-friendly message.
    
    Args:
        error: The exception that occurred
        logger_obj: Optional logger to use for logging the error
        
    Returns:
        User-friendly error message
    """
    log = logger_obj or logger
    
    if isinstance(error, CoxeterError):
        log.warning(f"{error.__class__.__name__}: {error}")
        return error.user_message
    else:
        log.error(f"Unexpected error: {error}", exc_info=True)
        return (
            f"An unexpected error occurred: {str(error)}\n\n"
            "Please check the logs for more details."
        )
