"""
Utility functions and helpers.
"""

from .error_handler import (
    CoxeterError,
    ConfigurationError,
    ScalarArithmeticError,
    ValidationError,
    SystemMismatchError,
    DomainError,
    BudgetError,
    PartialOrbitError,
    ContractError,
    InternalError,
    UnsupportedError,
    GroupFileParseError,
    handle_error
)
from .logger import setup_logger
from .config_manager import ConfigManager, get_config, set_config

__all__ = [
    'CoxeterError',
    'ConfigurationError',
    'ScalarArithmeticError',
    'ValidationError',
    'SystemMismatchError',
    'DomainError',
    'BudgetError',
    'PartialOrbitError',
    'ContractError',
    'InternalError',
    'UnsupportedError',
    'GroupFileParseError',
    'handle_error',
    'setup_logger',
    'ConfigManager',
    'get_config',
    'set_config'
]
