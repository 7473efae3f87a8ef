"""
Error types and error handling for the exact tensor library
"""

from .error_handler import (
    ErrorHandler, ErrorSeverity, ErrorCategory, ErrorInfo,
    get_error_handler, configure_error_handler,
)
from .decorators import handle_errors, log_errors, graceful_degradation
from .exceptions import (
    ExactTensorError, NotInImageError, TreeDecodeError, UnknownLabelError,
    BudgetExhaustedError, TermRejectedError, SortMismatchError, TranslationError,
    FieldMismatchError, FieldDivisionByZeroError, InvalidFieldError,
    MissingConjugationError, NotABasisVectorError, OracleRangeError, GateError,
    CircuitParseError, StateParseError, TermSyntaxError, FieldFileError, ConfigValidationError,
)

__all__ = [
    'ErrorHandler', 'ErrorSeverity', 'ErrorCategory', 'ErrorInfo',
    'get_error_handler', 'configure_error_handler',
    'handle_errors', 'log_errors', 'graceful_degradation',
    'ExactTensorError', 'NotInImageError', 'TreeDecodeError', 'UnknownLabelError',
    'BudgetExhaustedError', 'TermRejectedError', 'SortMismatchError', 'TranslationError',
    'FieldMismatchError', 'FieldDivisionByZeroError', 'InvalidFieldError',
    'MissingConjugationError', 'NotABasisVectorError', 'OracleRangeError', 'GateError',
    'CircuitParseError', 'StateParseError', 'TermSyntaxError', 'FieldFileError',
    'ConfigValidationError',
]
