"""
Decorators for easy error handling
"""

import functools
from typing import Any, Callable, Optional, Tuple, Type

from .error_handler import ErrorCategory, ErrorHandler, ErrorSeverity, get_error_handler


def handle_errors(
    category: ErrorCategory,
    severity: ErrorSeverity = ErrorSeverity.MEDIUM,
    component: Optional[str] = None,
    fallback_value: Any = None,
    suppress_errors: bool = False,
    exceptions: Tuple[Type[BaseException], ...] = (Exception,),
    error_handler: Optional[ErrorHandler] = None,
):
    """
    Record errors raised by the wrapped function

    Args:
        category: Error category for classification
        severity: Error severity level
        component: Component name (defaults to function name)
        fallback_value: Value to return when errors are suppressed
        suppress_errors: Whether to swallow the error and return the fallback
        exceptions: Exception types that are recorded; others pass through
        error_handler: Custom error handler instance
    """

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except exceptions as e:
                handler = error_handler or get_error_handler()
                handler.handle_error(
                    error=e,
                    category=category,
                    severity=severity,
                    component=component or func.__name__,
                    context={
                        "function": func.__name__,
                        "args": str(args)[:100],
                        "kwargs": str(kwargs)[:100],
                    },
                )
                if suppress_errors:
                    return fallback_value
                raise

        return wrapper

    return decorator


def log_errors(
    category: ErrorCategory = ErrorCategory.SYSTEM,
    severity: ErrorSeverity = ErrorSeverity.MEDIUM,
    component: Optional[str] = None,
):
    """Log errors without affecting function behavior"""
    return handle_errors(category=category, severity=severity, component=component)


def graceful_degradation(
    fallback_value: Any = None, log_errors: bool = True, component: Optional[str] = None
):
    """
    Continue with a fallback value when a display-only helper fails

    Args:
        fallback_value: Value to return on error
        log_errors: Whether to log errors
        component: Component name for logging
    """

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception as e:
                if log_errors:
                    get_error_handler().handle_error(
                        error=e,
                        category=ErrorCategory.SYSTEM,
                        severity=ErrorSeverity.LOW,
                        component=component or func.__name__,
                    )
                return fallback_value

        return wrapper

    return decorator
