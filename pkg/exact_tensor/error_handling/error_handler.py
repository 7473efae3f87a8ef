"""
Central error handling with categorization and severity levels
"""

import logging
import os
import time
import traceback
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional


class ErrorSeverity(Enum):
    """Error severity levels"""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class ErrorCategory(Enum):
    """Error categories for better organization"""
    ENCODING = "encoding"
    SEARCH = "search"
    ARITHMETIC = "arithmetic"
    TRANSLATION = "translation"
    SIMULATION = "simulation"
    PARSE = "parse"
    CONFIGURATION = "configuration"
    FILE_IO = "file_io"
    SYSTEM = "system"


@dataclass
class ErrorInfo:
    """Everything recorded about one handled error"""
    error_id: str
    category: ErrorCategory
    severity: ErrorSeverity
    message: str
    exception: Optional[BaseException]
    traceback_str: str
    timestamp: datetime
    component: str
    context: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'error_id': self.error_id,
            'category': self.category.value,
            'severity': self.severity.value,
            'message': self.message,
            'component': self.component,
            'timestamp': self.timestamp.isoformat(),
        }


_SEVERITY_LEVELS = {
    ErrorSeverity.LOW: logging.INFO,
    ErrorSeverity.MEDIUM: logging.WARNING,
    ErrorSeverity.HIGH: logging.ERROR,
    ErrorSeverity.CRITICAL: logging.CRITICAL,
}

_SEVERITY_ICONS = {
    ErrorSeverity.LOW: "ℹ️",
    ErrorSeverity.MEDIUM: "⚠️",
    ErrorSeverity.HIGH: "❌",
    ErrorSeverity.CRITICAL: "🚨",
}


class ErrorHandler:
    """Records errors, logs them and keeps per-category statistics"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = self._get_default_config()
        self.config.update(config or {})

        self.error_history: List[ErrorInfo] = []
        self.error_counts: Dict[str, int] = {}

        self._setup_logging()

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default error handling configuration"""
        return {
            'log_file': None,
            'max_error_history': 1000,
            'detailed_logging': False,
        }

    def _setup_logging(self):
        """Attach an optional file handler to the error logger"""
        self.logger = logging.getLogger('exact_tensor.errors')

        log_file = self.config.get('log_file')
        if log_file:
            directory = os.path.dirname(log_file)
            if directory:
                os.makedirs(directory, exist_ok=True)

            already_attached = any(
                isinstance(handler, logging.FileHandler)
                and handler.baseFilename == os.path.abspath(log_file)
                for handler in self.logger.handlers
            )
            if not already_attached:
                file_handler = logging.FileHandler(log_file)
                file_handler.setLevel(logging.INFO)
                file_handler.setFormatter(logging.Formatter(
                    '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
                ))
                self.logger.addHandler(file_handler)

    def handle_error(self,
                     error: BaseException,
                     category: ErrorCategory,
                     severity: ErrorSeverity,
                     component: str,
                     context: Optional[Dict[str, Any]] = None) -> ErrorInfo:
        """Record and log an error"""
        error_info = ErrorInfo(
            error_id=f"{category.value}_{component}_{int(time.time())}",
            category=category,
            severity=severity,
            message=str(error),
            exception=error,
            traceback_str=traceback.format_exc(),
            timestamp=datetime.now(),
            component=component,
            context=context or {},
        )

        self._log_error(error_info)
        self._add_to_history(error_info)
        return error_info

    def _log_error(self, error_info: ErrorInfo):
        icon = _SEVERITY_ICONS[error_info.severity]
        message = f"{icon} [{error_info.category.value.upper()}] {error_info.component}: {error_info.message}"

        if self.config.get('detailed_logging', False):
            message += f"\nContext: {error_info.context}"
            message += f"\nTraceback: {error_info.traceback_str}"

        self.logger.log(_SEVERITY_LEVELS[error_info.severity], message)

    def _add_to_history(self, error_info: ErrorInfo):
        self.error_history.append(error_info)

        key = f"{error_info.category.value}_{error_info.component}"
        self.error_counts[key] = self.error_counts.get(key, 0) + 1

        max_history = self.config.get('max_error_history', 1000)
        if len(self.error_history) > max_history:
            self.error_history.pop(0)

    def get_error_statistics(self) -> Dict[str, Any]:
        """Get error counts by category, severity and component"""
        category_counts: Dict[str, int] = {}
        severity_counts: Dict[str, int] = {}
        component_counts: Dict[str, int] = {}

        for error in self.error_history:
            category_counts[error.category.value] = category_counts.get(error.category.value, 0) + 1
            severity_counts[error.severity.value] = severity_counts.get(error.severity.value, 0) + 1
            component_counts[error.component] = component_counts.get(error.component, 0) + 1

        return {
            'total_errors': len(self.error_history),
            'errors_by_category': category_counts,
            'errors_by_severity': severity_counts,
            'errors_by_component': component_counts,
            'recent_errors': [error.to_dict() for error in self.error_history[-10:]],
        }

    def clear_error_history(self):
        """Clear error history"""
        self.error_history.clear()
        self.error_counts.clear()


_default_handler: Optional[ErrorHandler] = None


def get_error_handler() -> ErrorHandler:
    """Shared handler used by the decorators"""
    global _default_handler
    if _default_handler is None:
        _default_handler = ErrorHandler()
    return _default_handler


def configure_error_handler(config: Dict[str, Any]) -> ErrorHandler:
    """Replace the shared handler, e.g. to add a log file"""
    global _default_handler
    _default_handler = ErrorHandler(config)
    return _default_handler
