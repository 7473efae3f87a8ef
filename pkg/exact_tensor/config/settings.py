"""
Configuration settings for the exact tensor tools
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, List, Optional

from ..error_handling.decorators import handle_errors
from ..error_handling.error_handler import ErrorCategory
from ..error_handling.exceptions import ConfigValidationError

logger = logging.getLogger(__name__)

BUDGET_ENV_VAR = "ET_BUDGET"
DEFAULT_SEARCH_BUDGET = 100_000

_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


@dataclass
class Config:
    """Configuration for searches, audits and output"""

    # Search parameters
    search_budget: int = DEFAULT_SEARCH_BUDGET

    # Audit parameters
    audit_samples: int = 8
    extraction_range: int = 32
    enumerate_count: int = 20
    field_check_samples: int = 500
    random_seed: int = 0

    # Output parameters
    decimal_places: int = 6
    show_progress: bool = True
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary"""
        return asdict(self)

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> 'Config':
        """Create config from dictionary, ignoring metadata and unknown keys"""
        known = {f.name for f in fields(cls)}
        values = {}
        for key, value in config_dict.items():
            if key.startswith('_'):
                continue
            if key not in known:
                logger.warning("⚠️ Ignoring unknown configuration key %r", key)
                continue
            values[key] = value
        return cls(**values)

    def validate(self) -> List[str]:
        """Validate configuration and return list of issues"""
        issues = []

        for name in ('search_budget', 'audit_samples', 'extraction_range',
                     'field_check_samples'):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                issues.append(f"{name} must be a positive integer")

        if not isinstance(self.enumerate_count, int) or self.enumerate_count < 0:
            issues.append("enumerate_count cannot be negative")

        if not isinstance(self.decimal_places, int) or not 0 <= self.decimal_places <= 30:
            issues.append("decimal_places must be between 0 and 30")

        if self.log_level not in _LOG_LEVELS:
            issues.append(f"log_level must be one of {_LOG_LEVELS}")

        return issues

    def ensure_valid(self) -> 'Config':
        """Raise ConfigValidationError on the first issue"""
        for f in fields(self):
            issue = next((i for i in self.validate() if i.startswith(f.name)), None)
            if issue:
                raise ConfigValidationError(f.name, getattr(self, f.name), issue)
        return self

    def get_display_info(self) -> Dict[str, str]:
        """Get formatted configuration info for display"""
        return {
            "Search Budget": f"{self.search_budget:,}",
            "Audit Samples": str(self.audit_samples),
            "Extraction Range": str(self.extraction_range),
            "Progress": "Enabled" if self.show_progress else "Disabled",
            "Log Level": self.log_level,
        }


def apply_environment(config: Config, environ: Optional[Dict[str, str]] = None) -> Config:
    """Apply the ET_BUDGET override"""
    environ = os.environ if environ is None else environ
    raw = environ.get(BUDGET_ENV_VAR)
    if raw is None or raw.strip() == "":
        return config

    try:
        budget = int(raw)
    except ValueError:
        raise ConfigValidationError(BUDGET_ENV_VAR, raw, "must be a positive integer")
    if budget < 1:
        raise ConfigValidationError(BUDGET_ENV_VAR, raw, "must be a positive integer")

    config.search_budget = budget
    logger.debug("Search budget %d taken from %s", budget, BUDGET_ENV_VAR)
    return config


def load_config(filepath: str) -> Config:
    """Load and validate configuration from a JSON file"""
    if not os.path.exists(filepath):
        raise ConfigValidationError("config_file", filepath, "file not found")

    try:
        with open(filepath, 'r') as f:
            config_dict = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigValidationError("config_file", filepath, f"invalid JSON: {e}")

    config = Config.from_dict(config_dict).ensure_valid()
    logger.info("✅ Configuration loaded from %s", filepath)
    return config


@handle_errors(ErrorCategory.FILE_IO, component="config", exceptions=(OSError,))
def save_config(config: Config, filepath: str) -> None:
    """Save configuration to a JSON file"""
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)

    with open(filepath, 'w') as f:
        json.dump(config.to_dict(), f, indent=2)

    logger.info("✅ Configuration saved to %s", filepath)


def create_quick_config() -> Config:
    """Small samples for a fast look at every demo"""
    config = Config()
    config.audit_samples = 4
    config.extraction_range = 8
    config.enumerate_count = 10
    config.field_check_samples = 50
    return config


def create_thorough_config() -> Config:
    """Larger samples, slower runs"""
    config = Config()
    config.audit_samples = 12
    config.extraction_range = 64
    config.enumerate_count = 1000
    config.field_check_samples = 2000
    return config


def get_preset_configs() -> Dict[str, Config]:
    """Get dictionary of preset configurations"""
    return {
        "default": Config(),
        "quick": create_quick_config(),
        "thorough": create_thorough_config(),
    }
