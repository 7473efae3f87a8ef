"""
Configuration management for the exact tensor tools
"""

from .settings import (
    Config, load_config, save_config, get_preset_configs, apply_environment,
    BUDGET_ENV_VAR, DEFAULT_SEARCH_BUDGET,
)

__all__ = [
    'Config', 'load_config', 'save_config', 'get_preset_configs', 'apply_environment',
    'BUDGET_ENV_VAR', 'DEFAULT_SEARCH_BUDGET',
]
