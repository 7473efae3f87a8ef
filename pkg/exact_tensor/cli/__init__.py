"""
Command-line front end: exact-tensor <command> ...
"""

import logging
import sys
from typing import List, Optional

from ..config import Config, apply_environment, get_preset_configs, load_config
from ..error_handling import (
    ErrorCategory, ErrorSeverity, ExactTensorError, configure_error_handler, get_error_handler,
)
from ..progress import CLIProgress
from .commands import COMMANDS, INDEX_ACTIONS
from .parser import build_parser

logger = logging.getLogger(__name__)


def setup_logging(config: Config) -> None:
    """Route the package loggers to the current stderr"""
    root = logging.getLogger('exact_tensor')
    for handler in list(root.handlers):
        if getattr(handler, '_exact_tensor_cli', False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s - %(name)s - %(message)s'))
    handler._exact_tensor_cli = True
    root.addHandler(handler)
    root.setLevel(getattr(logging, config.log_level))


def _quiet_error_log() -> None:
    """Handled errors are printed by main; the error log only feeds an optional file"""
    errors = logging.getLogger('exact_tensor.errors')
    errors.propagate = False
    if not any(isinstance(h, logging.NullHandler) for h in errors.handlers):
        errors.addHandler(logging.NullHandler())


def load_configuration(args) -> Config:
    """Preset or file, then the environment, then command-line flags"""
    if args.config_file:
        config = load_config(args.config_file)
    else:
        config = get_preset_configs()[args.preset]
    apply_environment(config)

    if args.budget is not None:
        config.search_budget = args.budget
    if args.no_progress:
        config.show_progress = False
    if args.log_level:
        config.log_level = args.log_level
    config.ensure_valid()
    for key, value in config.get_display_info().items():
        logger.debug("%s: %s", key, value)
    return config


def _log_error_statistics() -> None:
    stats = get_error_handler().get_error_statistics()
    if stats['total_errors']:
        logger.debug("errors this run: %s by category, %s by component",
                     stats['errors_by_category'], stats['errors_by_component'])


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the exit status"""
    parser = build_parser()
    args = parser.parse_args(argv)
    command = f"index {args.action}" if args.command == 'index' else args.command
    get_error_handler().clear_error_history()
    _quiet_error_log()

    try:
        try:
            config = load_configuration(args)
        except (ExactTensorError, ValueError, TypeError, OSError) as e:
            get_error_handler().handle_error(e, ErrorCategory.CONFIGURATION, ErrorSeverity.HIGH, "config")
            raise
        setup_logging(config)
        if config.log_file:
            configure_error_handler({'log_file': config.log_file})
        progress = CLIProgress(enabled=config.show_progress)

        # command handlers record their own errors through log_errors
        if args.command == 'index':
            return INDEX_ACTIONS[args.action](args, config, progress)
        return COMMANDS[args.command](args, config, progress)

    except KeyboardInterrupt:
        print("\n⏹️ Interrupted by user", file=sys.stderr)
        return 130
    except (ExactTensorError, ValueError, TypeError, KeyError, OSError) as e:
        print(f"❌ {command}: {e}", file=sys.stderr)
        return 1
    finally:
        _log_error_statistics()


def main_entry() -> None:
    sys.exit(main())
