"""
Progress display for long-running demos
"""

from .cli_progress import CLIProgress, TQDM_AVAILABLE

__all__ = ['CLIProgress', 'TQDM_AVAILABLE']
