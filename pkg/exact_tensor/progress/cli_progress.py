"""
CLI progress tracking with tqdm integration
"""

import logging
import sys
from typing import Any, Dict, Iterable, Iterator, Optional, TypeVar

try:
    from tqdm import tqdm
    TQDM_AVAILABLE = True
except ImportError:
    TQDM_AVAILABLE = False

logger = logging.getLogger(__name__)

T = TypeVar("T")


class CLIProgress:
    """Progress bars for long demos; always on stderr so stdout stays data-only"""

    def __init__(self, enabled: bool = True, ncols: int = 80):
        self.enabled = enabled and TQDM_AVAILABLE
        self.ncols = ncols
        self.phase_bar: Optional["tqdm"] = None

        if enabled and not TQDM_AVAILABLE:
            logger.info("⚠️ tqdm not available, progress bars disabled")

    def track(self, iterable: Iterable[T], total: Optional[int] = None,
              desc: str = "", unit: str = "it") -> Iterator[T]:
        """Wrap an iterable in a progress bar"""
        if not self.enabled:
            yield from iterable
            return

        with tqdm(iterable, total=total, desc=desc, unit=unit, ncols=self.ncols,
                  leave=False, file=sys.stderr) as bar:
            for item in bar:
                yield item

    def start_phase(self, phase_name: str, total_steps: int) -> None:
        """Open a bar for one phase of a demo"""
        self.close_phase()
        if not self.enabled:
            logger.info("📊 Phase: %s (%d steps)", phase_name, total_steps)
            return

        self.phase_bar = tqdm(
            total=total_steps,
            desc=f"⚡ {phase_name}",
            unit="step",
            ncols=self.ncols,
            leave=False,
            bar_format="{l_bar}{bar}| {n_fmt}/{total_fmt} [{elapsed}, {rate_fmt}]",
            file=sys.stderr,
        )

    def advance(self, steps: int = 1, metrics: Optional[Dict[str, Any]] = None) -> None:
        if self.phase_bar is None:
            return
        self.phase_bar.update(steps)
        if metrics:
            self.phase_bar.set_postfix(metrics)

    def close_phase(self) -> None:
        if self.phase_bar is not None:
            self.phase_bar.close()
            self.phase_bar = None
