"""
Stability demonstrations: translators between two indexings of one structure,
and recovery of a planted basis permutation through such a translator
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from .error_handling.exceptions import TranslationError
from .indexing.audit import AuditReport
from .indexing.core import SearchBudget
from .indexing.translation import Translator, build_translator
from .registry import build_structure, get_entry, term_indexing
from .tensor.permutation import (
    PermutationOracle, extract_permutation, identity_oracle, permuted_indexing,
)

logger = logging.getLogger(__name__)


@dataclass
class StabilityReport:
    structure: str
    source: str
    translator: str
    audit: AuditReport
    planted: Optional[List[int]] = None
    recovered: Optional[List[int]] = None
    timestamp: datetime = field(default_factory=datetime.now)

    @property
    def permutation_recovered(self) -> Optional[bool]:
        if self.planted is None:
            return None
        return self.planted == self.recovered

    @property
    def passed(self) -> bool:
        return self.audit.passed and self.permutation_recovered is not False

    def verdict(self) -> str:
        if not self.audit.passed:
            return f"translator audit failed: {self.audit.get_violation_summary()}"
        if self.permutation_recovered is None:
            return f"translator audit passed on {self.audit.checked} indices"
        if self.permutation_recovered:
            return "recovered permutation = planted"
        return "recovered permutation differs from planted"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'structure': self.structure,
            'source': self.source,
            'translator': self.translator,
            'audit': self.audit.to_dict(),
            'planted': self.planted,
            'recovered': self.recovered,
            'passed': self.passed,
            'timestamp': self.timestamp.isoformat(),
        }


def translator_between(source_name: str, target_name: str,
                       budget: Optional[SearchBudget] = None) -> Translator:
    """Translator from the source entry's term indexing into the target entry's structure"""
    return build_translator(term_indexing(source_name), build_structure(target_name), budget=budget)


def run_stability_demo(structure: str, oracle: Optional[PermutationOracle] = None,
                       sample_range: int = 32, budget: Optional[SearchBudget] = None,
                       progress=None) -> StabilityReport:
    """
    For a tensor entry, translate φ ∘ i back into i and read the permutation
    off basis vectors on [0, sample_range). For any other entry, translate its
    variant indexing into it; only the identity permutation applies there.

    The translator audit runs on the first sample_range enumerated indices,
    never more than the entry's sample_cap.
    """
    entry = get_entry(structure)
    oracle = oracle or identity_oracle()
    samples = min(sample_range, entry.sample_cap)
    base = term_indexing(structure) if entry.tensor else None

    if entry.tensor:
        source = permuted_indexing(base, oracle)
        translator = build_translator(source, build_structure(structure), budget=budget)
    else:
        if oracle.name != "identity":
            raise TranslationError(f"{structure} has no basis to permute; use the identity permutation")
        source = term_indexing(entry.variant or structure)
        translator = build_translator(source, build_structure(structure), budget=budget)

    logger.info("auditing %s on %d indices", translator.name, samples)
    indices = source.prefix(samples)
    if progress is not None:
        indices = list(progress.track(indices, total=samples, desc="audit", unit="index"))
    audit = translator.check(indices)

    report = StabilityReport(structure, source.carrier, translator.name, audit)
    if entry.tensor:
        report.planted = oracle.table(sample_range)
        report.recovered = extract_permutation(translator, sample_range, base, progress=progress)
    logger.info("stability demo on %s: %s", structure, report.verdict())
    return report
