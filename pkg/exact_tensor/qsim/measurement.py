"""
Measurement distributions: exact probabilities a·conj(a) per basis word
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from ..error_handling.decorators import graceful_degradation
from ..error_handling.exceptions import MissingConjugationError
from ..exactnum.number_field import FieldElement, nf_add, nf_conj, nf_mul
from ..tensor.text_format import format_coefficient
from ..tensor.vector import TensorVector
from ..tensor.words import QUBIT_ALPHABET, Alphabet, Word, format_word

logger = logging.getLogger(__name__)


@dataclass
class ProbabilityEntry:
    word: Word
    exact: FieldElement
    decimal: float

    def to_dict(self, places: int = 6) -> Dict[str, Any]:
        return {
            'word': "".join(self.word),
            'exact': format_coefficient(self.exact),
            'decimal': round(self.decimal, places),
        }


@dataclass
class MeasurementReport:
    """Outcome distribution of a state, in word-rank order"""
    entries: List[ProbabilityEntry]
    total: FieldElement
    timestamp: datetime = field(default_factory=datetime.now)

    @property
    def is_normalized(self) -> bool:
        return self.total == self.total.field.one

    def probability(self, word: Word) -> FieldElement:
        for entry in self.entries:
            if entry.word == tuple(word):
                return entry.exact
        return self.total.field.zero

    def to_dict(self, places: int = 6) -> Dict[str, Any]:
        return {
            'entries': [entry.to_dict(places) for entry in self.entries],
            'total': format_coefficient(self.total),
            'normalized': self.is_normalized,
            'timestamp': self.timestamp.isoformat(),
        }

    def format_table(self, places: int = 6) -> str:
        width = max([len("outcome")] + [len(entry.word) + 2 for entry in self.entries])
        lines = [f"{'outcome':<{width}}  {'exact':<16}  decimal"]
        for entry in self.entries:
            ket = format_word(entry.word)
            lines.append(f"{ket:<{width}}  {format_coefficient(entry.exact):<16}  {entry.decimal:.{places}f}")
        lines.append(f"{'total':<{width}}  {format_coefficient(self.total):<16}  "
                     f"{sum(entry.decimal for entry in self.entries):.{places}f}")
        return "\n".join(lines)


@graceful_degradation(fallback_value=float("nan"), component="measurement")
def _decimal(exact: FieldElement) -> float:
    return exact.approx().real


def probabilities(state: TensorVector, alphabet: Optional[Alphabet] = None) -> MeasurementReport:
    """
    Exact probability a_w·conj(a_w) for every word w in the support

    Raises MissingConjugationError when the state's field has no conjugation.
    """
    if state.field.conjugation is None:
        raise MissingConjugationError(f"{state.field.name} has no conjugation table")
    alphabet = alphabet or QUBIT_ALPHABET

    entries = []
    total = state.field.zero
    for word, amplitude in state.items(alphabet):
        exact = nf_mul(amplitude, nf_conj(amplitude))
        total = nf_add(total, exact)
        entries.append(ProbabilityEntry(word, exact, _decimal(exact)))

    report = MeasurementReport(entries, total)
    if not report.is_normalized:
        logger.warning("state is not normalized: total probability %s", format_coefficient(total))
    return report
