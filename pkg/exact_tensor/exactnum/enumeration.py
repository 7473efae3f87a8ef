"""
Enumerating the indices of ℚ inside an indexed extension L

Only the index-level addition and multiplication of L and the indices z of
0 and u of 1 are used. J(0) = z, J(p+1) = J(p) +̂ u; subtraction and division
are recovered by bounded search, and f(p, q, r) = (J(p) -̂ J(q)) /̂ (J(r) +̂ u)
runs over indices of every rational.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import count, islice
from typing import Iterator, List, Optional, Tuple

from ..error_handling.exceptions import BudgetExhaustedError
from ..indexing.core import IndexedStructure, SearchBudget, derive_inverse_op

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumeratedRational:
    """One item of the stream; skipped when a search ran out of budget"""
    triple: Tuple[int, int, int]
    index: Optional[int] = None
    value: Optional[Fraction] = None
    reason: str = ""

    @property
    def skipped(self) -> bool:
        return self.index is None


def diagonal_triples() -> Iterator[Tuple[int, int, int]]:
    """(p, q, r) by increasing p + q + r, then lexicographically"""
    for total in count():
        for p in range(total, -1, -1):
            for q in range(total - p, -1, -1):
                yield p, q, total - p - q


def _as_rational(value) -> Optional[Fraction]:
    coords = getattr(value, "coords", None)
    if coords is None:
        return Fraction(value)
    if value.is_rational():
        return coords[0]
    return None


class RationalIndexEnumerator:
    """
    Args:
        structure: Indexed L with operations `add`, `mul` and constants `zero`, `one`
        budget: Bound for each subtraction and division search
        sort: Sort of L in the structure
    """

    def __init__(self, structure: IndexedStructure, budget: Optional[SearchBudget] = None,
                 sort: str = "L", add: str = "add", mul: str = "mul",
                 zero: str = "zero", one: str = "one"):
        self.domain = structure.sort(sort)
        self.budget = budget or SearchBudget()
        self._add = structure.operation(add).implementation
        self._mul = structure.operation(mul).implementation
        self.zero = structure.constant(zero)
        self.one = structure.constant(one)
        self._numerals: List[int] = [self.zero]

    def numeral(self, p: int) -> int:
        """J(p)"""
        while len(self._numerals) <= p:
            self._numerals.append(self._add(self._numerals[-1], self.one))
        return self._numerals[p]

    def subtract(self, n: int, p: int) -> int:
        """n -̂ p: least z with p +̂ z eq n"""
        return derive_inverse_op(self._add, self.domain, n, p, self.budget)

    def divide(self, n: int, p: int) -> int:
        """n /̂ p: least z with p ×̂ z eq n"""
        return derive_inverse_op(self._mul, self.domain, n, p, self.budget)

    def index_of_triple(self, p: int, q: int, r: int) -> int:
        difference = self.subtract(self.numeral(p), self.numeral(q))
        return self.divide(difference, self._add(self.numeral(r), self.one))

    def item(self, p: int, q: int, r: int) -> EnumeratedRational:
        try:
            index = self.index_of_triple(p, q, r)
        except BudgetExhaustedError as e:
            logger.info("skipping (%d, %d, %d): %s", p, q, r, e)
            return EnumeratedRational((p, q, r), reason=str(e))
        return EnumeratedRational((p, q, r), index, _as_rational(self.domain.decode(index)))

    def __iter__(self) -> Iterator[EnumeratedRational]:
        for p, q, r in diagonal_triples():
            yield self.item(p, q, r)


def enumerate_rational_indices(structure: IndexedStructure,
                               budget: Optional[SearchBudget] = None,
                               limit: Optional[int] = None,
                               **names) -> Iterator[EnumeratedRational]:
    """Stream of indices f(p, q, r) with their decoded values (p - q)/(r + 1)"""
    stream = iter(RationalIndexEnumerator(structure, budget, **names))
    return islice(stream, limit) if limit is not None else stream
