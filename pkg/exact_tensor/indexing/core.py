"""
Indexings, indexed structures and budgeted searches

An indexing is a partial surjection from the naturals onto a carrier: an
enumerator g whose image is the domain, a decoder, and an equality on the
domain that agrees with equality of decoded values.
"""

import logging
import os
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from ..error_handling.exceptions import (
    BudgetExhaustedError, ConfigValidationError, SortMismatchError, TranslationError,
)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class SearchBudget:
    """Upper bound on the number of candidates a μ-search may test"""
    max_steps: int = DEFAULT_BUDGET

    def __post_init__(self):
        if isinstance(self.max_steps, bool) or not isinstance(self.max_steps, int) or self.max_steps < 1:
            raise ConfigValidationError("max_steps", self.max_steps, "search budget must be at least 1")

    @classmethod
    def from_environment(cls, default: int = DEFAULT_BUDGET) -> 'SearchBudget':
        raw = os.environ.get("ET_BUDGET")
        if raw is None or raw.strip() == "":
            return cls(default)
        try:
            return cls(int(raw))
        except ValueError:
            raise ConfigValidationError("ET_BUDGET", raw, "must be a positive integer") from None


def bounded_search(predicate: Callable[[int], bool], budget: SearchBudget, search: str) -> int:
    """Least z < budget with predicate(z); BudgetExhaustedError otherwise"""
    for z in range(budget.max_steps):
        if predicate(z):
            logger.debug("%s found a witness after %d steps", search, z + 1)
            return z
    raise BudgetExhaustedError(search, budget.max_steps)


class Indexing:
    """
    Partial surjection from ℕ onto a carrier

    Args:
        carrier: Name of the indexed set
        enumerator: Total function z -> index whose image is the domain
        decoder: Index -> carrier element
        equality: Equality of carrier elements, used to decide eq on indices
        locator: Optional carrier element -> its earliest enumerated index
        describe: Rendering of carrier elements for reports
    """

    def __init__(self,
                 carrier: str,
                 enumerator: Callable[[int], int],
                 decoder: Callable[[int], Any],
                 equality: Callable[[Any, Any], bool],
                 locator: Optional[Callable[[Any], int]] = None,
                 describe: Callable[[Any], str] = str):
        self.carrier = carrier
        self._enumerator = enumerator
        self._decoder = decoder
        self.equality = equality
        self._locator = locator
        self.describe = describe

    def enumerate(self, z: int) -> int:
        return self._enumerator(z)

    def decode(self, x: int) -> Any:
        return self._decoder(x)

    def eq(self, x: int, y: int) -> int:
        """1 when x and y index the same element, 0 otherwise"""
        return int(bool(self.equality(self.decode(x), self.decode(y))))

    def prefix(self, count: int) -> List[int]:
        return [self.enumerate(z) for z in range(count)]

    def admits(self, x: int) -> bool:
        """Whether x lies in the enumerated domain; all of ℕ unless a subclass narrows it"""
        return isinstance(x, int) and not isinstance(x, bool) and x >= 0

    @property
    def has_locator(self) -> bool:
        return self._locator is not None

    def locate(self, value: Any) -> int:
        if self._locator is None:
            raise TranslationError(f"indexing of {self.carrier} cannot locate values directly")
        return self._locator(value)

    def index_of(self, value: Any, budget: Optional[SearchBudget] = None) -> int:
        """Earliest enumerated index of value"""
        if self._locator is not None:
            return self._locator(value)
        budget = budget or SearchBudget()
        z = bounded_search(
            lambda k: self.equality(self.decode(self.enumerate(k)), value),
            budget, f"index_of({self.carrier})",
        )
        return self.enumerate(z)

    def least_index(self, reference: int, budget: Optional[SearchBudget] = None) -> int:
        """Earliest enumerated x with eq(x, reference) = 1"""
        if self._locator is not None:
            return self._locator(self.decode(reference))
        budget = budget or SearchBudget()
        z = bounded_search(
            lambda k: self.eq(self.enumerate(k), reference) == 1,
            budget, f"least_index({self.carrier})",
        )
        return self.enumerate(z)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.carrier})"


@dataclass(frozen=True)
class Operation:
    """
    One entry of an op-table: index-level implementation plus the operation it computes

    `closed` entries return admitted indices of the result sort. Term builders
    that only wrap their arguments under a label are not closed.
    """
    symbol: str
    arg_sorts: Tuple[str, ...]
    result_sort: str
    implementation: Callable[..., int]
    semantics: Callable[..., Any]
    closed: bool = True

    @property
    def arity(self) -> int:
        return len(self.arg_sorts)


class IndexedStructure:
    """Carrier indexings together with an op-table computable relatively to them"""

    def __init__(self,
                 name: str,
                 sorts: Mapping[str, Indexing],
                 operations: Iterable[Operation] = (),
                 constants: Optional[Mapping[str, Tuple[str, int]]] = None):
        self.name = name
        self.sorts: Dict[str, Indexing] = dict(sorts)
        self.operations: Dict[str, Operation] = {}
        for operation in operations:
            if operation.symbol in self.operations:
                raise ValueError(f"duplicate operation {operation.symbol!r} in {name}")
            for sort in operation.arg_sorts + (operation.result_sort,):
                if sort not in self.sorts:
                    raise SortMismatchError(f"operation {operation.symbol!r} uses unknown sort {sort!r}")
            self.operations[operation.symbol] = operation
        self.constants: Dict[str, Tuple[str, int]] = dict(constants or {})

    def sort(self, name: str) -> Indexing:
        try:
            return self.sorts[name]
        except KeyError:
            raise SortMismatchError(f"{self.name} has no sort {name!r}") from None

    def operation(self, symbol: str) -> Operation:
        try:
            return self.operations[symbol]
        except KeyError:
            raise TranslationError(f"{self.name} has no operation {symbol!r}") from None

    def apply(self, symbol: str, *indices: int) -> int:
        operation = self.operation(symbol)
        if len(indices) != operation.arity:
            raise ValueError(f"{symbol!r} takes {operation.arity} arguments, got {len(indices)}")
        return operation.implementation(*indices)

    def constant(self, name: str) -> int:
        try:
            return self.constants[name][1]
        except KeyError:
            raise TranslationError(f"{self.name} has no designated constant {name!r}") from None

    def with_operation(self, operation: Operation, name: Optional[str] = None) -> 'IndexedStructure':
        """Copy with one op-table entry added or replaced"""
        operations = dict(self.operations)
        operations[operation.symbol] = operation
        return IndexedStructure(name or self.name, self.sorts, operations.values(), self.constants)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.operations

    def __repr__(self) -> str:
        return f"IndexedStructure({self.name}: sorts={list(self.sorts)}, ops={list(self.operations)})"


def right_inverse(h: Callable[[int], int],
                  domain: Indexing,
                  y: int,
                  budget: Optional[SearchBudget] = None,
                  match: Optional[Callable[[int, int], bool]] = None) -> int:
    """
    k(y) = g(z) for the least z with h(g(z)) = y

    `match` replaces index equality, e.g. by the target's eq when y may be
    any index of the wanted value.
    """
    budget = budget or SearchBudget()
    match = match or (lambda a, b: a == b)
    z = bounded_search(lambda k: match(h(domain.enumerate(k)), y), budget, "right_inverse")
    return domain.enumerate(z)


def derive_inverse_op(forward: Callable[[int, int], int],
                      domain: Indexing,
                      n: int,
                      p: int,
                      budget: Optional[SearchBudget] = None) -> int:
    """g(z) for the least z with forward(p, g(z)) eq-equal to n"""
    budget = budget or SearchBudget()
    z = bounded_search(
        lambda k: domain.eq(forward(p, domain.enumerate(k)), n) == 1,
        budget, "derive_inverse_op",
    )
    return domain.enumerate(z)
