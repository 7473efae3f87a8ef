"""
Translators between indexings of the same structure

A translator h: dom(i') -> dom(i) satisfies i(h(x)) = i'(x). For term
indexings it is built by structural recursion: numerals through the scalar
sub-translators, atoms to the least target index of their value, and
operation nodes through the target's op-table.
"""

import logging
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence

from ..encoding.trees import TermTree, numeral_value
from ..error_handling.exceptions import SortMismatchError, TranslationError
from .audit import AuditReport, AuditViolation
from .core import IndexedStructure, Indexing, SearchBudget, right_inverse
from .terms import SUCC, ZERO, TermIndexing

logger = logging.getLogger(__name__)


class Translator:
    """Index-level map from `source` to `target` preserving decoded values"""

    def __init__(self, source: Indexing, target: Indexing,
                 mapping: Callable[[int], int], name: str = ""):
        self.source = source
        self.target = target
        self._mapping = mapping
        self.name = name or f"{source.carrier} -> {target.carrier}"

    def map(self, x: int) -> int:
        return self._mapping(x)

    __call__ = map

    def then(self, other: 'Translator') -> 'Translator':
        """self followed by other"""
        return Translator(self.source, other.target, lambda x: other.map(self.map(x)),
                          f"{self.name} ; {other.name}")

    def check(self, samples: Iterable[int]) -> AuditReport:
        """Verify target.decode(h(x)) equals source.decode(x) on the given source indices"""
        report = AuditReport(subject=f"translator {self.name}")
        for x in samples:
            report.checked += 1
            expected = self.source.decode(x)
            try:
                actual = self.target.decode(self.map(x))
            except Exception as e:
                report.violations.append(AuditViolation(
                    self.name, (x,), self.source.describe(expected), None, f"{type(e).__name__}: {e}",
                ))
                continue
            if not self.target.equality(actual, expected):
                report.violations.append(AuditViolation(
                    self.name, (x,), self.source.describe(expected),
                    self.target.describe(actual), "decoded values differ",
                ))
        return report

    def __repr__(self) -> str:
        return f"Translator({self.name})"


def identity_translator(indexing: Indexing) -> Translator:
    return Translator(indexing, indexing, lambda x: x, f"id({indexing.carrier})")


def value_translator(source: Indexing, target: Indexing,
                     budget: Optional[SearchBudget] = None) -> Translator:
    """x -> earliest target index of source.decode(x)"""
    return Translator(source, target, lambda x: target.index_of(source.decode(x), budget))


def build_translator(source: TermIndexing,
                     target: IndexedStructure,
                     sub_translators: Optional[Mapping[str, Translator]] = None,
                     budget: Optional[SearchBudget] = None) -> Translator:
    """
    Translator from a term indexing into the same-sorted indexing of `target`

    Args:
        source: Term indexing of one sort of the generated structure
        target: Structure carrying the same operation symbols
        sub_translators: Per scalar sort, maps indices of the source
            substructure to indices of the target's scalar sort
        budget: Bound for least-index searches on atoms
    """
    budget = budget or SearchBudget()
    structure = source.structure
    readable = set(source.readable_operations)

    subs: Dict[str, Translator] = {}
    for sort in structure.scalar_sorts:
        if sub_translators and sort in sub_translators:
            subs[sort] = sub_translators[sort]
        else:
            subs[sort] = value_translator(structure.substructure.sort(sort), target.sort(sort), budget)

    for symbol in readable:
        if symbol not in target:
            raise TranslationError(f"target {target.name} has no operation {symbol!r}")

    def atom_index(tree: TermTree, sort: str) -> int:
        value = source.atom_value(tree)
        indexing = target.sort(sort)
        if indexing.has_locator:
            return indexing.locate(value)
        if tree.symbol in target.constants:
            return indexing.least_index(target.constant(tree.symbol), budget)
        return indexing.index_of(value, budget)

    def translate(tree: TermTree, sort: str) -> int:
        if sort in subs:
            x = numeral_value(tree, ZERO, SUCC)
            if x is None:
                raise SortMismatchError(f"{tree} is not a numeral of scalar sort {sort}")
            return subs[sort].map(x)

        if source.is_atom(tree):
            return atom_index(tree, sort)

        if tree.symbol not in readable:
            raise TranslationError(f"{source.carrier} cannot read {tree.symbol!r} compositionally")
        spec = structure.operation_specs[tree.symbol]
        if spec.result_sort != sort or tree.arity != len(spec.arg_sorts):
            raise SortMismatchError(f"{tree.symbol} does not build elements of sort {sort}")
        children = [translate(child, arg) for child, arg in zip(tree.children, spec.arg_sorts)]
        return target.apply(tree.symbol, *children)

    def mapping(x: int) -> int:
        return translate(source.term_of(x), source.sort)

    return Translator(source, target.sort(source.sort), mapping,
                      f"{source.carrier} -> {target.name}.{source.sort}")


def transport_function(f_hat: Callable[..., int],
                       translators: Sequence[Translator],
                       budget: Optional[SearchBudget] = None,
                       inverse: Optional[Callable[[int], int]] = None) -> Callable[..., int]:
    """
    Move an index-level function from one family of indexings to another

    translators[k] maps the new k-th argument indexing into the one f_hat
    expects; the last translator maps the new result indexing into f_hat's
    result indexing and is inverted by search unless `inverse` is given.
    """
    if len(translators) < 1:
        raise ValueError("transport needs at least the result translator")
    *arguments, result = translators
    budget = budget or SearchBudget()

    if inverse is None:
        def inverse(y: int) -> int:
            return right_inverse(result.map, result.source, y, budget,
                                 match=lambda a, b: result.target.eq(a, b) == 1)

    def transported(*xs: int) -> int:
        if len(xs) != len(arguments):
            raise ValueError(f"expected {len(arguments)} arguments, got {len(xs)}")
        return inverse(f_hat(*(h.map(x) for h, x in zip(arguments, xs))))

    return transported
