"""
Term indexings of generated structures

A structure generated by constants and new operations over an indexed
substructure is indexed by Gödel-encoded terms. Elements of the substructure
sorts appear as numerals S^x(0) of their indices x; every other node is a
constant or a new operation. Terms denote elements compositionally, and each
generated sort designates an admitted subset of terms (the enumeration) that
hits every element exactly once.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ..encoding.trees import (
    LabelTable, TermTree, decode_tree, encode_tree, leaf, node,
    numeral_index, numeral_of_index, numeral_value, wrap_index,
)
from ..error_handling.exceptions import SortMismatchError, TermRejectedError
from .core import IndexedStructure, Indexing, Operation

logger = logging.getLogger(__name__)

ZERO = "0"
SUCC = "S"


@dataclass(frozen=True)
class ConstantSpec:
    symbol: str
    sort: str
    value: Any


@dataclass(frozen=True)
class OperationSpec:
    """
    A new operation of the generated structure

    By default its index-level implementation wraps the children's indices
    under the operation's label. `implementation` may instead build one from
    the finished structure, e.g. a product that stays inside the admitted terms.
    """
    symbol: str
    arg_sorts: Tuple[str, ...]
    result_sort: str
    semantics: Callable[..., Any]
    implementation: Optional[Callable[['TermStructure'], Callable[..., int]]] = None


@dataclass(frozen=True)
class SortSpec:
    """
    A generated sort

    Args:
        name: Sort name
        enumerate_terms: z -> the z-th admitted term; every element exactly once
        recognizer: Membership of a term in the admitted subset
        equality: Equality of denoted elements
        canonical_term: Element -> its admitted term, when computable
        describe: Rendering of elements
    """
    name: str
    enumerate_terms: Callable[[int], TermTree]
    recognizer: Callable[[TermTree], bool]
    equality: Callable[[Any, Any], bool]
    canonical_term: Optional[Callable[[Any], TermTree]] = None
    describe: Callable[[Any], str] = str


@dataclass(frozen=True)
class GenerativeSpec:
    """Everything needed to build the term indexing of a generated structure"""
    name: str
    sorts: Tuple[SortSpec, ...]
    constants: Tuple[ConstantSpec, ...] = ()
    operations: Tuple[OperationSpec, ...] = ()
    substructure: Optional[IndexedStructure] = None
    label_order: Optional[Tuple[str, ...]] = None
    metadata: Mapping[str, Any] = field(default_factory=dict)


class TermIndexing(Indexing):
    """Indexing of one sort of a term structure"""

    def __init__(self, structure: 'TermStructure', sort: str, **kwargs):
        super().__init__(**kwargs)
        self.structure = structure
        self.sort = sort

    @property
    def table(self) -> LabelTable:
        return self.structure.table

    @property
    def is_scalar(self) -> bool:
        return self.sort in self.structure.scalar_sorts

    def term_of(self, x: int) -> TermTree:
        return decode_tree(self.table, x)

    def index_of_term(self, tree: TermTree) -> int:
        return encode_tree(self.table, tree)

    def admits(self, x: int) -> bool:
        """Whether x lies in the enumerated (admitted) part of the domain"""
        if self.is_scalar:
            return numeral_of_index(self.table, x) is not None
        spec = self.structure.sort_spec(self.sort)
        return spec.recognizer(self.term_of(x))

    def require_admitted(self, x: int) -> int:
        if not self.admits(x):
            raise TermRejectedError(f"index is not an admitted term of sort {self.sort}")
        return x

    # Compositional reading used by translators

    def is_atom(self, tree: TermTree) -> bool:
        return tree.arity == 0 and tree.symbol in self.structure.constant_specs

    def atom_value(self, tree: TermTree) -> Any:
        return self.structure.denote(tree, self.structure.constant_specs[tree.symbol].sort)

    @property
    def readable_operations(self) -> Tuple[str, ...]:
        return tuple(spec.symbol for spec in self.structure.spec.operations)


class TermStructure(IndexedStructure):
    """Indexed structure whose generated sorts are indexed by encoded terms"""

    def __init__(self, spec: GenerativeSpec, table: LabelTable):
        self.spec = spec
        self.table = table
        self.substructure = spec.substructure
        self.scalar_sorts: Tuple[str, ...] = tuple(spec.substructure.sorts) if spec.substructure else ()
        self.constant_specs: Dict[str, ConstantSpec] = {c.symbol: c for c in spec.constants}
        self.operation_specs: Dict[str, OperationSpec] = {o.symbol: o for o in spec.operations}
        self._sort_specs: Dict[str, SortSpec] = {s.name: s for s in spec.sorts}

        indexings: Dict[str, TermIndexing] = {}
        for sort in self.scalar_sorts:
            indexings[sort] = self._scalar_indexing(sort)
        for sort_spec in spec.sorts:
            indexings[sort_spec.name] = self._generated_indexing(sort_spec)
        self.indexings: List[TermIndexing] = list(indexings.values())

        # implementation factories may look up sorts while the op-table is built
        self.name = spec.name
        self.sorts = dict(indexings)
        super().__init__(spec.name, indexings, self._operations(), self._constants())

    def sort_spec(self, name: str) -> SortSpec:
        try:
            return self._sort_specs[name]
        except KeyError:
            raise SortMismatchError(f"{self.name} has no generated sort {name!r}") from None

    def indexing(self, sort: str) -> TermIndexing:
        return self.sort(sort)

    def denote(self, tree: TermTree, sort: str) -> Any:
        """The element of `sort` a term denotes"""
        if sort in self.scalar_sorts:
            x = numeral_value(tree, ZERO, SUCC)
            if x is None:
                raise SortMismatchError(f"{tree} is not a numeral of scalar sort {sort}")
            return self.substructure.sort(sort).decode(x)

        constant = self.constant_specs.get(tree.symbol)
        if constant is not None and tree.arity == 0:
            if constant.sort != sort:
                raise SortMismatchError(f"constant {tree.symbol} has sort {constant.sort}, not {sort}")
            return constant.value

        operation = self.operation_specs.get(tree.symbol)
        if operation is None or operation.result_sort != sort or tree.arity != len(operation.arg_sorts):
            raise SortMismatchError(f"{tree.symbol} does not build elements of sort {sort}")
        args = [self.denote(child, arg_sort) for child, arg_sort in zip(tree.children, operation.arg_sorts)]
        return operation.semantics(*args)

    def _scalar_indexing(self, sort: str) -> TermIndexing:
        base = self.substructure.sort(sort)
        table = self.table

        def decoder(x: int) -> Any:
            value = numeral_of_index(table, x)
            if value is None:
                raise SortMismatchError(f"index is not a numeral of scalar sort {sort}")
            return base.decode(value)

        locator = None
        if base.has_locator:
            locator = lambda value: numeral_index(table, base.locate(value))

        return TermIndexing(
            self, sort,
            carrier=f"{self.spec.name}.{sort}",
            enumerator=lambda z: numeral_index(table, base.enumerate(z)),
            decoder=decoder,
            equality=base.equality,
            locator=locator,
            describe=base.describe,
        )

    def _generated_indexing(self, sort_spec: SortSpec) -> TermIndexing:
        table = self.table
        sort = sort_spec.name

        locator = None
        if sort_spec.canonical_term is not None:
            locator = lambda value: encode_tree(table, sort_spec.canonical_term(value))

        return TermIndexing(
            self, sort,
            carrier=f"{self.spec.name}.{sort}",
            enumerator=lambda z: encode_tree(table, sort_spec.enumerate_terms(z)),
            decoder=lambda x: self.denote(decode_tree(table, x), sort),
            equality=sort_spec.equality,
            locator=locator,
            describe=sort_spec.describe,
        )

    def _operations(self) -> List[Operation]:
        operations = []
        table = self.table

        # Substructure operations act on numerals by unwrapping and rewrapping
        if self.substructure is not None:
            for old in self.substructure.operations.values():
                operations.append(Operation(
                    old.symbol, old.arg_sorts, old.result_sort,
                    implementation=_rewrap_numerals(table, old),
                    semantics=old.semantics,
                ))

        # New operations build the term one level up from the children's indices
        for spec in self.spec.operations:
            closed = spec.implementation is not None
            if closed:
                implementation = spec.implementation(self)
            else:
                symbol_id = table.id_of(spec.symbol)
                implementation = lambda *xs, _id=symbol_id: wrap_index(_id, xs)
            operations.append(Operation(
                spec.symbol, spec.arg_sorts, spec.result_sort,
                implementation=implementation,
                semantics=spec.semantics,
                closed=closed,
            ))
        return operations

    def _constants(self) -> Dict[str, Tuple[str, int]]:
        constants = {}
        if self.substructure is not None:
            for name, (sort, index) in self.substructure.constants.items():
                constants[name] = (sort, numeral_index(self.table, index))
        for constant in self.spec.constants:
            constants[constant.symbol] = (constant.sort, encode_tree(self.table, leaf(constant.symbol)))
        return constants


def _rewrap_numerals(table: LabelTable, old: Operation) -> Callable[..., int]:
    def implementation(*xs: int) -> int:
        values = []
        for x in xs:
            value = numeral_of_index(table, x)
            if value is None:
                raise SortMismatchError(f"{old.symbol} expects numerals of its scalar sorts")
            values.append(value)
        return numeral_index(table, old.implementation(*values))
    return implementation


def default_label_table(spec: GenerativeSpec) -> LabelTable:
    """Numerals first, then constants, then new operations, unless label_order says otherwise"""
    entries = []
    if spec.substructure is not None:
        entries += [(ZERO, 0), (SUCC, 1)]
    entries += [(c.symbol, 0) for c in spec.constants]
    entries += [(o.symbol, len(o.arg_sorts)) for o in spec.operations]

    table = LabelTable.of(*entries)
    if spec.label_order is not None:
        table = table.reordered(spec.label_order)
    return table


def build_term_indexing(spec: GenerativeSpec) -> TermStructure:
    """Term indexings of every sort plus the op-table, from a generative description"""
    if spec.substructure is not None:
        reserved = {ZERO, SUCC} & (
            {c.symbol for c in spec.constants} | {o.symbol for o in spec.operations}
        )
        if reserved:
            raise ValueError(f"symbols {sorted(reserved)} are reserved for numerals")
        clashing = set(spec.substructure.operations) & {o.symbol for o in spec.operations}
        if clashing:
            raise ValueError(f"operations {sorted(clashing)} already belong to the substructure")

    structure = TermStructure(spec, default_label_table(spec))
    logger.debug("built term structure %s with labels %s", spec.name, structure.table)
    return structure


def sum_term(summands: Sequence[TermTree], plus: str = "plus") -> TermTree:
    """Right-nested chain plus(s1, plus(s2, ... sn))"""
    if not summands:
        raise ValueError("a sum needs at least one summand")
    tree = summands[-1]
    for summand in reversed(summands[:-1]):
        tree = node(plus, summand, tree)
    return tree


def summands_of(tree: TermTree, plus: str = "plus") -> List[TermTree]:
    """Inverse of sum_term"""
    summands = []
    while tree.symbol == plus and tree.arity == 2:
        summands.append(tree.children[0])
        tree = tree.children[1]
    summands.append(tree)
    return summands
