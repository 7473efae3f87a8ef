"""
Gödel encoding of finite labeled trees

A tree f(t1, ..., tl) is encoded as pair(⌜f⌝, pair(⌜t1⌝, ... pair(⌜tl⌝, 0))),
where ⌜f⌝ is the position of f in an explicit label table. A leaf is pair(⌜f⌝, 0).
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..error_handling.exceptions import NotInImageError, TreeDecodeError, UnknownLabelError
from .pairing import pair, unpair


@dataclass(frozen=True)
class Label:
    """A symbol with a fixed arity"""
    symbol: str
    arity: int

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError(f"arity of {self.symbol!r} cannot be negative")


class LabelTable:
    """Finite table assigning each label a symbol id (its position)"""

    def __init__(self, labels: Iterable[Label]):
        self._labels: Tuple[Label, ...] = tuple(labels)
        self._ids: Dict[str, int] = {}
        for symbol_id, label in enumerate(self._labels):
            if label.symbol in self._ids:
                raise ValueError(f"duplicate label {label.symbol!r}")
            self._ids[label.symbol] = symbol_id

    @classmethod
    def of(cls, *entries: Tuple[str, int]) -> 'LabelTable':
        """LabelTable.of(("0", 0), ("S", 1))"""
        return cls(Label(symbol, arity) for symbol, arity in entries)

    @property
    def labels(self) -> Tuple[Label, ...]:
        return self._labels

    @property
    def symbols(self) -> Tuple[str, ...]:
        return tuple(label.symbol for label in self._labels)

    def id_of(self, symbol: str) -> int:
        try:
            return self._ids[symbol]
        except KeyError:
            raise UnknownLabelError(symbol) from None

    def label_at(self, symbol_id: int) -> Optional[Label]:
        if 0 <= symbol_id < len(self._labels):
            return self._labels[symbol_id]
        return None

    def reordered(self, symbols: Sequence[str]) -> 'LabelTable':
        """Same labels, new ids; `symbols` must be a permutation of this table's symbols"""
        if sorted(symbols) != sorted(self.symbols):
            raise ValueError("a reordered table must contain exactly the same symbols")
        by_symbol = {label.symbol: label for label in self._labels}
        return LabelTable(by_symbol[symbol] for symbol in symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._ids

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self._labels)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LabelTable) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        entries = ", ".join(f"{label.symbol}/{label.arity}" for label in self._labels)
        return f"LabelTable({entries})"


@dataclass(frozen=True)
class TermTree:
    """A finite tree; the arity of a node is the number of its children"""
    symbol: str
    children: Tuple['TermTree', ...] = ()

    @property
    def arity(self) -> int:
        return len(self.children)

    def depth(self) -> int:
        return 1 + max((child.depth() for child in self.children), default=0)

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children)

    def __str__(self) -> str:
        if not self.children:
            return self.symbol
        return f"{self.symbol}({','.join(str(child) for child in self.children)})"


def leaf(symbol: str) -> TermTree:
    return TermTree(symbol)


def node(symbol: str, *children: TermTree) -> TermTree:
    return TermTree(symbol, tuple(children))


def encode_tree(table: LabelTable, tree: TermTree) -> int:
    """The index ⌜tree⌝ under the given label table"""
    symbol_id = table.id_of(tree.symbol)
    expected = table.label_at(symbol_id).arity
    if tree.arity != expected:
        raise ValueError(
            f"label {tree.symbol!r} has arity {expected} but the node has {tree.arity} children"
        )

    tail = 0
    for child in reversed(tree.children):
        tail = pair(encode_tree(table, child), tail)
    return pair(symbol_id, tail)


def wrap_index(symbol_id: int, child_indices: Sequence[int]) -> int:
    """Index of f(t1, ..., tl) from ⌜f⌝ and the children's indices"""
    tail = 0
    for child in reversed(child_indices):
        tail = pair(child, tail)
    return pair(symbol_id, tail)


def split_index(table: LabelTable, index: int,
                position: Tuple[int, ...] = ()) -> Tuple[Label, List[int]]:
    """One decoding step: the root label and the children's indices"""
    try:
        symbol_id, rest = unpair(index)
    except NotInImageError:
        raise TreeDecodeError(position, "0 is not the index of any tree") from None

    label = table.label_at(symbol_id)
    if label is None:
        raise TreeDecodeError(position, f"unknown symbol id {symbol_id}")

    children = []
    for k in range(label.arity):
        if rest == 0:
            raise TreeDecodeError(
                position, f"{label.symbol!r} expects {label.arity} children, found {k}"
            )
        child, rest = unpair(rest)
        children.append(child)

    if rest != 0:
        raise TreeDecodeError(position, f"trailing data after the children of {label.symbol!r}")
    return label, children


def decode_tree(table: LabelTable, index: int, position: Tuple[int, ...] = ()) -> TermTree:
    """Partial inverse of encode_tree"""
    label, children = split_index(table, index, position)
    return TermTree(label.symbol, tuple(
        decode_tree(table, child, position + (k,)) for k, child in enumerate(children)
    ))


def reencode(index: int, source: LabelTable, target: LabelTable) -> int:
    """Translate an index between two tables of the same symbols"""
    return encode_tree(target, decode_tree(source, index))


def numeral(x: int, zero: str = "0", succ: str = "S") -> TermTree:
    """S^x(0)"""
    if x < 0:
        raise ValueError("numerals denote natural numbers")
    tree = leaf(zero)
    for _ in range(x):
        tree = node(succ, tree)
    return tree


def numeral_value(tree: TermTree, zero: str = "0", succ: str = "S") -> Optional[int]:
    """x when tree is S^x(0), otherwise None"""
    count = 0
    while tree.symbol == succ and tree.arity == 1:
        count += 1
        tree = tree.children[0]
    if tree.symbol == zero and tree.arity == 0:
        return count
    return None


def numeral_index(table: LabelTable, x: int, zero: str = "0", succ: str = "S") -> int:
    """⌜S^x(0)⌝ built level by level"""
    succ_id = table.id_of(succ)
    index = pair(table.id_of(zero), 0)
    for _ in range(x):
        index = pair(succ_id, pair(index, 0))
    return index


def numeral_of_index(table: LabelTable, index: int,
                     zero: str = "0", succ: str = "S") -> Optional[int]:
    """x when index is ⌜S^x(0)⌝, otherwise None"""
    zero_id, succ_id = table.id_of(zero), table.id_of(succ)
    count = 0
    while True:
        try:
            symbol_id, rest = unpair(index)
        except NotInImageError:
            return None
        if symbol_id == zero_id:
            return count if rest == 0 else None
        if symbol_id != succ_id or rest == 0:
            return None
        index, tail = unpair(rest)
        if tail != 0:
            return None
        count += 1
