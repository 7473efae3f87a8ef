"""
The naturals: identity-indexed structure and two term structures
"""

from typing import Optional

from ..encoding.trees import TermTree, leaf, node, numeral, numeral_value
from .core import IndexedStructure, Indexing, Operation
from .terms import (
    ConstantSpec, GenerativeSpec, OperationSpec, SortSpec, TermStructure, build_term_indexing,
)

NATURAL_SORT = "N"


def _natural(x: int) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise ValueError(f"not a natural number: {x!r}")
    return x


def natural_indexing() -> Indexing:
    """ℕ indexed by itself"""
    return Indexing(
        NATURAL_SORT,
        enumerator=_natural,
        decoder=_natural,
        equality=lambda a, b: a == b,
        locator=_natural,
    )


def natural_structure() -> IndexedStructure:
    """⟨ℕ, S, plus⟩ with constants 0 and 1 on the identity indexing"""
    indexing = natural_indexing()
    return IndexedStructure(
        "nat",
        {NATURAL_SORT: indexing},
        [
            Operation("S", (NATURAL_SORT,), NATURAL_SORT, lambda x: x + 1, lambda n: n + 1),
            Operation("plus", (NATURAL_SORT, NATURAL_SORT), NATURAL_SORT,
                      lambda x, y: x + y, lambda a, b: a + b),
        ],
        {"0": (NATURAL_SORT, 0), "1": (NATURAL_SORT, 1)},
    )


def natural_successor_structure(label_order: Optional[tuple] = None) -> TermStructure:
    """
    ⟨ℕ, S⟩ with 0 as its constant; numerals S^n(0) are the admitted terms

    With the default table {0: 0, S: 1}, ⌜0⌝ = 1 and ⌜S(0)⌝ = 12.
    """
    sort = SortSpec(
        NATURAL_SORT,
        enumerate_terms=numeral,
        recognizer=lambda tree: numeral_value(tree) is not None,
        equality=lambda a, b: a == b,
        canonical_term=numeral,
    )
    return build_term_indexing(GenerativeSpec(
        name="nat-succ",
        sorts=(sort,),
        constants=(ConstantSpec("0", NATURAL_SORT, 0),),
        operations=(OperationSpec("S", (NATURAL_SORT,), NATURAL_SORT, lambda n: n + 1),),
        label_order=label_order,
    ))


def unary_term(n: int, one: str = "1", zero: str = "0", plus: str = "plus") -> TermTree:
    """1 + (1 + (... + 0)) with n ones"""
    tree = leaf(zero)
    for _ in range(n):
        tree = node(plus, leaf(one), tree)
    return tree


def unary_value(tree: TermTree, one: str = "1", zero: str = "0", plus: str = "plus") -> Optional[int]:
    count = 0
    while tree.symbol == plus and tree.arity == 2 and tree.children[0] == leaf(one):
        count += 1
        tree = tree.children[1]
    if tree == leaf(zero):
        return count
    return None


def natural_addition_structure(label_order: Optional[tuple] = None) -> TermStructure:
    """⟨ℕ, plus⟩ generated by 0 and 1; unary sums 1 + (1 + ... 0) are admitted"""
    sort = SortSpec(
        NATURAL_SORT,
        enumerate_terms=unary_term,
        recognizer=lambda tree: unary_value(tree) is not None,
        equality=lambda a, b: a == b,
        canonical_term=unary_term,
    )
    return build_term_indexing(GenerativeSpec(
        name="nat-plus",
        sorts=(sort,),
        constants=(ConstantSpec("0", NATURAL_SORT, 0), ConstantSpec("1", NATURAL_SORT, 1)),
        operations=(OperationSpec("plus", (NATURAL_SORT, NATURAL_SORT), NATURAL_SORT,
                                  lambda a, b: a + b),),
        label_order=label_order,
    ))
