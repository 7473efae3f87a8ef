"""
Term indexings of tensor spaces and of finite-dimensional vector spaces

Scalars of sort K appear as numerals S^λ(0) of their compact field index λ.
The admitted tensor term of a vector is a right-nested sum of
dot(S^λ(0), word) over its words in rank order with nonzero λ; the zero
vector is dot(S^z(0), b0) for the first generator b0.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..encoding.pairing import decode_list, decode_tuple, uncantor
from ..encoding.trees import TermTree, leaf, node, numeral, numeral_value
from ..error_handling.exceptions import SortMismatchError
from ..exactnum.number_field import NumberField
from ..indexing.core import IndexedStructure, Indexing, SearchBudget
from ..indexing.terms import (
    ConstantSpec, GenerativeSpec, OperationSpec, SortSpec, TermIndexing, TermStructure,
    build_term_indexing, sum_term, summands_of,
)
from .text_format import format_state
from .vector import TensorVector, tv_add, tv_scale, tv_tensor, tv_eq
from .words import TENSOR, Alphabet, Word, word_of_term, word_term

logger = logging.getLogger(__name__)

SCALAR_SORT = "K"
VECTOR_SORT = "E"


@dataclass(frozen=True)
class TensorSpace:
    """Generators, scalar field and scalar indexing shared by a family of term indexings"""
    alphabet: Alphabet
    field: NumberField
    scalars: Indexing

    def basis_vector(self, word: Word) -> TensorVector:
        return TensorVector.basis(self.field, word)

    @property
    def zero_index(self) -> int:
        return self.scalars.locate(self.field.zero)

    @property
    def unit_index(self) -> int:
        return self.scalars.locate(self.field.one)


def space_of(indexing: TermIndexing) -> TensorSpace:
    try:
        return indexing.structure.spec.metadata["space"]
    except KeyError:
        raise SortMismatchError(f"{indexing.carrier} is not a tensor-space indexing") from None


def _summand(scalar_index: int, word: Word, alphabet: Alphabet) -> TermTree:
    return node("dot", numeral(scalar_index), word_term(word, alphabet))


def tv_to_term(v: TensorVector, scalars: Indexing, alphabet: Alphabet,
               budget: Optional[SearchBudget] = None) -> TermTree:
    """Admitted term of v; scalars are numerals of their least index"""
    if v.is_zero():
        return _summand(scalars.index_of(v.field.zero, budget), (alphabet.generators[0],), alphabet)
    return sum_term([
        _summand(scalars.index_of(c, budget), word, alphabet) for word, c in v.items(alphabet)
    ])


def term_to_tv(tree: TermTree, space: TensorSpace) -> TensorVector:
    """Denotation of any tensor term built from generators, plus, dot and tensor"""
    if tree.arity == 0:
        letter = space.alphabet.letter_of(tree.symbol)
        if letter is None:
            raise SortMismatchError(f"{tree.symbol} is not a generator")
        return space.basis_vector((letter,))
    if tree.symbol == "plus" and tree.arity == 2:
        return tv_add(term_to_tv(tree.children[0], space), term_to_tv(tree.children[1], space))
    if tree.symbol == TENSOR and tree.arity == 2:
        return tv_tensor(term_to_tv(tree.children[0], space), term_to_tv(tree.children[1], space))
    if tree.symbol == "dot" and tree.arity == 2:
        x = numeral_value(tree.children[0])
        if x is None:
            raise SortMismatchError(f"{tree.children[0]} is not a scalar numeral")
        return tv_scale(space.scalars.decode(x), term_to_tv(tree.children[1], space))
    raise SortMismatchError(f"{tree.symbol} does not build vectors")


def canonical_summands(tree: TermTree, space: TensorSpace) -> Optional[List[Tuple[int, Word]]]:
    """(λ, word) pairs of an admitted tensor term, otherwise None"""
    pairs = []
    for summand in summands_of(tree):
        if summand.symbol != "dot" or summand.arity != 2:
            return None
        scalar_index = numeral_value(summand.children[0])
        word = word_of_term(summand.children[1], space.alphabet)
        if scalar_index is None or word is None:
            return None
        pairs.append((scalar_index, word))

    ranks = [space.alphabet.rank(word) for _, word in pairs]
    values = [space.scalars.decode(scalar_index) for scalar_index, _ in pairs]
    if any(space.scalars.locate(value) != scalar_index for value, (scalar_index, _) in zip(values, pairs)):
        return None
    if len(pairs) == 1 and values[0].is_zero():
        return pairs if pairs[0][1] == (space.alphabet.generators[0],) else None
    if any(value.is_zero() for value in values):
        return None
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        return None
    return pairs


def vector_at(z: int, space: TensorSpace) -> TensorVector:
    """
    z-th vector of the enumeration: 0 is the zero vector; otherwise each entry
    h of decode_list(z) is cantor(gap, c), the word rank advances by gap + 1
    and the coefficient is the (c + 1)-th scalar
    """
    if z == 0:
        return TensorVector.zero(space.field)
    items = []
    rank = -1
    for head in decode_list(z):
        gap, c = uncantor(head)
        rank += gap + 1
        items.append((space.alphabet.word_of_rank(rank), space.scalars.decode(space.scalars.enumerate(c + 1))))
    return TensorVector.from_items(space.field, items)


def _vector_constants(space: TensorSpace) -> Tuple[ConstantSpec, ...]:
    return tuple(
        ConstantSpec(space.alphabet.symbol(letter), VECTOR_SORT, space.basis_vector((letter,)))
        for letter in space.alphabet.generators
    )


def tensor_indexing(alphabet: Alphabet, scalar_structure: IndexedStructure,
                    field: NumberField, name: Optional[str] = None) -> TermIndexing:
    """
    Term indexing of the tensor space over `alphabet`

    Args:
        alphabet: Generators, in the order that fixes word ranks
        scalar_structure: Compact field structure with sort K, operations add, mul
            and an identity enumerator starting at zero
        field: The scalar field
    """
    scalars = scalar_structure.sort(SCALAR_SORT)
    space = TensorSpace(alphabet, field, scalars)
    vector_pair = (VECTOR_SORT, VECTOR_SORT)

    sort = SortSpec(
        VECTOR_SORT,
        enumerate_terms=lambda z: tv_to_term(vector_at(z, space), scalars, alphabet),
        recognizer=lambda tree: canonical_summands(tree, space) is not None,
        equality=lambda u, v: tv_eq(u, v) == 1,
        canonical_term=lambda v: tv_to_term(v, scalars, alphabet),
        describe=lambda v: format_state(v, alphabet),
    )
    structure = build_term_indexing(GenerativeSpec(
        name=name or f"tensor[{''.join(alphabet.generators)}]({field.name})",
        sorts=(sort,),
        constants=_vector_constants(space),
        operations=(
            OperationSpec("plus", vector_pair, VECTOR_SORT, tv_add),
            OperationSpec("dot", (SCALAR_SORT, VECTOR_SORT), VECTOR_SORT, tv_scale),
            OperationSpec(TENSOR, vector_pair, VECTOR_SORT, tv_tensor),
        ),
        substructure=scalar_structure,
        metadata={"space": space},
    ))
    logger.debug("tensor indexing over %s with labels %s", alphabet.generators, structure.table)
    return structure.indexing(VECTOR_SORT)


def dense_vector_term(v: TensorVector, space: TensorSpace) -> TermTree:
    return sum_term([
        node("dot", numeral(space.scalars.locate(v.coefficient((letter,)))), leaf(space.alphabet.symbol(letter)))
        for letter in space.alphabet.generators
    ])


def dense_coefficients(tree: TermTree, space: TensorSpace) -> Optional[List[int]]:
    summands = summands_of(tree)
    if len(summands) != space.alphabet.size:
        return None
    positions = []
    for letter, summand in zip(space.alphabet.generators, summands):
        if summand.symbol != "dot" or summand.arity != 2 or summand.children[1] != leaf(space.alphabet.symbol(letter)):
            return None
        position = numeral_value(summand.children[0])
        if position is None or space.scalars.locate(space.scalars.decode(position)) != position:
            return None
        positions.append(position)
    return positions


def vector_space_indexing(alphabet: Alphabet, scalar_structure: IndexedStructure,
                          field: NumberField, name: Optional[str] = None) -> TermIndexing:
    """
    Finite-dimensional space with basis the generators and dense terms
    S^λ0(0).e0 + (S^λ1(0).e1 + ...); no tensor operation
    """
    scalars = scalar_structure.sort(SCALAR_SORT)
    space = TensorSpace(alphabet, field, scalars)

    def vector_of_positions(positions: Sequence[int]) -> TensorVector:
        return TensorVector.from_items(field, [
            ((letter,), scalars.decode(scalars.enumerate(z)))
            for letter, z in zip(alphabet.generators, positions)
        ])

    sort = SortSpec(
        VECTOR_SORT,
        enumerate_terms=lambda z: dense_vector_term(vector_of_positions(decode_tuple(z, alphabet.size)), space),
        recognizer=lambda tree: dense_coefficients(tree, space) is not None,
        equality=lambda u, v: tv_eq(u, v) == 1,
        canonical_term=lambda v: dense_vector_term(v, space),
        describe=lambda v: format_state(v, alphabet),
    )
    structure = build_term_indexing(GenerativeSpec(
        name=name or f"space[{''.join(alphabet.generators)}]({field.name})",
        sorts=(sort,),
        constants=_vector_constants(space),
        operations=(
            OperationSpec("plus", (VECTOR_SORT, VECTOR_SORT), VECTOR_SORT, tv_add),
            OperationSpec("dot", (SCALAR_SORT, VECTOR_SORT), VECTOR_SORT, tv_scale),
        ),
        substructure=scalar_structure,
        metadata={"space": space},
    ))
    return structure.indexing(VECTOR_SORT)
