"""
Term indexing of a finite-degree extension L of ℚ

Elements are written densely as S^λ0(0).e0 + (S^λ1(0).e1 + ...), where λp is
the compact rational index of the p-th coordinate. The index-level product
follows the structure constants through the scalar op-table:
λ''_r = Σ λp ×̂ λ'q ×̂ μ_{p,q,r}, with μ_{p,q,r} the index of m_{p,q,r}.
"""

from typing import List, Optional, Sequence

from ..encoding.pairing import decode_tuple
from ..encoding.trees import TermTree, encode_tree, leaf, node, numeral, numeral_value
from ..indexing.terms import (
    ConstantSpec, GenerativeSpec, OperationSpec, SortSpec, TermStructure,
    build_term_indexing, sum_term, summands_of,
)
from .compact import rational_structure
from .number_field import NumberField, format_element, nf_add, nf_mul, nf_scale
from .rational import rational_position

SCALAR_SORT = "K"
EXTENSION_SORT = "L"


def _basis_symbol(p: int) -> str:
    return f"e{p}"


def dense_term(positions: Sequence[int]) -> TermTree:
    return sum_term([
        node("dot", numeral(position), leaf(_basis_symbol(p))) for p, position in enumerate(positions)
    ])


def dense_positions(tree: TermTree, degree: int) -> Optional[List[int]]:
    """Coordinate indices λ0..λ_{d-1} of an admitted dense term, otherwise None"""
    summands = summands_of(tree)
    if len(summands) != degree:
        return None
    positions = []
    for p, summand in enumerate(summands):
        if summand.symbol != "dot" or summand.arity != 2 or summand.children[1] != leaf(_basis_symbol(p)):
            return None
        position = numeral_value(summand.children[0])
        if position is None:
            return None
        positions.append(position)
    return positions


def _canonical_product(field: NumberField):
    def factory(structure: TermStructure):
        scalars = structure.substructure
        add = scalars.operation("add").implementation
        mul = scalars.operation("mul").implementation
        zero = scalars.constant("zero")
        mu = {(p, q, r): rational_position(m) for p, q, r, m in field.products}
        indexing = structure.sort(EXTENSION_SORT)

        def coefficients(x: int) -> List[int]:
            positions = dense_positions(indexing.term_of(x), field.degree)
            if positions is None:
                positions = dense_positions(indexing.term_of(indexing.locate(indexing.decode(x))), field.degree)
            return positions

        def implementation(x: int, y: int) -> int:
            left, right = coefficients(x), coefficients(y)
            result = [zero] * field.degree
            for (p, q, r), m in mu.items():
                result[r] = add(result[r], mul(mul(left[p], right[q]), m))
            return encode_tree(structure.table, dense_term(result))

        return implementation
    return factory


def extension_structure(field: NumberField, canonical_product: bool = True) -> TermStructure:
    """
    ⟨K, L, +, ·, ×⟩ over the compact rational scalars

    With canonical_product the product of two indices is the admitted term of
    the product, computed coordinatewise through the scalar op-table; otherwise
    it is the term times(x, y).
    """
    degree = field.degree

    sort = SortSpec(
        EXTENSION_SORT,
        enumerate_terms=lambda z: dense_term(decode_tuple(z, degree)),
        recognizer=lambda tree: dense_positions(tree, degree) is not None,
        equality=lambda a, b: a == b,
        canonical_term=lambda a: dense_term([rational_position(c) for c in a.coords]),
        describe=format_element,
    )
    return build_term_indexing(GenerativeSpec(
        name=f"ext({field.name})",
        sorts=(sort,),
        constants=tuple(
            ConstantSpec(_basis_symbol(p), EXTENSION_SORT, field.basis(p)) for p in range(degree)
        ),
        operations=(
            OperationSpec("plus", (EXTENSION_SORT, EXTENSION_SORT), EXTENSION_SORT, nf_add),
            OperationSpec("dot", (SCALAR_SORT, EXTENSION_SORT), EXTENSION_SORT,
                          lambda s, a: nf_scale(a, s)),
            OperationSpec("times", (EXTENSION_SORT, EXTENSION_SORT), EXTENSION_SORT, nf_mul,
                          implementation=_canonical_product(field) if canonical_product else None),
        ),
        substructure=rational_structure(SCALAR_SORT),
        metadata={"field": field},
    ))
