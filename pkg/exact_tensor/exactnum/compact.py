"""
Compact bijective indexing of a number field and its ⟨L, +, ×⟩ structure

A coordinate vector (λ0, ..., λ_{d-1}) is coded through the rational
positions i_k of its coordinates: for d = 1 the code is i0; otherwise it is
2^c (2 i0 + 1) - 1 with c = encode_tuple(i1, ..., i_{d-1}). Rational
elements therefore sit at the even codes 2 i0, and 0 is at code 0.
"""

from fractions import Fraction
from typing import Any

from ..encoding.pairing import decode_tuple, encode_tuple
from ..indexing.core import IndexedStructure, Indexing, Operation
from .number_field import FieldElement, NumberField, format_element, nf_add, nf_eq, nf_mul
from .rational import rational_at, rational_indexing, rational_position

FIELD_SORT = "L"


def field_code(a: FieldElement) -> int:
    positions = [rational_position(c) for c in a.coords]
    if len(positions) == 1:
        return positions[0]
    rest = encode_tuple(positions[1:])
    return (1 << rest) * (2 * positions[0] + 1) - 1


def field_element_at(field: NumberField, code: int) -> FieldElement:
    if isinstance(code, bool) or not isinstance(code, int) or code < 0:
        raise ValueError(f"not an index: {code!r}")
    if field.degree == 1:
        return FieldElement(field, (rational_at(code),))
    shifted = code + 1
    rest = (shifted & -shifted).bit_length() - 1
    first = ((shifted >> rest) - 1) // 2
    positions = (first,) + decode_tuple(rest, field.degree - 1)
    return FieldElement(field, tuple(rational_at(i) for i in positions))


def field_indexing(field: NumberField, carrier: str = FIELD_SORT) -> Indexing:
    """Bijective indexing of L; the enumerator is the identity"""
    def natural(z: int) -> int:
        if isinstance(z, bool) or not isinstance(z, int) or z < 0:
            raise ValueError(f"not an index: {z!r}")
        return z

    def locate(value: Any) -> int:
        if not isinstance(value, FieldElement):
            value = field.from_rational(value)
        return field_code(value)

    return Indexing(
        carrier,
        enumerator=natural,
        decoder=lambda x: field_element_at(field, x),
        equality=lambda a, b: bool(nf_eq(a, b)),
        locator=locate,
        describe=format_element,
    )


def field_structure(field: NumberField, sort: str = FIELD_SORT) -> IndexedStructure:
    """⟨L, add, mul⟩ with constants zero and one; operations decode, compute and re-locate"""
    indexing = field_indexing(field, sort)

    def lift(operation):
        def implementation(x: int, y: int) -> int:
            return indexing.locate(operation(indexing.decode(x), indexing.decode(y)))
        return implementation

    return IndexedStructure(
        field.name,
        {sort: indexing},
        [
            Operation("add", (sort, sort), sort, lift(nf_add), nf_add),
            Operation("mul", (sort, sort), sort, lift(nf_mul), nf_mul),
        ],
        {"zero": (sort, field_code(field.zero)), "one": (sort, field_code(field.one))},
    )


def rational_structure(sort: str = "K") -> IndexedStructure:
    """⟨ℚ, add, mul⟩ with constants zero and one over the height order"""
    indexing = rational_indexing(sort)

    def lift(operation):
        def implementation(x: int, y: int) -> int:
            return rational_position(operation(rational_at(x), rational_at(y)))
        return implementation

    add = lambda a, b: a + b
    mul = lambda a, b: a * b
    return IndexedStructure(
        "Q",
        {sort: indexing},
        [
            Operation("add", (sort, sort), sort, lift(add), add),
            Operation("mul", (sort, sort), sort, lift(mul), mul),
        ],
        {"zero": (sort, rational_position(Fraction(0))), "one": (sort, rational_position(Fraction(1)))},
    )
