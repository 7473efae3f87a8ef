"""
Sparse vectors over tensor-word bases with exact field coefficients
"""

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

import numpy as np

from ..error_handling.exceptions import FieldMismatchError
from ..exactnum.number_field import FieldElement, NumberField, nf_add, nf_mul
from ..exactnum.rational import RationalLike
from .words import QUBIT_ALPHABET, Alphabet, Word

Scalar = Union[FieldElement, RationalLike]


@dataclass(frozen=True, eq=False)
class TensorVector:
    """Finite map word -> nonzero coefficient"""
    field: NumberField
    terms: Mapping[Word, FieldElement]

    def __post_init__(self):
        pruned: Dict[Word, FieldElement] = {}
        for word, coefficient in self.terms.items():
            if not (coefficient.field is self.field or coefficient.field == self.field):
                raise FieldMismatchError(f"coefficient of {word} is not in {self.field.name}")
            if not coefficient.is_zero():
                pruned[tuple(word)] = coefficient
        object.__setattr__(self, "terms", MappingProxyType(pruned))

    @classmethod
    def zero(cls, field: NumberField) -> 'TensorVector':
        return cls(field, {})

    @classmethod
    def basis(cls, field: NumberField, word: Word, coefficient: Optional[Scalar] = None) -> 'TensorVector':
        value = field.one if coefficient is None else _scalar(field, coefficient)
        return cls(field, {tuple(word): value})

    @classmethod
    def from_items(cls, field: NumberField, items: Iterable[Tuple[Word, Scalar]]) -> 'TensorVector':
        """Sum of coefficient·word; repeated words accumulate"""
        terms: Dict[Word, FieldElement] = {}
        for word, coefficient in items:
            word = tuple(word)
            value = _scalar(field, coefficient)
            terms[word] = nf_add(terms[word], value) if word in terms else value
        return cls(field, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word) -> FieldElement:
        return self.terms.get(tuple(word), self.field.zero)

    def items(self, alphabet: Optional[Alphabet] = None) -> Iterator[Tuple[Word, FieldElement]]:
        """Terms in word-rank order"""
        key = alphabet.rank if alphabet is not None else (lambda w: (len(w), w))
        for word in sorted(self.terms, key=key):
            yield word, self.terms[word]

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: 'TensorVector') -> 'TensorVector':
        return tv_add(self, other)

    def __sub__(self, other: 'TensorVector') -> 'TensorVector':
        return tv_add(self, tv_scale(Fraction(-1), other))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TensorVector) and tv_eq(self, other) == 1

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        from .text_format import format_state
        return format_state(self)

    def __repr__(self) -> str:
        return f"TensorVector({self.field.name}, {self})"


def _scalar(field: NumberField, s: Scalar) -> FieldElement:
    if isinstance(s, FieldElement):
        if not (s.field is field or s.field == field):
            raise FieldMismatchError(f"scalar from {s.field.name} used over {field.name}")
        return s
    return field.from_rational(s)


def _check_same_field(u: TensorVector, v: TensorVector) -> None:
    if not (u.field is v.field or u.field == v.field):
        raise FieldMismatchError(f"vectors over {u.field.name} and {v.field.name}")


def tv_add(u: TensorVector, v: TensorVector) -> TensorVector:
    _check_same_field(u, v)
    terms = dict(u.terms)
    for word, coefficient in v.terms.items():
        terms[word] = nf_add(terms[word], coefficient) if word in terms else coefficient
    return TensorVector(u.field, terms)


def tv_scale(s: Scalar, v: TensorVector) -> TensorVector:
    s = _scalar(v.field, s)
    if s.is_zero():
        return TensorVector.zero(v.field)
    return TensorVector(v.field, {word: nf_mul(s, c) for word, c in v.terms.items()})


def tv_tensor(u: TensorVector, v: TensorVector) -> TensorVector:
    """Bilinear product; words concatenate"""
    _check_same_field(u, v)
    terms: Dict[Word, FieldElement] = {}
    for w, a in u.terms.items():
        for x, b in v.terms.items():
            word = w + x
            product = nf_mul(a, b)
            terms[word] = nf_add(terms[word], product) if word in terms else product
    return TensorVector(u.field, terms)


def tv_eq(u: TensorVector, v: TensorVector) -> int:
    _check_same_field(u, v)
    return int(dict(u.terms) == dict(v.terms))


def random_vector(field: NumberField, rng: np.random.Generator,
                  alphabet: Alphabet = QUBIT_ALPHABET, max_terms: int = 3,
                  max_length: int = 3, bound: int = 3) -> TensorVector:
    """Small random vector for property checks"""
    items = []
    for _ in range(int(rng.integers(0, max_terms + 1))):
        length = int(rng.integers(1, max_length + 1))
        word = tuple(alphabet.generators[int(k)] for k in rng.integers(0, alphabet.size, size=length))
        coords = [Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))
                  for _ in range(field.degree)]
        items.append((word, field.element(coords)))
    return TensorVector.from_items(field, items)
