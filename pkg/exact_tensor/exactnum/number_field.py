"""
Finite-degree extensions of ℚ described by structure constants

An element of L is a coordinate vector (λ0, ..., λ_{d-1}) over the basis
e0 = 1, e1, ..., e_{d-1}. Multiplication is e_p × e_q = Σ_r m[p][q][r] e_r.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, Poly, QQ, Rational as SymRational, Symbol

from ..error_handling.exceptions import (
    FieldDivisionByZeroError, FieldMismatchError, InvalidFieldError, MissingConjugationError,
)
from .rational import RationalLike, as_rational

logger = logging.getLogger(__name__)

_X = Symbol("x")

Coords = Tuple[Fraction, ...]
StructureConstants = Tuple[Tuple[Tuple[Fraction, ...], ...], ...]


def _to_fraction(value) -> Fraction:
    """sympy rational -> Fraction"""
    value = SymRational(value)
    return Fraction(int(value.p), int(value.q))


def _poly(coords: Sequence[Fraction]) -> Poly:
    """Polynomial Σ c_k x^k from constant-first coordinates"""
    return Poly([SymRational(c.numerator, c.denominator) for c in reversed(coords)], _X, domain=QQ)


def _coords_of(poly: Poly, degree: int) -> Coords:
    return tuple(_to_fraction(poly.coeff_monomial(_X ** k)) for k in range(degree))


class NumberField:
    """
    Field descriptor: structure constants, optional conjugation table and
    numeric embedding (display only)

    Args:
        name: Display name
        constants: d×d×d nested sequence, constants[p][q][r] = m_{p,q,r}
        conjugation: Image of each basis element under the distinguished automorphism
        embedding: Complex approximations of the basis elements
        min_poly: Constant-first coefficients of the defining polynomial, if known
    """

    def __init__(self,
                 name: str,
                 constants: Sequence[Sequence[Sequence[RationalLike]]],
                 conjugation: Optional[Sequence[Sequence[RationalLike]]] = None,
                 embedding: Optional[Sequence[complex]] = None,
                 min_poly: Optional[Sequence[RationalLike]] = None):
        degree = len(constants)
        if degree < 1:
            raise InvalidFieldError("a field needs degree at least 1")
        for p, row in enumerate(constants):
            if len(row) != degree or any(len(entry) != degree for entry in row):
                raise InvalidFieldError(f"structure constants row {p} is not {degree}×{degree}")

        self.name = name
        self.degree = degree
        self.constants: StructureConstants = tuple(
            tuple(tuple(as_rational(m) for m in entry) for entry in row) for row in constants
        )
        self.products: Tuple[Tuple[int, int, int, Fraction], ...] = tuple(
            (p, q, r, m)
            for p, row in enumerate(self.constants)
            for q, entry in enumerate(row)
            for r, m in enumerate(entry)
            if m != 0
        )

        self.conjugation: Optional[Tuple[Coords, ...]] = None
        if conjugation is not None:
            if len(conjugation) != degree or any(len(image) != degree for image in conjugation):
                raise InvalidFieldError("conjugation table must list d images of length d")
            self.conjugation = tuple(tuple(as_rational(c) for c in image) for image in conjugation)

        self.embedding: Optional[Tuple[complex, ...]] = None
        if embedding is not None:
            if len(embedding) != degree:
                raise InvalidFieldError("embedding must give one value per basis element")
            self.embedding = tuple(complex(e) for e in embedding)

        self.min_poly: Optional[Coords] = (
            tuple(as_rational(c) for c in min_poly) if min_poly is not None else None
        )

    def element(self, coords: Iterable[RationalLike]) -> 'FieldElement':
        return FieldElement(self, tuple(as_rational(c) for c in coords))

    @cached_property
    def zero(self) -> 'FieldElement':
        return FieldElement(self, (Fraction(0),) * self.degree)

    @cached_property
    def one(self) -> 'FieldElement':
        return FieldElement(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    def from_rational(self, q: RationalLike) -> 'FieldElement':
        return FieldElement(self, (as_rational(q),) + (Fraction(0),) * (self.degree - 1))

    def basis(self, p: int) -> 'FieldElement':
        return FieldElement(self, tuple(Fraction(int(k == p)) for k in range(self.degree)))

    def validate(self) -> None:
        """Raise InvalidFieldError unless e0 is a two-sided unit"""
        for q in range(self.degree):
            e_q = self.basis(q)
            if nf_mul(self.one, e_q) != e_q or nf_mul(e_q, self.one) != e_q:
                raise InvalidFieldError(f"e0 is not a unit for e{q} in {self.name}")

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (isinstance(other, NumberField)
                and self.constants == other.constants
                and self.conjugation == other.conjugation)

    def __hash__(self) -> int:
        return hash((self.constants, self.conjugation))

    def __repr__(self) -> str:
        return f"NumberField({self.name}, degree={self.degree})"


@dataclass(frozen=True, eq=False)
class FieldElement:
    """Coordinates of an element of a number field"""
    field: NumberField
    coords: Coords

    def __post_init__(self):
        if len(self.coords) != self.field.degree:
            raise InvalidFieldError(
                f"{self.field.name} elements have {self.field.degree} coordinates, got {len(self.coords)}"
            )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def approx(self) -> complex:
        """Numeric value through the field's embedding (display only)"""
        if self.field.embedding is None:
            if self.field.degree == 1:
                return complex(float(self.coords[0]))
            raise InvalidFieldError(f"{self.field.name} has no numeric embedding")
        return complex(sum(float(c) * e for c, e in zip(self.coords, self.field.embedding)))

    def __add__(self, other: 'FieldElement') -> 'FieldElement':
        return nf_add(self, other)

    def __sub__(self, other: 'FieldElement') -> 'FieldElement':
        return nf_sub(self, other)

    def __mul__(self, other: 'FieldElement') -> 'FieldElement':
        return nf_mul(self, other)

    def __neg__(self) -> 'FieldElement':
        return nf_scale(self, Fraction(-1))

    def __truediv__(self, other: 'FieldElement') -> 'FieldElement':
        return nf_mul(self, nf_inverse(other))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldElement) and _same_field(self, other) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"FieldElement({self.field.name}, {format_element(self)})"


def _same_field(a: FieldElement, b: FieldElement) -> bool:
    return a.field is b.field or a.field == b.field


def _check_same_field(a: FieldElement, b: FieldElement) -> None:
    if not _same_field(a, b):
        raise FieldMismatchError(f"{a.field.name} and {b.field.name} are different fields")


def nf_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return FieldElement(a.field, tuple(x + y for x, y in zip(a.coords, b.coords)))


def nf_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return FieldElement(a.field, tuple(x - y for x, y in zip(a.coords, b.coords)))


def nf_scale(a: FieldElement, s: RationalLike) -> FieldElement:
    s = as_rational(s)
    return FieldElement(a.field, tuple(s * x for x in a.coords))


def nf_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """λ''_r = Σ_{p,q} λ_p λ'_q m_{p,q,r}"""
    _check_same_field(a, b)
    result = [Fraction(0)] * a.field.degree
    for p, q, r, m in a.field.products:
        if a.coords[p] and b.coords[q]:
            result[r] += a.coords[p] * b.coords[q] * m
    return FieldElement(a.field, tuple(result))


def nf_eq(a: FieldElement, b: FieldElement) -> int:
    _check_same_field(a, b)
    return int(a.coords == b.coords)


def multiplication_matrix(a: FieldElement) -> Matrix:
    """Matrix of y ↦ a × y; column q holds the coordinates of a × e_q"""
    d = a.field.degree
    entries = [[Fraction(0)] * d for _ in range(d)]
    for p, q, r, m in a.field.products:
        entries[r][q] += a.coords[p] * m
    return Matrix(d, d, lambda r, q: SymRational(entries[r][q].numerator, entries[r][q].denominator))


def nf_inverse(a: FieldElement) -> FieldElement:
    """Solve (a ×) y = e0 exactly"""
    if a.is_zero():
        raise FieldDivisionByZeroError(f"the zero element of {a.field.name} has no inverse")
    unit = Matrix([1] + [0] * (a.field.degree - 1))
    try:
        solution = multiplication_matrix(a).LUsolve(unit)
    except ValueError as e:
        raise InvalidFieldError(f"multiplication by {format_element(a)} is singular: {e}") from None
    inverse = FieldElement(a.field, tuple(_to_fraction(v) for v in solution))
    if nf_mul(a, inverse) != a.field.one:
        raise InvalidFieldError(f"{format_element(a)} has no two-sided inverse in {a.field.name}")
    return inverse


def nf_conj(a: FieldElement) -> FieldElement:
    table = a.field.conjugation
    if table is None:
        raise MissingConjugationError(f"{a.field.name} has no conjugation table")
    result = [Fraction(0)] * a.field.degree
    for p, coefficient in enumerate(a.coords):
        if coefficient:
            for r, c in enumerate(table[p]):
                result[r] += coefficient * c
    return FieldElement(a.field, tuple(result))


def polynomial_product(a: FieldElement, b: FieldElement) -> FieldElement:
    """Independent multiplication: product of coordinate polynomials modulo the minimal polynomial"""
    _check_same_field(a, b)
    if a.field.min_poly is None:
        raise InvalidFieldError(f"{a.field.name} has no minimal polynomial")
    remainder = (_poly(a.coords) * _poly(b.coords)).rem(_poly(a.field.min_poly))
    return FieldElement(a.field, _coords_of(remainder, a.field.degree))


def _reduce_power(k: int, modulus: Poly, degree: int) -> Coords:
    return _coords_of(Poly(_X ** k, _X, domain=QQ).rem(modulus), degree)


def choose_root(roots: Sequence[complex]) -> complex:
    """Largest real part, then largest imaginary part"""
    return max(roots, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def build_field_from_min_poly(coeffs: Sequence[RationalLike],
                              conj_root_power: Optional[int] = None,
                              name: Optional[str] = None) -> NumberField:
    """
    Field ℚ[x]/(f) on the power basis 1, α, ..., α^{d-1}

    Args:
        coeffs: Coefficients of f, constant first; f must be monic
        conj_root_power: k such that conjugation maps α to α^k
        name: Display name
    """
    coeffs = [as_rational(c) for c in coeffs]
    degree = len(coeffs) - 1
    if degree < 1:
        raise InvalidFieldError("the minimal polynomial must have degree at least 1")
    if coeffs[-1] != 1:
        raise InvalidFieldError(f"the minimal polynomial must be monic, leading coefficient is {coeffs[-1]}")

    modulus = _poly(coeffs)
    powers = [_reduce_power(k, modulus, degree) for k in range(2 * degree - 1)]
    constants = [[list(powers[p + q]) for q in range(degree)] for p in range(degree)]

    conjugation = None
    if conj_root_power is not None:
        if conj_root_power < 0:
            raise InvalidFieldError("conjugation root power must be a natural number")
        conjugation = [_reduce_power(conj_root_power * p, modulus, degree) for p in range(degree)]

    highest_first = [float(c) for c in reversed(coeffs)]
    root = choose_root([complex(z) for z in np.roots(highest_first)])
    embedding = [root ** p for p in range(degree)]

    name = name or "Q[x]/(" + " ".join(str(c) for c in coeffs) + ")"
    logger.debug("built %s with %d nonzero structure constants", name,
                 sum(1 for row in constants for entry in row for m in entry if m))
    field = NumberField(name, constants, conjugation, embedding, coeffs)
    field.validate()
    return field


def format_element(a: FieldElement, approximate: bool = False, places: int = 6) -> str:
    """(0, 1/2, 0, -1/2), optionally followed by ≈ and the embedded value"""
    text = "(" + ", ".join(str(c) for c in a.coords) + ")"
    if approximate and (a.field.embedding is not None or a.field.degree == 1):
        text += " ≈ " + format_complex(a.approx(), places)
    return text


def format_complex(z: complex, places: int = 6) -> str:
    real = f"{z.real:.{places}f}"
    if abs(z.imag) < 10 ** -places:
        return real
    sign = "+" if z.imag >= 0 else "-"
    return f"{real}{sign}{abs(z.imag):.{places}f}i"
