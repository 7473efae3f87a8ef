"""
Exact rationals in canonical form and the compact indexing of ℚ

Rationals are fractions.Fraction values, which keep numerator and
denominator coprime with a positive denominator. The compact indexing lists
ℚ by height |a| + b: 0 first, then for each height the numerators in
increasing order, each as +a/b followed by -a/b.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from ..error_handling.exceptions import FieldDivisionByZeroError
from ..indexing.core import Indexing

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_MIN_TABLE = 64

_OPERATIONS = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "−": lambda a, b: a - b,
    "*": lambda a, b: a * b,
    "×": lambda a, b: a * b,
}


def normalize(numerator: int, denominator: int) -> Fraction:
    """Canonical form: coprime, positive denominator"""
    if denominator == 0:
        raise FieldDivisionByZeroError("a rational cannot have denominator 0")
    return Fraction(numerator, denominator)


def as_rational(value: RationalLike) -> Fraction:
    """Accepts Fractions, ints and text such as '-3/2'"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise FieldDivisionByZeroError(f"{value!r} has denominator 0") from None
    raise TypeError(f"cannot read {value!r} as a rational")


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """a op b for op in + - × /"""
    if op in ("/", "÷"):
        if b == 0:
            raise FieldDivisionByZeroError(f"{a} / 0")
        return a / b
    try:
        return _OPERATIONS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None


def format_rational(q: Fraction) -> str:
    return str(q)


@lru_cache(maxsize=None)
def height_starts(limit: int) -> np.ndarray:
    """
    Read-only table: entry s is the position of the first rational of height
    s, for s up to limit + 1
    """
    phi = np.arange(limit + 2, dtype=np.int64)
    for p in range(2, limit + 2):
        if phi[p] == p:
            phi[p::p] -= phi[p::p] // p
    counts = 2 * phi
    counts[:2] = 0
    # starts[s] = 1 + 2 * sum_{t=2}^{s-1} phi(t)
    starts = np.ones(limit + 2, dtype=np.int64)
    starts[1:] += np.cumsum(counts)[:-1]
    starts.setflags(write=False)
    logger.debug("height table built up to %d", limit)
    return starts


def _table_for_height(height: int) -> np.ndarray:
    # limits are _MIN_TABLE times a power of two
    limit = _MIN_TABLE
    while limit < height:
        limit *= 2
    return height_starts(limit)


def _table_for_position(z: int) -> np.ndarray:
    limit = _MIN_TABLE
    starts = height_starts(limit)
    while int(starts[-1]) <= z:
        limit *= 2
        starts = height_starts(limit)
    return starts


def _coprime_numerators(height: int) -> np.ndarray:
    candidates = np.arange(1, height, dtype=np.int64)
    return candidates[np.gcd(candidates, height) == 1]


def rational_at(z: int) -> Fraction:
    """The rational at position z of the height order"""
    if isinstance(z, bool) or not isinstance(z, int) or z < 0:
        raise ValueError(f"positions are natural numbers, got {z!r}")
    if z == 0:
        return Fraction(0)
    starts = _table_for_position(z)
    height = int(np.searchsorted(starts, z, side="right")) - 1
    offset = z - int(starts[height])
    numerator = int(_coprime_numerators(height)[offset // 2])
    value = Fraction(numerator, height - numerator)
    return -value if offset % 2 else value


def rational_position(q: Fraction) -> int:
    """Inverse of rational_at"""
    q = as_rational(q)
    if q == 0:
        return 0
    a, b = abs(q.numerator), q.denominator
    height = a + b
    rank = int(np.count_nonzero(_coprime_numerators(height) < a))
    return int(_table_for_height(height)[height]) + 2 * rank + (1 if q < 0 else 0)


def rational_indexing(carrier: str = "Q") -> Indexing:
    """Bijective indexing of ℚ by the height order; the enumerator is the identity"""
    def natural(z: int) -> int:
        if isinstance(z, bool) or not isinstance(z, int) or z < 0:
            raise ValueError(f"not an index: {z!r}")
        return z

    return Indexing(
        carrier,
        enumerator=natural,
        decoder=rational_at,
        equality=lambda a, b: a == b,
        locator=rational_position,
        describe=format_rational,
    )
