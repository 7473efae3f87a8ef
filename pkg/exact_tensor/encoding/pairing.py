"""
The pairing function and the list and tuple codes built on it
"""

from math import isqrt
from typing import List, Sequence, Tuple

from ..error_handling.exceptions import NotInImageError


def _check_natural(value: int, name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a natural number, got {value!r}")


def pair(n: int, p: int) -> int:
    """(n+p)(n+p+1)/2 + n + 1; a bijection from ℕ² onto ℕ∖{0}"""
    _check_natural(n, "n")
    _check_natural(p, "p")
    s = n + p
    return s * (s + 1) // 2 + n + 1


def unpair(m: int) -> Tuple[int, int]:
    """Inverse of pair; 0 has no preimage"""
    _check_natural(m, "m")
    if m == 0:
        raise NotInImageError("0 is not in the image of the pairing function")

    k = m - 1
    w = (isqrt(8 * k + 1) - 1) // 2
    n = k - w * (w + 1) // 2
    return n, w - n


def cantor(n: int, p: int) -> int:
    """Shifted pairing, a bijection ℕ² → ℕ"""
    return pair(n, p) - 1


def uncantor(m: int) -> Tuple[int, int]:
    _check_natural(m, "m")
    return unpair(m + 1)


def encode_tuple(values: Sequence[int]) -> int:
    """Bijection ℕ^k → ℕ for a fixed k ≥ 1, right-nested shifted pairs"""
    if not values:
        raise ValueError("cannot encode an empty tuple")
    code = values[-1]
    _check_natural(code, "tuple component")
    for value in reversed(values[:-1]):
        code = cantor(value, code)
    return code


def decode_tuple(code: int, length: int) -> Tuple[int, ...]:
    if length < 1:
        raise ValueError("tuple length must be at least 1")
    _check_natural(code, "code")
    values = []
    for _ in range(length - 1):
        head, code = uncantor(code)
        values.append(head)
    values.append(code)
    return tuple(values)


def encode_list(values: Sequence[int]) -> int:
    """Bijection between finite lists of naturals and ℕ; [] is 0"""
    code = 0
    for value in reversed(values):
        code = pair(value, code)
    return code


def decode_list(code: int) -> List[int]:
    _check_natural(code, "code")
    values = []
    while code != 0:
        head, code = unpair(code)
        values.append(head)
    return values
