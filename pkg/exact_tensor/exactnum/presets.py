"""
Prebuilt number fields
"""

from functools import lru_cache
from typing import Callable, Dict

from .number_field import NumberField, build_field_from_min_poly


@lru_cache(maxsize=None)
def rationals() -> NumberField:
    return build_field_from_min_poly([0, 1], conj_root_power=1, name="Q")


@lru_cache(maxsize=None)
def sqrt2_field() -> NumberField:
    """ℚ(√2), x² - 2"""
    return build_field_from_min_poly([-2, 0, 1], conj_root_power=1, name="Q(sqrt2)")


@lru_cache(maxsize=None)
def gaussian_field() -> NumberField:
    """ℚ(i), x² + 1; conjugation i ↦ i³ = -i"""
    return build_field_from_min_poly([1, 0, 1], conj_root_power=3, name="Q(i)")


@lru_cache(maxsize=None)
def zeta8_field() -> NumberField:
    """
    ℚ(ζ₈) = ℚ(i, √2), x⁴ + 1; conjugation ζ ↦ ζ⁷

    i = ζ² and √2 = ζ - ζ³, so every Clifford+T amplitude lives here.
    """
    return build_field_from_min_poly([1, 0, 0, 0, 1], conj_root_power=7, name="Q(zeta8)")


FIELD_PRESETS: Dict[str, Callable[[], NumberField]] = {
    "rationals": rationals,
    "sqrt2": sqrt2_field,
    "gaussian": gaussian_field,
    "zeta8": zeta8_field,
}


def get_field_preset(name: str) -> NumberField:
    try:
        return FIELD_PRESETS[name]()
    except KeyError:
        raise KeyError(f"unknown field preset {name!r}; choose from {', '.join(FIELD_PRESETS)}") from None
