"""
Field description files

    # Q(zeta8)
    name: Q(zeta8)
    minpoly: 1 0 0 0 1
    conj: 7
    constant: 1 1 2 2

`minpoly` lists coefficients constant first. `constant: p q r value`
overrides one structure constant m_{p,q,r} after the field is built.
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..error_handling.exceptions import ExactTensorError, FieldFileError
from .number_field import NumberField, build_field_from_min_poly
from .rational import as_rational

logger = logging.getLogger(__name__)


def parse_field_text(text: str, default_name: str = "field") -> NumberField:
    name: Optional[str] = None
    min_poly: Optional[List] = None
    conj: Optional[int] = None
    overrides: List[Tuple[int, int, int, object, int]] = []

    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise FieldFileError(line_number, f"expected 'key: value', found {raw.strip()!r}")
        key, value = key.strip().lower(), value.strip()
        try:
            if key == "name":
                name = value
            elif key == "minpoly":
                min_poly = [as_rational(token) for token in value.split()]
            elif key == "conj":
                conj = int(value)
            elif key == "constant":
                tokens = value.split()
                if len(tokens) != 4:
                    raise FieldFileError(line_number, "constant needs p q r value")
                p, q, r = (int(t) for t in tokens[:3])
                overrides.append((p, q, r, as_rational(tokens[3]), line_number))
            else:
                raise FieldFileError(line_number, f"unknown key {key!r}")
        except (ValueError, ZeroDivisionError) as e:
            raise FieldFileError(line_number, str(e)) from None

    if min_poly is None:
        raise FieldFileError(0, "missing 'minpoly:' line")
    try:
        field = build_field_from_min_poly(min_poly, conj, name or default_name)
    except ExactTensorError as e:
        raise FieldFileError(0, str(e)) from None

    if not overrides:
        return field

    constants = [[list(entry) for entry in row] for row in field.constants]
    for p, q, r, value, line_number in overrides:
        if not all(0 <= k < field.degree for k in (p, q, r)):
            raise FieldFileError(line_number, f"constant index out of range for degree {field.degree}")
        constants[p][q][r] = value
    logger.info("%s: %d structure constants overridden", field.name, len(overrides))
    return NumberField(field.name, constants, field.conjugation, field.embedding, field.min_poly)


def load_field_file(path: Union[str, Path]) -> NumberField:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise FieldFileError(0, f"cannot read {path}: {e}") from None
    return parse_field_text(text, default_name=path.stem)


def format_field(field: NumberField) -> str:
    """Text form of a field built from a minimal polynomial"""
    if field.min_poly is None:
        raise FieldFileError(0, f"{field.name} has no minimal polynomial to write")
    lines = [f"name: {field.name}", "minpoly: " + " ".join(str(c) for c in field.min_poly)]
    if field.conjugation is not None:
        power = _conjugation_power(field)
        if power is not None:
            lines.append(f"conj: {power}")
    return "\n".join(lines) + "\n"


def _conjugation_power(field: NumberField) -> Optional[int]:
    """k with conj(α) = α^k, looked up among the first 2d powers"""
    if field.degree == 1:
        return 1
    image = field.conjugation[1]
    alpha = field.basis(1)
    power = field.one
    for k in range(2 * field.degree + 1):
        if power.coords == image:
            return k
        power = power * alpha
    return None
