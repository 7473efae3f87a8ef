"""
Text form of states

    (0,1/2,0,-1/2)|00> + (0,1/2,0,-1/2)|11>

Each summand is a coefficient tuple followed by a ket. Trailing zero
coordinates are dropped when printing and padded back when parsing; the
zero vector prints as 0.
"""

import re
from typing import Optional

from ..error_handling.exceptions import StateParseError
from ..exactnum.number_field import FieldElement, NumberField
from ..exactnum.rational import as_rational
from .vector import TensorVector
from .words import Alphabet, format_word

_SUMMAND = re.compile(r"\(([^()]*)\)\s*\|([^<>|]*)>")


def format_coefficient(c: FieldElement) -> str:
    coords = list(c.coords)
    while len(coords) > 1 and coords[-1] == 0:
        coords.pop()
    return "(" + ",".join(str(x) for x in coords) + ")"


def format_state(v: TensorVector, alphabet: Optional[Alphabet] = None) -> str:
    if v.is_zero():
        return "0"
    return " + ".join(
        format_coefficient(c) + format_word(word) for word, c in v.items(alphabet)
    )


def parse_state(text: str, field: NumberField, alphabet: Optional[Alphabet] = None) -> TensorVector:
    text = text.strip()
    if text == "0":
        return TensorVector.zero(field)

    items = []
    position = 0
    for match in _SUMMAND.finditer(text):
        gap = text[position:match.start()].strip()
        if gap not in (("",) if position == 0 else ("+",)):
            raise StateParseError(f"unexpected {gap!r} before offset {match.start()} in {text!r}")
        position = match.end()

        tokens = [t.strip() for t in match.group(1).split(",")]
        if len(tokens) > field.degree or any(t == "" for t in tokens):
            raise StateParseError(f"bad coefficient ({match.group(1)}) for {field.name}")
        try:
            coords = [as_rational(t) for t in tokens]
        except (ValueError, ZeroDivisionError) as e:
            raise StateParseError(f"bad coefficient ({match.group(1)}): {e}") from None
        coords += [0] * (field.degree - len(coords))

        word = tuple(match.group(2).strip())
        if not word:
            raise StateParseError("empty ket")
        if alphabet is not None:
            try:
                alphabet.check_word(word)
            except ValueError as e:
                raise StateParseError(str(e)) from None
        items.append((word, field.element(coords)))

    if not items or text[position:].strip():
        raise StateParseError(f"cannot read state {text!r}")
    return TensorVector.from_items(field, items)
