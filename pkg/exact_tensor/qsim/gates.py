"""
Clifford+T gates with exact ℚ(ζ₈) entries

Rows and columns are ordered lexicographically by the words over {0, 1} of
length equal to the gate's arity. Coordinates are over 1, ζ, ζ², ζ³ with
ζ = e^{iπ/4}; 1/√2 = (ζ - ζ³)/2.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..error_handling.exceptions import GateError
from ..exactnum.number_field import FieldElement, NumberField, nf_add, nf_conj, nf_mul
from ..exactnum.presets import zeta8_field

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[FieldElement, ...], ...]

HALF = Fraction(1, 2)


def words_of_length(k: int) -> List[Tuple[str, ...]]:
    return [tuple(bits) for bits in product("01", repeat=k)]


def make_matrix(field: NumberField, rows: Sequence[Sequence[Sequence]]) -> Matrix:
    """Rows of coordinate lists -> Matrix; short lists are padded with zeros"""
    return tuple(
        tuple(field.element(list(entry) + [0] * (field.degree - len(entry))) for entry in row)
        for row in rows
    )


def identity_matrix(field: NumberField, size: int) -> Matrix:
    return tuple(tuple(field.one if r == c else field.zero for c in range(size)) for r in range(size))


def matrix_product(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise GateError(f"cannot multiply {len(a)}×{len(a[0])} by {len(b)}×{len(b[0])}")
    field = a[0][0].field
    result = []
    for row in a:
        out = []
        for c in range(len(b[0])):
            total = field.zero
            for k, entry in enumerate(row):
                if not entry.is_zero() and not b[k][c].is_zero():
                    total = nf_add(total, nf_mul(entry, b[k][c]))
            out.append(total)
        result.append(tuple(out))
    return tuple(result)


def conjugate_transpose(a: Matrix) -> Matrix:
    return tuple(tuple(nf_conj(a[r][c]) for r in range(len(a))) for c in range(len(a[0])))


def gate_power(a: Matrix, exponent: int) -> Matrix:
    if exponent < 0:
        raise GateError("gate powers must be natural numbers")
    result = identity_matrix(a[0][0].field, len(a))
    for _ in range(exponent):
        result = matrix_product(result, a)
    return result


@dataclass(frozen=True)
class Gate:
    """A named k-qubit unitary"""
    name: str
    arity: int
    matrix: Matrix

    def __post_init__(self):
        size = 2 ** self.arity
        if self.arity < 1 or len(self.matrix) != size or any(len(row) != size for row in self.matrix):
            raise GateError(f"gate {self.name} needs a {size}×{size} matrix")

    @property
    def field(self) -> NumberField:
        return self.matrix[0][0].field

    def is_unitary(self) -> bool:
        return matrix_product(self.matrix, conjugate_transpose(self.matrix)) == identity_matrix(
            self.field, len(self.matrix))

    def column(self, word: Tuple[str, ...]) -> List[Tuple[Tuple[str, ...], FieldElement]]:
        """Nonzero entries of the column for an input sub-word"""
        c = int("".join(word), 2)
        return [
            (out, self.matrix[r][c])
            for r, out in enumerate(words_of_length(self.arity))
            if not self.matrix[r][c].is_zero()
        ]


class GateLibrary:
    """Registry of gates; registration checks exact unitarity"""

    def __init__(self, field: NumberField, gates: Iterable[Gate] = ()):
        self.field = field
        self._gates: Dict[str, Gate] = {}
        for gate in gates:
            self.register(gate)

    def register(self, gate: Gate) -> Gate:
        if not (gate.field is self.field or gate.field == self.field):
            raise GateError(f"gate {gate.name} is not over {self.field.name}")
        if not gate.is_unitary():
            raise GateError(f"gate {gate.name} is not unitary")
        self._gates[gate.name.lower()] = gate
        logger.debug("registered gate %s", gate.name)
        return gate

    def get(self, name: str) -> Gate:
        try:
            return self._gates[name.lower()]
        except KeyError:
            raise GateError(f"unknown gate {name!r}; known: {', '.join(sorted(self._gates))}") from None

    def names(self) -> List[str]:
        return sorted(self._gates)

    def __contains__(self, name: object) -> bool:
        return isinstance(name, str) and name.lower() in self._gates

    def __len__(self) -> int:
        return len(self._gates)

    def __iter__(self):
        return iter(self._gates.values())


def _standard_gates(field: NumberField) -> List[Gate]:
    one, zero = [1], [0]
    minus = [-1]
    zeta = [0, 1]
    i = [0, 0, 1]
    root_half = [0, HALF, 0, -HALF]
    minus_root_half = [0, -HALF, 0, HALF]
    cnot = [[one if r == c else zero for c in range(4)] for r in range(4)]
    cnot[2][2], cnot[3][3], cnot[2][3], cnot[3][2] = zero, zero, one, one
    return [
        Gate("X", 1, make_matrix(field, [[zero, one], [one, zero]])),
        Gate("Z", 1, make_matrix(field, [[one, zero], [zero, minus]])),
        Gate("S", 1, make_matrix(field, [[one, zero], [zero, i]])),
        Gate("T", 1, make_matrix(field, [[one, zero], [zero, zeta]])),
        Gate("H", 1, make_matrix(field, [[root_half, root_half], [root_half, minus_root_half]])),
        Gate("CNOT", 2, make_matrix(field, cnot)),
    ]


def gate_library(field: Optional[NumberField] = None) -> GateLibrary:
    """X, Z, S, T, H and CNOT over ℚ(ζ₈)"""
    field = field or zeta8_field()
    if field.degree != 4:
        raise GateError(f"the Clifford+T library needs ℚ(ζ₈), not {field.name}")
    return GateLibrary(field, _standard_gates(field))
