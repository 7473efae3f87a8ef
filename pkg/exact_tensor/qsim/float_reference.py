"""
Independent floating-point state-vector simulator for cross-checks

Gate matrices are written out as complex128 arrays instead of being
embedded from the exact library. Qubit 0 is the most significant axis, so
dense index k is the word whose bits spell k.
"""

from math import pi, sqrt
from typing import Dict, Sequence

import numpy as np

from ..error_handling.exceptions import GateError
from ..tensor.vector import TensorVector
from .simulator import Circuit

_SQRT2_INV, _T = 1 / sqrt(2), np.exp(1j * pi / 4)

FLOAT_GATES: Dict[str, np.ndarray] = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "s": np.array([[1, 0], [0, 1j]], dtype=complex),
    "t": np.array([[1, 0], [0, _T]], dtype=complex),
    "h": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    "cnot": np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex),
}


def _apply(state: np.ndarray, matrix: np.ndarray, targets: Sequence[int], n: int) -> np.ndarray:
    k = len(targets)
    tensor = np.moveaxis(state.reshape([2] * n), list(targets), list(range(k)))
    tensor = np.tensordot(matrix.reshape([2] * (2 * k)), tensor, axes=(list(range(k, 2 * k)), list(range(k))))
    return np.moveaxis(tensor, list(range(k)), list(targets)).reshape(-1)


def simulate_dense(circuit: Circuit, initial: Sequence[str]) -> np.ndarray:
    """Amplitude vector of length 2**n"""
    n = circuit.qubits
    state = np.zeros(2 ** n, dtype=complex)
    state[int("".join(initial), 2)] = 1.0
    for step in circuit.steps:
        try:
            matrix = FLOAT_GATES[step.gate.lower()]
        except KeyError:
            raise GateError(f"no floating-point matrix for {step.gate}") from None
        state = _apply(state, matrix, step.targets, n)
    return state


def embed_state(state: TensorVector, qubits: int) -> np.ndarray:
    """Dense numeric image of an exact state through the field embedding"""
    dense = np.zeros(2 ** qubits, dtype=complex)
    for word, coefficient in state.terms.items():
        dense[int("".join(word), 2)] = coefficient.approx()
    return dense


def max_deviation(state: TensorVector, circuit: Circuit, initial: Sequence[str]) -> float:
    return float(np.max(np.abs(embed_state(state, circuit.qubits) - simulate_dense(circuit, initial))))
