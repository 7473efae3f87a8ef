"""
Seeded random Clifford+T circuits
"""

from typing import Optional, Sequence

import numpy as np

from .simulator import Circuit

SINGLE_QUBIT_GATES = ("H", "S", "T", "X", "Z")


def random_circuit(qubits: int, gates: int, seed: Optional[int] = 0,
                   single: Sequence[str] = SINGLE_QUBIT_GATES, cnot_rate: float = 0.3) -> Circuit:
    rng = np.random.default_rng(seed)
    circuit = Circuit(qubits)
    for _ in range(gates):
        if qubits > 1 and rng.random() < cnot_rate:
            control, target = rng.choice(qubits, size=2, replace=False)
            circuit.add("CNOT", int(control), int(target))
        else:
            circuit.add(single[int(rng.integers(len(single)))], int(rng.integers(qubits)))
    return circuit
