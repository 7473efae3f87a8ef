"""
Exact Clifford+T circuit simulation over ℚ(ζ₈)
"""

from .gates import (
    Matrix, Gate, GateLibrary, gate_library, make_matrix, identity_matrix, matrix_product,
    conjugate_transpose, gate_power, words_of_length,
)
from .simulator import Step, Circuit, check_targets, basis_state, apply_gate, norm_squared, run_circuit
from .measurement import ProbabilityEntry, MeasurementReport, probabilities
from .circuit_file import parse_circuit, load_circuit, format_circuit
from .float_reference import FLOAT_GATES, simulate_dense, embed_state, max_deviation
from .random_circuits import SINGLE_QUBIT_GATES, random_circuit

__all__ = [
    'Matrix', 'Gate', 'GateLibrary', 'gate_library', 'make_matrix', 'identity_matrix', 'matrix_product',
    'conjugate_transpose', 'gate_power', 'words_of_length',
    'Step', 'Circuit', 'check_targets', 'basis_state', 'apply_gate', 'norm_squared', 'run_circuit',
    'ProbabilityEntry', 'MeasurementReport', 'probabilities',
    'parse_circuit', 'load_circuit', 'format_circuit',
    'FLOAT_GATES', 'simulate_dense', 'embed_state', 'max_deviation',
    'SINGLE_QUBIT_GATES', 'random_circuit',
]
