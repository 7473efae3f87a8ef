"""
Exact Tensor: computable indexings, exact number fields and tensor spaces

Encodes finitely generated algebraic structures as terms over the naturals,
builds translators between indexings of the same structure, and simulates
Clifford+T circuits with decidable equality of states over ℚ(ζ₈).
"""

__version__ = "1.0.0"

from .config import Config, load_config, save_config
from .encoding import pair, unpair, encode_tree, decode_tree, parse_term, format_term
from .exactnum import NumberField, FieldElement, build_field_from_min_poly, zeta8_field
from .indexing import Indexing, IndexedStructure, SearchBudget, build_translator
from .tensor import TensorVector, format_state, parse_state
from .qsim import Circuit, gate_library, run_circuit, probabilities
from .registry import REGISTRY, build_structure
from .stability import run_stability_demo

__all__ = [
    'Config', 'load_config', 'save_config',
    'pair', 'unpair', 'encode_tree', 'decode_tree', 'parse_term', 'format_term',
    'NumberField', 'FieldElement', 'build_field_from_min_poly', 'zeta8_field',
    'Indexing', 'IndexedStructure', 'SearchBudget', 'build_translator',
    'TensorVector', 'format_state', 'parse_state',
    'Circuit', 'gate_library', 'run_circuit', 'probabilities',
    'REGISTRY', 'build_structure',
    'run_stability_demo',
]
