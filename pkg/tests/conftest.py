"""
Shared fixtures for the exact tensor test suite
"""

import os
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from exact_tensor.exactnum import (
    field_structure, gaussian_field, rationals, sqrt2_field, zeta8_field,
)
from exact_tensor.qsim import Circuit, gate_library
from exact_tensor.tensor import QUBIT_ALPHABET, tensor_indexing

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

HALF = Fraction(1, 2)


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def q_field():
    return rationals()


@pytest.fixture(scope="session")
def sqrt2():
    return sqrt2_field()


@pytest.fixture(scope="session")
def gaussian():
    return gaussian_field()


@pytest.fixture(scope="session")
def zeta8():
    return zeta8_field()


@pytest.fixture(scope="session")
def root_half(zeta8):
    """1/√2 = (ζ - ζ³)/2"""
    return zeta8.element([0, HALF, 0, -HALF])


@pytest.fixture(scope="session")
def library():
    return gate_library()


@pytest.fixture
def bell_circuit():
    return Circuit(2).add("H", 0).add("CNOT", 0, 1)


@pytest.fixture(scope="session")
def qubit_tensor():
    """Tensor space over ℚ generated by |0> and |1>"""
    return tensor_indexing(QUBIT_ALPHABET, field_structure(rationals(), "K"), rationals())
