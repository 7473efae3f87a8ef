"""
Exact circuit simulation on sparse ℚ(ζ₈) tensor states
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..error_handling.exceptions import GateError
from ..exactnum.number_field import FieldElement, nf_add, nf_conj, nf_mul
from ..exactnum.presets import zeta8_field
from ..tensor.vector import TensorVector
from ..tensor.words import QUBIT_ALPHABET, Word
from .gates import Gate, GateLibrary, gate_library

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Step:
    gate: str
    targets: Tuple[int, ...]

    def __str__(self) -> str:
        return " ".join([self.gate.lower()] + [str(t) for t in self.targets])


@dataclass
class Circuit:
    """Qubit count and an ordered list of gate applications"""
    qubits: int
    steps: List[Step] = field(default_factory=list)

    def __post_init__(self):
        if self.qubits < 1:
            raise GateError(f"a circuit needs at least one qubit, got {self.qubits}")

    def add(self, gate: str, *targets: int) -> 'Circuit':
        self.steps.append(Step(gate, tuple(targets)))
        return self

    def validate(self, library: GateLibrary) -> None:
        for step in self.steps:
            check_targets(library.get(step.gate), step.targets, self.qubits)

    def __len__(self) -> int:
        return len(self.steps)


def check_targets(gate: Gate, targets: Sequence[int], qubits: int) -> None:
    if len(targets) != gate.arity:
        raise GateError(f"{gate.name} acts on {gate.arity} qubit(s), got targets {list(targets)}")
    if len(set(targets)) != len(targets):
        raise GateError(f"{gate.name} targets must be distinct, got {list(targets)}")
    if any(t < 0 or t >= qubits for t in targets):
        raise GateError(f"{gate.name} targets {list(targets)} outside [0, {qubits})")


def basis_state(word: Sequence[str]) -> TensorVector:
    word = QUBIT_ALPHABET.check_word(tuple(word))
    return TensorVector.basis(zeta8_field(), word)


def apply_gate(state: TensorVector, gate: Gate, targets: Sequence[int]) -> TensorVector:
    """
    Linear extension of the gate over the basis words of `state`

    Each word is split at the target positions; the gate column for the
    extracted sub-word is spread over the output sub-words and merged back.
    """
    if state.is_zero():
        return state
    lengths = {len(word) for word in state.terms}
    if len(lengths) != 1:
        raise GateError(f"state mixes word lengths {sorted(lengths)}")
    qubits, = lengths
    check_targets(gate, targets, qubits)

    terms: Dict[Word, FieldElement] = {}
    for word, coefficient in state.terms.items():
        sub = tuple(word[t] for t in targets)
        for out, entry in gate.column(sub):
            merged = list(word)
            for t, letter in zip(targets, out):
                merged[t] = letter
            merged = tuple(merged)
            amplitude = nf_mul(entry, coefficient)
            terms[merged] = nf_add(terms[merged], amplitude) if merged in terms else amplitude
    return TensorVector(state.field, terms)


def norm_squared(state: TensorVector) -> FieldElement:
    """Σ a·conj(a) over all amplitudes"""
    total = state.field.zero
    for coefficient in state.terms.values():
        total = nf_add(total, nf_mul(coefficient, nf_conj(coefficient)))
    return total


def run_circuit(circuit: Circuit, initial: Sequence[str], library: Optional[GateLibrary] = None,
                progress=None,
                on_step: Optional[Callable[[int, Step, TensorVector], None]] = None) -> TensorVector:
    """
    Left fold of apply_gate over the steps, from the unit-coefficient initial word

    Args:
        circuit: Circuit to run
        initial: Basis word of length circuit.qubits
        library: Gate registry, the Clifford+T library by default
        progress: Optional CLIProgress
        on_step: Called with (position, step, state) after every gate
    """
    library = library or gate_library()
    try:
        word = QUBIT_ALPHABET.check_word(tuple(initial))
    except ValueError as e:
        raise GateError(f"bad initial word: {e}") from None
    if len(word) != circuit.qubits:
        raise GateError(f"initial word {''.join(word)} has length {len(word)}, circuit has {circuit.qubits} qubits")
    circuit.validate(library)

    state = TensorVector.basis(library.field, word)
    if progress is not None:
        progress.start_phase("simulate", len(circuit))
    try:
        for position, step in enumerate(circuit.steps):
            state = apply_gate(state, library.get(step.gate), step.targets)
            if on_step is not None:
                on_step(position, step, state)
            if progress is not None:
                progress.advance(1, {"support": len(state)})
    finally:
        if progress is not None:
            progress.close_phase()

    logger.info("ran %d gates on %d qubits; %d basis words in support", len(circuit), circuit.qubits, len(state))
    return state
