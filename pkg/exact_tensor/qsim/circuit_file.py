"""
Circuit files

    # Bell pair
    qubits 2
    h 0
    cnot 0 1

The header line `qubits n` comes first; every other line is a gate name
followed by its target qubits.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from ..error_handling.exceptions import CircuitParseError, GateError
from .gates import GateLibrary, gate_library
from .simulator import Circuit, Step, check_targets

logger = logging.getLogger(__name__)


def parse_circuit(text: str, library: Optional[GateLibrary] = None) -> Circuit:
    library = library or gate_library()
    circuit: Optional[Circuit] = None

    for line_number, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head, args = tokens[0].lower(), tokens[1:]

        if circuit is None:
            if head != "qubits" or len(args) != 1:
                raise CircuitParseError(line_number, raw, "expected header 'qubits n'")
            try:
                circuit = Circuit(int(args[0]))
            except (ValueError, GateError) as e:
                raise CircuitParseError(line_number, raw, str(e)) from None
            continue

        if head == "qubits":
            raise CircuitParseError(line_number, raw, "duplicate qubits header")
        try:
            targets = tuple(int(a) for a in args)
            gate = library.get(head)
            check_targets(gate, targets, circuit.qubits)
        except ValueError:
            raise CircuitParseError(line_number, raw, "targets must be qubit numbers") from None
        except GateError as e:
            raise CircuitParseError(line_number, raw, str(e)) from None
        circuit.steps.append(Step(gate.name, targets))

    if circuit is None:
        raise CircuitParseError(0, "", "missing 'qubits n' header")
    logger.debug("parsed circuit with %d qubits and %d steps", circuit.qubits, len(circuit))
    return circuit


def load_circuit(path: Union[str, Path], library: Optional[GateLibrary] = None) -> Circuit:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise CircuitParseError(0, str(path), f"cannot read file: {e}") from None
    return parse_circuit(text, library)


def format_circuit(circuit: Circuit) -> str:
    return "\n".join([f"qubits {circuit.qubits}"] + [str(step) for step in circuit.steps]) + "\n"
