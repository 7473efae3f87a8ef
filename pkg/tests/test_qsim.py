"""Tests for the exact Clifford+T simulator"""

from fractions import Fraction

import pytest

from conftest import HALF
from exact_tensor.error_handling import CircuitParseError, GateError, MissingConjugationError
from exact_tensor.exactnum import NumberField, rationals
from exact_tensor.progress import CLIProgress
from exact_tensor.qsim import (
    Circuit, Gate, GateLibrary, apply_gate, basis_state, format_circuit, gate_library, gate_power,
    identity_matrix, load_circuit, make_matrix, matrix_product, max_deviation, norm_squared,
    parse_circuit, probabilities, random_circuit, run_circuit, simulate_dense,
)
from exact_tensor.tensor import TensorVector, format_state


class TestGateLibrary:
    def test_standard_gates(self, library):
        assert library.names() == ["cnot", "h", "s", "t", "x", "z"]
        assert all(gate.is_unitary() for gate in library)
        assert "H" in library and "h" in library
        assert len(library) == 6

    def test_gate_identities(self, library, zeta8):
        def m(name):
            return library.get(name).matrix

        eye2 = identity_matrix(zeta8, 2)
        assert matrix_product(m("T"), m("T")) == m("S")
        assert matrix_product(m("S"), m("S")) == m("Z")
        assert gate_power(m("T"), 8) == eye2
        assert gate_power(m("H"), 2) == eye2
        assert gate_power(m("X"), 2) == eye2
        assert gate_power(m("CNOT"), 2) == identity_matrix(zeta8, 4)

    def test_unknown_gate(self, library):
        with pytest.raises(GateError) as info:
            library.get("toffoli")
        assert "cnot" in str(info.value)

    def test_registration_checks(self, zeta8, q_field):
        library = GateLibrary(zeta8)
        with pytest.raises(GateError):
            library.register(Gate("shear", 1, make_matrix(zeta8, [[[1], [1]], [[0], [1]]])))
        with pytest.raises(GateError):
            library.register(Gate("qx", 1, make_matrix(q_field, [[[0], [1]], [[1], [0]]])))
        with pytest.raises(GateError):
            Gate("wide", 2, make_matrix(zeta8, [[[1], [0]], [[0], [1]]]))
        with pytest.raises(GateError):
            gate_library(q_field)

    def test_columns(self, library, zeta8):
        cnot = library.get("CNOT")
        assert cnot.column(("1", "0")) == [(("1", "1"), zeta8.one)]
        assert len(library.get("H").column(("0",))) == 2


class TestSimulation:
    def test_bell_state(self, bell_circuit, zeta8, root_half):
        state = run_circuit(bell_circuit, "00")
        expected = TensorVector.from_items(zeta8, [(("0", "0"), root_half), (("1", "1"), root_half)])
        assert state == expected
        assert format_state(state) == "(0,1/2,0,-1/2)|00> + (0,1/2,0,-1/2)|11>"

    def test_bell_probabilities(self, bell_circuit, zeta8):
        report = probabilities(run_circuit(bell_circuit, "00"))
        assert report.probability("00") == zeta8.from_rational(HALF)
        assert report.probability("11") == zeta8.from_rational(HALF)
        assert report.probability("01") == zeta8.zero
        assert report.is_normalized
        assert [entry.decimal for entry in report.entries] == pytest.approx([0.5, 0.5])

    def test_hadamard_twice_is_identity(self):
        state = run_circuit(Circuit(1).add("H", 0).add("H", 0), "0")
        assert state == basis_state("0")
        assert format_state(state) == "(1)|0>"

    def test_phase_does_not_change_outcomes(self, data_dir, zeta8):
        state = run_circuit(load_circuit(data_dir / "circuits" / "phase.qc"), "0")
        report = probabilities(state)
        assert report.probability("0") == report.probability("1") == zeta8.from_rational(HALF)
        assert state.coefficient(("1",)) == zeta8.element([HALF, 0, HALF, 0])

    def test_ghz(self, data_dir):
        state = run_circuit(load_circuit(data_dir / "circuits" / "ghz3.qc"), "000")
        assert sorted("".join(w) for w in state.terms) == ["000", "111"]

    def test_empty_circuit(self, zeta8):
        assert run_circuit(Circuit(2), "10") == TensorVector.basis(zeta8, ("1", "0"))

    def test_target_order_matters(self):
        forward = run_circuit(Circuit(2).add("CNOT", 0, 1), "10")
        backward = run_circuit(Circuit(2).add("CNOT", 1, 0), "10")
        assert forward == basis_state("11")
        assert backward == basis_state("10")

    def test_zero_state_is_fixed(self, library, zeta8):
        zero = TensorVector.zero(zeta8)
        assert apply_gate(zero, library.get("H"), [0]) is zero

    @pytest.mark.parametrize("initial, circuit", [
        ("0", Circuit(2)),
        ("0a", Circuit(2)),
        ("00", Circuit(2).add("CNOT", 0, 0)),
        ("00", Circuit(2).add("H", 2)),
        ("00", Circuit(2).add("H", 0, 1)),
        ("00", Circuit(2).add("CCZ", 0)),
    ])
    def test_bad_runs(self, initial, circuit):
        with pytest.raises(GateError):
            run_circuit(circuit, initial)

    def test_mixed_lengths(self, library):
        mixed = basis_state("0") + basis_state("01")
        with pytest.raises(GateError):
            apply_gate(mixed, library.get("X"), [0])

    def test_circuit_needs_a_qubit(self):
        with pytest.raises(GateError):
            Circuit(0)


class TestNormAndReference:
    @pytest.mark.parametrize("qubits, gates, seed", [
        (4, 20, 0),
        (4, 20, 1),
        pytest.param(8, 60, 2, marks=pytest.mark.slow),
        pytest.param(8, 60, 3, marks=pytest.mark.slow),
    ])
    def test_norm_is_exactly_one_after_every_gate(self, qubits, gates, seed, zeta8):
        circuit = random_circuit(qubits, gates, seed=seed)
        norms = []
        run_circuit(circuit, "0" * qubits, on_step=lambda position, step, state: norms.append(norm_squared(state)))
        assert len(norms) == gates
        assert all(norm == zeta8.one for norm in norms)

    @pytest.mark.parametrize("initial, gates, seed", [
        ("010", 25, 3),
        ("010", 25, 4),
        pytest.param("01100101", 60, 5, marks=pytest.mark.slow),
        pytest.param("11010010", 60, 6, marks=pytest.mark.slow),
    ])
    def test_agrees_with_floating_point(self, initial, gates, seed):
        circuit = random_circuit(len(initial), gates, seed=seed)
        state = run_circuit(circuit, initial)
        assert max_deviation(state, circuit, initial) < 1e-10

    def test_dense_bell(self, bell_circuit):
        dense = simulate_dense(bell_circuit, "00")
        assert dense == pytest.approx([2 ** -0.5, 0, 0, 2 ** -0.5])

    def test_random_circuits_are_seeded(self):
        assert random_circuit(3, 10, seed=9).steps == random_circuit(3, 10, seed=9).steps
        single = random_circuit(1, 10, seed=1)
        assert all(step.gate != "CNOT" for step in single.steps)


class TestStateEquality:
    @pytest.mark.parametrize("seed", range(20))
    def test_gate_identities_hold_on_states(self, seed, library):
        initial = format(seed % 8, "03b")
        state = run_circuit(random_circuit(3, 12, seed=100 + seed), initial)
        target = [seed % 3]

        def apply(names):
            result = state
            for name in names:
                result = apply_gate(result, library.get(name), target)
            return result

        z = apply(["Z"])
        assert apply(["S", "S"]) == z
        assert apply(["H", "X", "H"]) == z
        assert apply(["T", "T"]) == apply(["S"])
        assert apply(["Z", "Z"]) == state


class RecordingProgress(CLIProgress):
    def __init__(self):
        super().__init__(enabled=False)
        self.events = []

    def start_phase(self, phase_name, total_steps):
        self.events.append(("start", phase_name, total_steps))

    def advance(self, steps=1, metrics=None):
        self.events.append(("advance", steps, metrics))

    def close_phase(self):
        self.events.append(("close",))


class TestSimulationProgress:
    def test_one_step_per_gate(self, bell_circuit):
        progress = RecordingProgress()
        run_circuit(bell_circuit, "00", progress=progress)
        assert progress.events == [
            ("start", "simulate", 2),
            ("advance", 1, {"support": 2}),
            ("advance", 1, {"support": 2}),
            ("close",),
        ]

    def test_phase_closes_when_a_step_fails(self, bell_circuit):
        progress = RecordingProgress()

        def stop(position, step, state):
            raise KeyboardInterrupt

        with pytest.raises(KeyboardInterrupt):
            run_circuit(bell_circuit, "00", progress=progress, on_step=stop)
        assert progress.events == [("start", "simulate", 2), ("close",)]

    def test_disabled_progress(self, bell_circuit):
        state = run_circuit(bell_circuit, "00", progress=CLIProgress(enabled=False))
        assert len(state) == 2


class TestMeasurement:

    def test_unnormalized_state(self, zeta8):
        report = probabilities(TensorVector.basis(zeta8, ("0",), 2))
        assert not report.is_normalized
        assert report.total == zeta8.from_rational(4)

    def test_needs_conjugation(self, zeta8):
        bare = NumberField("bare", zeta8.constants)
        with pytest.raises(MissingConjugationError):
            probabilities(TensorVector.basis(bare, ("0",)))

    def test_table_and_dict(self, bell_circuit):
        report = probabilities(run_circuit(bell_circuit, "00"))
        table = report.format_table()
        assert table.splitlines()[0].split() == ["outcome", "exact", "decimal"]
        assert "|00>" in table and "(1/2)" in table
        assert table.splitlines()[-1].split() == ["total", "(1)", "1.000000"]
        assert report.to_dict()["entries"][0] == {'word': "00", 'exact': "(1/2)", 'decimal': 0.5}

    def test_rational_states(self):
        q = rationals()
        state = TensorVector.from_items(q, [(("0",), Fraction(3, 5)), (("1",), Fraction(-4, 5))])
        assert probabilities(state).is_normalized


class TestCircuitFiles:
    def test_parse(self):
        circuit = parse_circuit("# comment\nqubits 2\n\nH 0   # first\ncnot 0 1\n")
        assert circuit.qubits == 2
        assert [str(step) for step in circuit.steps] == ["h 0", "cnot 0 1"]

    def test_format_round_trip(self, data_dir):
        circuit = load_circuit(data_dir / "circuits" / "bell.qc")
        assert format_circuit(circuit) == "qubits 2\nh 0\ncnot 0 1\n"
        assert parse_circuit(format_circuit(circuit)).steps == circuit.steps

    @pytest.mark.parametrize("text, line", [
        ("h 0\n", 1),
        ("qubits\n", 1),
        ("qubits 0\n", 1),
        ("qubits 2\nqubits 3\n", 2),
        ("qubits 2\nh x\n", 2),
        ("qubits 2\nfoo 0\n", 2),
        ("qubits 2\n\ncnot 0 0\n", 3),
        ("qubits 2\nh 2\n", 2),
        ("# nothing here\n", 0),
    ])
    def test_parse_errors(self, text, line):
        with pytest.raises(CircuitParseError) as info:
            parse_circuit(text)
        assert info.value.line_number == line

    def test_missing_file(self, tmp_path):
        with pytest.raises(CircuitParseError) as info:
            load_circuit(tmp_path / "absent.qc")
        assert info.value.line_number == 0
