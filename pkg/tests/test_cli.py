"""Tests for the command-line surface"""

import json

import pytest

from exact_tensor.cli import main
from exact_tensor.encoding import parse_term
from exact_tensor.error_handling import get_error_handler
from exact_tensor.registry import term_indexing


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv("ET_BUDGET", raising=False)


def run(capsys, *argv):
    status = main(["--no-progress", *argv])
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestSimulate:
    def test_bell(self, capsys, data_dir):
        status, out, _ = run(capsys, "simulate", str(data_dir / "circuits" / "bell.qc"))
        assert status == 0
        assert out.splitlines() == ["(0,1/2,0,-1/2)|00> + (0,1/2,0,-1/2)|11>"]

    def test_probabilities(self, capsys, data_dir):
        status, out, _ = run(capsys, "simulate", str(data_dir / "circuits" / "bell.qc"), "--probs")
        lines = out.splitlines()
        assert status == 0
        assert lines[1].split() == ["outcome", "exact", "decimal"]
        assert lines[-1].split() == ["total", "(1)", "1.000000"]

    def test_initial_word(self, capsys, data_dir):
        status, out, _ = run(capsys, "simulate", str(data_dir / "circuits" / "bell.qc"), "--initial", "01")
        assert status == 0
        assert out.strip() == "(0,1/2,0,-1/2)|01> + (0,1/2,0,-1/2)|10>"

    def test_empty_circuit(self, capsys, tmp_path):
        path = tmp_path / "empty.qc"
        path.write_text("qubits 2\n")
        status, out, _ = run(capsys, "simulate", str(path))
        assert status == 0
        assert out.strip() == "(1)|00>"

    def test_malformed_circuit(self, capsys, tmp_path):
        path = tmp_path / "bad.qc"
        path.write_text("qubits 2\nh 5\n")
        status, out, err = run(capsys, "simulate", str(path))
        assert status == 1
        assert out == ""
        assert "❌ simulate: line 2" in err


class TestIndexCommands:
    def test_encode(self, capsys):
        status, out, err = run(capsys, "index", "encode", "nat-succ", "S(0)")
        assert status == 0
        assert out.strip() == "12"
        assert err == ""

    def test_encode_warns_on_unadmitted_terms(self, capsys):
        status, out, err = run(capsys, "index", "encode", "nat-plus", "plus(plus(1, 1), 0)")
        assert status == 0
        assert int(out.strip()) > 0
        assert "⚠️" in err

    def test_encode_syntax_error(self, capsys):
        status, _, err = run(capsys, "index", "encode", "nat-succ", "S(0")
        assert status == 1
        assert "❌ index encode" in err

    def test_decode(self, capsys):
        status, out, _ = run(capsys, "index", "decode", "nat-succ", "12")
        assert status == 0
        assert out.splitlines() == ["S(0)", "1"]

    def test_decode_rejects_non_tree_index(self, capsys):
        status, _, err = run(capsys, "index", "decode", "nat-succ", "0")
        assert status == 1
        assert "❌ index decode" in err

    def test_translate(self, capsys):
        source = term_indexing("nat-succ-swapped").index_of_term(parse_term("S(0)"))
        status, out, _ = run(capsys, "index", "translate", "nat-succ-swapped", "nat-succ", str(source))
        assert status == 0
        assert out.splitlines() == ["12", "1"]

    def test_audit(self, capsys):
        status, out, _ = run(capsys, "index", "audit", "nat-succ", "--samples", "6")
        assert status == 0
        assert out.strip() == "op-table of nat-succ: 10 checks, No violations"

    def test_unknown_structure_is_a_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["index", "decode", "integers", "3"])
        assert info.value.code == 2


class TestStabilityDemo:
    def test_swap_adjacent(self, capsys):
        status, out, _ = run(capsys, "stability-demo", "--structure", "tensor-2qubit",
                             "--permutation", "swap-adjacent", "--range", "8")
        lines = out.splitlines()
        assert status == 0
        assert "planted:   1 0 3 2 5 4 7 6" in lines
        assert "recovered: 1 0 3 2 5 4 7 6" in lines
        assert lines[-1] == "recovered permutation = planted"

    def test_range_32_audits_32_indices(self, capsys):
        status, out, err = run(capsys, "stability-demo", "--structure", "tensor-2qubit",
                               "--permutation", "swap-adjacent", "--range", "32")
        lines = out.splitlines()
        assert status == 0
        assert err == ""
        assert lines[2] == "audit: 32 indices, No violations"
        assert lines[-1] == "recovered permutation = planted"

    def test_range_sets_the_audit_prefix(self, capsys):
        status, out, err = run(capsys, "stability-demo", "--structure", "nat-succ", "--range", "5")
        assert status == 0
        assert out.splitlines()[-1] == "translator audit passed on 5 indices"
        assert err == ""

    def test_config_extraction_range_is_the_default_range(self, capsys, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"extraction_range": 4}))
        status, out, _ = run(capsys, "--config-file", str(path), "stability-demo", "--structure", "nat-succ")
        assert status == 0
        assert out.splitlines()[-1] == "translator audit passed on 4 indices"

    def test_range_above_the_cap_warns(self, capsys):
        status, out, err = run(capsys, "stability-demo", "--structure", "nat-plus", "--range", "20")
        assert status == 0
        assert "⚠️ the translator audit uses the first 8 indices" in err
        assert out.splitlines()[-1] == "translator audit passed on 8 indices"

    def test_bad_permutation(self, capsys):
        status, _, err = run(capsys, "stability-demo", "--permutation", "rotate")
        assert status == 1
        assert "--permutation" in err



class TestEnumerateQ:
    def test_first_items(self, capsys):
        status, out, _ = run(capsys, "enumerate-q", "--count", "3")
        assert status == 0
        assert out.splitlines() == ["0 0 0\t0\t0", "1 0 0\t2\t1", "0 1 0\t4\t-1"]

    def test_zero_count(self, capsys):
        status, out, err = run(capsys, "enumerate-q", "--count", "0")
        assert status == 0
        assert out == ""
        assert err == ""

    def test_budget_skips_are_reported(self, capsys):
        status, out, err = run(capsys, "--budget", "2", "enumerate-q", "--count", "6")
        assert status == 0
        assert "skipped" in out
        assert "ran out of search budget" in err

    def test_environment_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("ET_BUDGET", "2")
        _, out, _ = run(capsys, "enumerate-q", "--count", "2")
        assert "skipped" in out

    def test_bad_environment_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("ET_BUDGET", "lots")
        status, _, err = run(capsys, "enumerate-q", "--count", "2")
        assert status == 1
        assert "ET_BUDGET" in err


class TestFieldCheck:
    def test_preset_passes(self, capsys):
        status, out, _ = run(capsys, "field-check", "--field", "sqrt2", "--samples", "10")
        lines = out.splitlines()
        assert status == 0
        assert lines[0].startswith("field: Q(sqrt2) (degree 2), 10 samples, seed 0")
        assert all("FAIL" not in line for line in lines[1:])

    def test_corrupted_file_fails(self, capsys, data_dir):
        path = data_dir / "fields" / "zeta8_corrupted.field"
        status, out, _ = run(capsys, "field-check", "--field", str(path))
        assert status == 1
        assert any(line.startswith("associativity") and "FAIL" in line for line in out.splitlines())

    def test_missing_field_file(self, capsys, tmp_path):
        status, _, err = run(capsys, "field-check", "--field", str(tmp_path / "absent.field"))
        assert status == 1
        assert "❌ field-check" in err


class TestConfiguration:
    def test_bad_preset(self):
        with pytest.raises(SystemExit) as info:
            main(["--preset", "fastest", "enumerate-q"])
        assert info.value.code == 2

    def test_invalid_config_file(self, capsys, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"search_budget": 0}))
        status, _, err = run(capsys, "--config-file", str(path), "enumerate-q", "--count", "1")
        assert status == 1
        assert "search_budget" in err

    def test_config_file_sets_count(self, capsys, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"_comment": "two items", "enumerate_count": 2}))
        status, out, _ = run(capsys, "--config-file", str(path), "enumerate-q")
        assert status == 0
        assert len(out.splitlines()) == 2


class TestErrorRecording:
    def test_command_errors_are_recorded_once(self, capsys, tmp_path):
        path = tmp_path / "bad.qc"
        path.write_text("qubits 2\nh 5\n")
        status, _, _ = run(capsys, "simulate", str(path))
        stats = get_error_handler().get_error_statistics()
        assert status == 1
        assert stats['total_errors'] == 1
        assert stats['errors_by_component'] == {'simulate': 1}
        assert stats['errors_by_category'] == {'simulation': 1}
        assert stats['errors_by_severity'] == {'high': 1}

    def test_configuration_errors_are_recorded(self, capsys, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"audit_samples": -1}))
        status, _, _ = run(capsys, "--config-file", str(path), "index", "audit", "nat-succ")
        stats = get_error_handler().get_error_statistics()
        assert status == 1
        assert stats['errors_by_component'] == {'config': 1}
        assert stats['errors_by_category'] == {'configuration': 1}

    def test_each_run_starts_with_an_empty_history(self, capsys):
        run(capsys, "index", "decode", "nat-succ", "0")
        assert get_error_handler().get_error_statistics()['errors_by_component'] == {'index decode': 1}
        status, _, _ = run(capsys, "index", "decode", "nat-succ", "12")
        assert status == 0
        assert get_error_handler().get_error_statistics()['total_errors'] == 0
