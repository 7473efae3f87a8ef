"""Tests for basis permutations, permuted indexings and permutation recovery"""

import pytest

from exact_tensor.error_handling import NotABasisVectorError, OracleRangeError, TranslationError
from exact_tensor.indexing import build_translator
from exact_tensor.stability import run_stability_demo, translator_between
from exact_tensor.tensor import (
    PermutationOracle, TensorVector, basis_index_term, extract_permutation, identity_oracle,
    parse_oracle, permute_vector, permuted_indexing, permuted_structure, reversal_oracle, space_of,
    swap_adjacent_oracle, which_basis,
)


class TestOracles:
    def test_tables(self):
        assert identity_oracle().table(4) == [0, 1, 2, 3]
        assert swap_adjacent_oracle().table(6) == [1, 0, 3, 2, 5, 4]
        assert reversal_oracle(4).table(6) == [3, 2, 1, 0, 4, 5]

    @pytest.mark.parametrize("oracle", [identity_oracle(), swap_adjacent_oracle(), reversal_oracle(16)])
    def test_oracles_are_permutations(self, oracle):
        assert oracle.verify(32)

    def test_tested_range(self):
        oracle = PermutationOracle("bounded", lambda p: p, lambda p: p, tested_range=8)
        assert oracle(7) == 7
        with pytest.raises(OracleRangeError):
            oracle(8)
        with pytest.raises(OracleRangeError):
            oracle.invert(-1)

    @pytest.mark.parametrize("text, name", [
        ("identity", "identity"), ("swap-adjacent", "swap-adjacent"),
        ("reverse", "reverse:16"), ("reverse:8", "reverse:8"),
    ])
    def test_parse_oracle(self, text, name):
        assert parse_oracle(text).name == name

    @pytest.mark.parametrize("text", ["rotate", "reverse:x", ""])
    def test_parse_oracle_rejects(self, text):
        with pytest.raises(ValueError):
            parse_oracle(text)


class TestBasisTerms:
    def test_permute_vector(self, q_field, qubit_tensor):
        space = space_of(qubit_tensor)
        v = TensorVector.from_items(q_field, [(("0",), 2), (("1", "1"), 3)])
        moved = permute_vector(v, space, swap_adjacent_oracle())
        assert moved == TensorVector.from_items(q_field, [(("1",), 2), (("1", "0"), 3)])

    @pytest.mark.parametrize("p", range(64))
    def test_basis_index_round_trip(self, p, qubit_tensor):
        x = basis_index_term(p, qubit_tensor)
        assert qubit_tensor.admits(x)
        assert which_basis(x, qubit_tensor) == p

    @pytest.mark.parametrize("p", range(3))
    def test_padded_basis_terms(self, p, qubit_tensor):
        x = basis_index_term(p, qubit_tensor, padded=True)
        assert which_basis(x, qubit_tensor) == p
        assert x >= basis_index_term(p, qubit_tensor)

    def test_which_basis_rejects(self, q_field, qubit_tensor):
        for v in (TensorVector.zero(q_field),
                  TensorVector.basis(q_field, ("0",), 2),
                  TensorVector.from_items(q_field, [(("0",), 1), (("1",), 1)])):
            with pytest.raises(NotABasisVectorError):
                which_basis(qubit_tensor.locate(v), qubit_tensor)


class TestRecovery:
    @pytest.mark.parametrize("oracle, limit", [
        (identity_oracle(), 64), (swap_adjacent_oracle(), 64), (reversal_oracle(16), 16),
    ])
    def test_extract_planted_permutation(self, oracle, limit, qubit_tensor):
        source = permuted_indexing(qubit_tensor, oracle)
        translator = build_translator(source, qubit_tensor.structure)
        assert extract_permutation(translator, limit, qubit_tensor) == oracle.table(limit)
        assert translator.check(source.prefix(8)).passed

    def test_swap_adjacent_reads_back_as_xor_one(self, qubit_tensor):
        translator = build_translator(permuted_indexing(qubit_tensor, swap_adjacent_oracle()),
                                      qubit_tensor.structure)
        assert extract_permutation(translator, 64, qubit_tensor) == [p ^ 1 for p in range(64)]

    def test_reversal_reads_back_reversed(self, qubit_tensor):
        translator = build_translator(permuted_indexing(qubit_tensor, reversal_oracle(16)),
                                      qubit_tensor.structure)
        assert extract_permutation(translator, 16, qubit_tensor) == [15 - p for p in range(16)]

    def test_padded_extraction(self, qubit_tensor):
        oracle = swap_adjacent_oracle()
        translator = build_translator(permuted_indexing(qubit_tensor, oracle), qubit_tensor.structure)
        assert extract_permutation(translator, 3, qubit_tensor, padded=True) == [1, 0, 3]

    def test_permuted_indexing_decodes_through_the_permutation(self, q_field, qubit_tensor):
        source = permuted_indexing(qubit_tensor, swap_adjacent_oracle())
        x = qubit_tensor.locate(TensorVector.basis(q_field, ("0", "0")))
        assert source.decode(x) == TensorVector.basis(q_field, ("0", "1"))
        assert source.locate(source.decode(x)) == x

    def test_permuted_structure_drops_tensor(self, qubit_tensor):
        structure = permuted_structure(permuted_indexing(qubit_tensor, reversal_oracle(4)))
        assert set(structure.operations) == {"plus", "dot"}

    def test_tensor_is_not_read_compositionally(self, q_field, qubit_tensor):
        source = permuted_indexing(qubit_tensor, swap_adjacent_oracle())
        translator = build_translator(source, qubit_tensor.structure)
        product = qubit_tensor.structure.apply(
            "tensor", qubit_tensor.locate(TensorVector.basis(q_field, ("0",))),
            qubit_tensor.locate(TensorVector.basis(q_field, ("1",))),
        )
        with pytest.raises(TranslationError):
            translator(product)


class TestStabilityDemo:
    @pytest.mark.parametrize("permutation, sample_range", [
        ("identity", 16), ("swap-adjacent", 32), ("reverse:16", 16),
    ])
    def test_tensor_demo_recovers_permutation(self, permutation, sample_range):
        report = run_stability_demo("tensor-2qubit", parse_oracle(permutation), sample_range=sample_range)
        assert report.passed
        assert report.permutation_recovered
        assert report.verdict() == "recovered permutation = planted"
        assert report.audit.checked == sample_range
        assert len(report.recovered) == sample_range

    def test_audit_is_capped(self):
        report = run_stability_demo("nat-plus", sample_range=20)
        assert report.audit.checked == 8

    def test_other_structures_audit_their_variant(self):
        report = run_stability_demo("nat-succ", sample_range=6)
        assert report.passed
        assert report.permutation_recovered is None
        assert report.verdict() == "translator audit passed on 6 indices"
        assert report.to_dict()["planted"] is None

    def test_permutation_needs_a_basis(self):
        with pytest.raises(TranslationError):
            run_stability_demo("rationals", swap_adjacent_oracle())

    def test_translator_between_entries(self):
        translator = translator_between("tensor-2qubit-reversed", "tensor-2qubit")
        assert translator.check(translator.source.prefix(6)).passed
