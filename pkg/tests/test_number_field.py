"""Tests for number fields, field files, compact field codes and axiom checks"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import HALF
from exact_tensor.error_handling import (
    FieldDivisionByZeroError, FieldFileError, FieldMismatchError, InvalidFieldError,
    MissingConjugationError,
)
from exact_tensor.exactnum import (
    FIELD_PRESETS, NumberField, build_field_from_min_poly, check_field_axioms, field_code,
    field_element_at, field_indexing, field_structure, format_element, format_field,
    get_field_preset, load_field_file, nf_conj, nf_eq, nf_inverse, nf_mul, parse_field_text,
    polynomial_product,
)
from exact_tensor.indexing import check_admissible

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


def field_coordinates(degree):
    return st.lists(small_rationals, min_size=degree, max_size=degree)


class TestConstruction:
    def test_degrees(self, q_field, sqrt2, gaussian, zeta8):
        assert [f.degree for f in (q_field, sqrt2, gaussian, zeta8)] == [1, 2, 2, 4]

    def test_zeta8_power_basis(self, zeta8):
        zeta = zeta8.basis(1)
        assert zeta * zeta == zeta8.basis(2)
        fourth = zeta * zeta * zeta * zeta
        assert fourth == zeta8.from_rational(-1)

    def test_sqrt2_squares_to_two(self, sqrt2):
        root = sqrt2.basis(1)
        assert root * root == sqrt2.from_rational(2)

    def test_embedding_root(self, zeta8, sqrt2):
        assert zeta8.embedding[1] == pytest.approx(complex(2 ** -0.5, 2 ** -0.5))
        assert sqrt2.embedding[1] == pytest.approx(2 ** 0.5)

    def test_rejects_bad_polynomials(self):
        with pytest.raises(InvalidFieldError):
            build_field_from_min_poly([1])
        with pytest.raises(InvalidFieldError):
            build_field_from_min_poly([1, 0, 2])

    def test_rejects_ragged_constants(self):
        with pytest.raises(InvalidFieldError):
            NumberField("bad", [[[1, 0], [0]], [[0, 1], [1, 0]]])

    def test_element_length_is_checked(self, zeta8):
        with pytest.raises(InvalidFieldError):
            zeta8.element([1, 2])

    def test_mixing_fields(self, sqrt2, gaussian):
        with pytest.raises(FieldMismatchError):
            sqrt2.one + gaussian.one
        with pytest.raises(FieldMismatchError):
            nf_eq(sqrt2.one, gaussian.one)

    def test_equality_is_decided_on_coordinates(self, sqrt2):
        assert nf_eq(sqrt2.element([Fraction(2, 4), 0]), sqrt2.element([HALF, 0])) == 1
        assert nf_eq(sqrt2.one, sqrt2.basis(1)) == 0

    def test_presets(self, zeta8):
        assert get_field_preset("zeta8") is zeta8
        with pytest.raises(KeyError):
            get_field_preset("zeta16")


class TestArithmetic:
    def test_root_half_squared(self, zeta8, root_half):
        assert root_half * root_half == zeta8.from_rational(HALF)

    def test_conjugation(self, zeta8, root_half, gaussian):
        assert root_half * nf_conj(root_half) == zeta8.element([HALF, 0, 0, 0])
        i = gaussian.basis(1)
        assert nf_conj(i) == -i

    def test_missing_conjugation(self, zeta8):
        bare = NumberField("bare", zeta8.constants)
        with pytest.raises(MissingConjugationError):
            nf_conj(bare.one)

    def test_inverse(self, zeta8, root_half):
        assert nf_inverse(root_half) == zeta8.element([0, 1, 0, -1])
        with pytest.raises(FieldDivisionByZeroError):
            nf_inverse(zeta8.zero)

    @pytest.mark.parametrize("preset", list(FIELD_PRESETS))
    @settings(max_examples=500, deadline=None)
    @given(data=st.data())
    def test_structure_constants_match_polynomial_product(self, preset, data):
        field = get_field_preset(preset)
        x, y = (field.element(data.draw(field_coordinates(field.degree))) for _ in range(2))
        assert nf_mul(x, y) == polynomial_product(x, y)

    @pytest.mark.parametrize("preset", list(FIELD_PRESETS))
    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_nonzero_elements_are_invertible(self, preset, data):
        field = get_field_preset(preset)
        x = field.element(data.draw(field_coordinates(field.degree)))
        if not x.is_zero():
            assert x * nf_inverse(x) == field.one

    def test_format_element(self, root_half):
        assert format_element(root_half) == "(0, 1/2, 0, -1/2)"
        assert format_element(root_half, approximate=True).endswith("≈ 0.707107")


class TestAxiomChecks:
    @pytest.mark.parametrize("preset", list(FIELD_PRESETS))
    def test_presets_pass(self, preset):
        report = check_field_axioms(get_field_preset(preset), samples=500, seed=3)
        assert report.passed, report.failed_axioms()
        assert {result.name for result in report.results} >= {
            "associativity", "polynomial-oracle", "conjugation-multiplicative", "conjugation-additive",
            "conjugation-involution", "norm-self-conjugate",
        }
        assert all(result.checked == 500 for result in report.results)

    def test_corrupted_constant_is_caught(self, data_dir):
        nf = load_field_file(data_dir / "fields" / "zeta8_corrupted.field")
        report = check_field_axioms(nf, samples=500, seed=0)

        assert not report.passed
        assert "associativity" in report.failed_axioms()
        assert "polynomial-oracle" in report.failed_axioms()
        assert report.result("associativity").witness is not None
        assert report.result("commutativity").passed

    def test_report_is_reproducible(self, sqrt2):
        first = check_field_axioms(sqrt2, samples=10, seed=7).to_dict()
        second = check_field_axioms(sqrt2, samples=10, seed=7).to_dict()
        assert first["results"] == second["results"]


class TestFieldFiles:
    def test_shipped_files_match_presets(self, data_dir):
        for name in ("rationals", "sqrt2", "gaussian", "zeta8"):
            assert load_field_file(data_dir / "fields" / f"{name}.field") == get_field_preset(name)

    def test_format_round_trip(self, zeta8):
        assert parse_field_text(format_field(zeta8)) == zeta8
        assert "conj: 7" in format_field(zeta8)

    @pytest.mark.parametrize("text, line", [
        ("name: x\nminpoly 1 0 1\n", 2),
        ("minpoly: 1 0 1\ncolour: red\n", 2),
        ("minpoly: 1 0 one\n", 1),
        ("minpoly: 1 0 1\nconstant: 0 0 9 1\n", 2),
        ("minpoly: 1 0 1\nconstant: 0 0 1\n", 2),
        ("name: no polynomial\n", 0),
        ("minpoly: 1 0 2\n", 0),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(FieldFileError) as info:
            parse_field_text(text)
        assert info.value.line_number == line

    def test_missing_file(self, tmp_path):
        with pytest.raises(FieldFileError):
            load_field_file(tmp_path / "absent.field")


class TestCompactCodes:
    def test_rationals_sit_at_even_codes(self, zeta8, sqrt2):
        assert field_code(zeta8.zero) == 0
        assert field_code(zeta8.one) == 2
        assert field_code(sqrt2.from_rational(Fraction(-1, 2))) == 8
        assert field_element_at(sqrt2, 2) == sqrt2.one

    def test_codes_are_bijective_on_a_prefix(self, sqrt2, gaussian):
        for nf in (sqrt2, gaussian):
            elements = [field_element_at(nf, code) for code in range(300)]
            assert len(set(elements)) == 300
            assert [field_code(a) for a in elements] == list(range(300))

    def test_degree_one_codes_are_positions(self, q_field):
        assert field_element_at(q_field, 4) == q_field.from_rational(Fraction(-1, 2))

    def test_indexing_locates_rationals(self, sqrt2):
        indexing = field_indexing(sqrt2)
        assert indexing.locate(Fraction(2)) == 10
        assert indexing.decode(10) == sqrt2.from_rational(2)

    def test_field_structure_op_table(self, sqrt2):
        structure = field_structure(sqrt2)
        assert structure.apply("add", 2, 2) == field_code(sqrt2.from_rational(2))
        assert check_admissible(structure, 30).passed
