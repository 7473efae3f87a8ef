"""Tests for exact rationals, the height order and the rational term structure"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exact_tensor.error_handling import FieldDivisionByZeroError
from exact_tensor.exactnum import (
    RATIONAL_SORT, as_rational, canonical_parts, canonical_rational_term, normalize, rat_arith,
    height_starts, rational_at, rational_indexing, rational_position, rational_structure,
    rational_term_structure,
)
from exact_tensor.indexing import build_translator, check_admissible, derive_inverse_op

HEIGHT_ORDER = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2),
                Fraction(2), Fraction(-2), Fraction(1, 3), Fraction(-1, 3)]

fractions = st.builds(Fraction, st.integers(-500, 500), st.integers(1, 500))


@pytest.fixture(scope="module")
def rationals_terms():
    return rational_term_structure()


class TestCanonicalForm:
    def test_normalize(self):
        q = normalize(6, -4)
        assert (q.numerator, q.denominator) == (-3, 2)
        with pytest.raises(FieldDivisionByZeroError):
            normalize(1, 0)

    @pytest.mark.parametrize("text, expected", [("-3/2", Fraction(-3, 2)), (" 4 ", Fraction(4)),
                                                (7, Fraction(7))])
    def test_as_rational(self, text, expected):
        assert as_rational(text) == expected

    def test_as_rational_rejects(self):
        with pytest.raises(FieldDivisionByZeroError):
            as_rational("1/0")
        with pytest.raises(TypeError):
            as_rational(True)
        with pytest.raises(TypeError):
            as_rational(0.5)

    def test_rat_arith(self):
        half, third = Fraction(1, 2), Fraction(1, 3)
        assert rat_arith(half, third, "+") == Fraction(5, 6)
        assert rat_arith(half, third, "-") == Fraction(1, 6)
        assert rat_arith(half, third, "×") == Fraction(1, 6)
        assert rat_arith(half, third, "/") == Fraction(3, 2)
        with pytest.raises(FieldDivisionByZeroError):
            rat_arith(half, Fraction(0), "/")
        with pytest.raises(ValueError):
            rat_arith(half, third, "^")


class TestHeightOrder:
    def test_first_positions(self):
        assert [rational_at(z) for z in range(len(HEIGHT_ORDER))] == HEIGHT_ORDER

    def test_positions_are_bijective_on_a_prefix(self):
        values = [rational_at(z) for z in range(2000)]
        assert len(set(values)) == 2000
        assert [rational_position(q) for q in values] == list(range(2000))

    @given(fractions)
    def test_position_inverts_at(self, q):
        assert rational_at(rational_position(q)) == q

    def test_far_positions_grow_the_table(self):
        z = 250_000
        assert rational_position(rational_at(z)) == z

    def test_height_tables_are_read_only_and_agree(self):
        small, large = height_starts(64), height_starts(256)
        assert not small.flags.writeable
        with pytest.raises(ValueError):
            small[1] = 0
        assert list(large[:len(small)]) == list(small)
        assert height_starts(64) is small

    @pytest.mark.parametrize("q", [Fraction(1, 64), Fraction(-63, 2), Fraction(64, 1), Fraction(97, 103)])
    def test_positions_across_table_limits(self, q):
        assert rational_at(rational_position(q)) == q


    def test_rejects_bad_positions(self):
        with pytest.raises(ValueError):
            rational_at(-1)

    def test_indexing_is_identity_enumerated(self):
        indexing = rational_indexing()
        assert indexing.enumerate(5) == 5
        assert indexing.decode(5) == 2
        assert indexing.locate(Fraction(-1, 2)) == 4


class TestCompactStructure:
    def test_constants(self):
        structure = rational_structure()
        assert structure.constant("zero") == 0
        assert structure.constant("one") == 1

    def test_op_table(self):
        structure = rational_structure()
        assert structure.apply("add", 3, 3) == 1
        assert structure.apply("mul", 6, 4) == 1
        assert check_admissible(structure, 40).passed


class TestRationalTerms:
    @pytest.mark.parametrize("q", HEIGHT_ORDER)
    def test_canonical_terms_are_admitted(self, q, rationals_terms):
        indexing = rationals_terms.indexing(RATIONAL_SORT)
        x = indexing.index_of(q)
        assert indexing.admits(x)
        assert indexing.decode(x) == q

    def test_canonical_parts(self):
        assert canonical_parts(canonical_rational_term(Fraction(-2, 3))) == (0, 2, 2)
        assert canonical_parts(canonical_rational_term(Fraction(0))) == (0, 0, 0)

    def test_non_canonical_terms_still_denote(self, rationals_terms):
        indexing = rationals_terms.indexing(RATIONAL_SORT)
        one = rationals_terms.constant("1")
        two = rationals_terms.apply("plus", one, one)
        assert not indexing.admits(two)
        assert indexing.decode(two) == 2
        assert indexing.eq(two, indexing.index_of(Fraction(2))) == 1
        assert canonical_parts(indexing.term_of(two)) is None

    def test_division_by_zero_term(self, rationals_terms):
        indexing = rationals_terms.indexing(RATIONAL_SORT)
        bad = rationals_terms.apply("div", rationals_terms.constant("1"), rationals_terms.constant("0"))
        with pytest.raises(FieldDivisionByZeroError):
            indexing.decode(bad)

    def test_op_table_is_admissible(self, rationals_terms):
        assert check_admissible(rationals_terms, 12).passed

    def test_reordered_labels_translate(self, rationals_terms):
        reordered = rational_term_structure(("div", "times", "minus", "plus", "1", "0"))
        source = reordered.indexing(RATIONAL_SORT)
        translator = build_translator(source, rationals_terms)
        assert translator.check(source.prefix(8)).passed

    @pytest.mark.parametrize("symbol, op", [("plus", "-"), ("times", "/")])
    def test_derived_inverses_agree_with_arithmetic(self, rationals_terms, symbol, op):
        indexing = rationals_terms.indexing(RATIONAL_SORT)
        forward = rationals_terms.operation(symbol).implementation
        for i in range(5):
            for j in range(5):
                n, p = rational_at(i), rational_at(j)
                if op == "/" and p == 0:
                    continue
                z = derive_inverse_op(forward, indexing, indexing.enumerate(i), indexing.enumerate(j))
                assert indexing.decode(z) == rat_arith(n, p, op)
                assert indexing.admits(z)
