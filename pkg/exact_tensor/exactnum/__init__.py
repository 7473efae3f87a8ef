"""
Exact rationals, number fields given by structure constants, and their indexings
"""

from .rational import (
    Rational, RationalLike, normalize, as_rational, rat_arith, format_rational,
    height_starts, rational_at, rational_position, rational_indexing,
)
from .number_field import (
    NumberField, FieldElement, build_field_from_min_poly, choose_root,
    nf_add, nf_sub, nf_scale, nf_mul, nf_inverse, nf_conj, nf_eq,
    multiplication_matrix, polynomial_product, format_element, format_complex,
)
from .presets import (
    FIELD_PRESETS, get_field_preset, rationals, sqrt2_field, gaussian_field, zeta8_field,
)
from .field_file import parse_field_text, load_field_file, format_field
from .compact import (
    FIELD_SORT, field_code, field_element_at, field_indexing, field_structure, rational_structure,
)
from .rational_terms import (
    RATIONAL_SORT, canonical_rational_term, canonical_parts, rational_term_structure,
)
from .extension import EXTENSION_SORT, dense_term, dense_positions, extension_structure
from .enumeration import (
    EnumeratedRational, RationalIndexEnumerator, diagonal_triples, enumerate_rational_indices,
)
from .axioms import AxiomResult, FieldCheckReport, random_element, check_field_axioms

__all__ = [
    'Rational', 'RationalLike', 'normalize', 'as_rational', 'rat_arith', 'format_rational',
    'height_starts', 'rational_at', 'rational_position', 'rational_indexing',
    'NumberField', 'FieldElement', 'build_field_from_min_poly', 'choose_root',
    'nf_add', 'nf_sub', 'nf_scale', 'nf_mul', 'nf_inverse', 'nf_conj', 'nf_eq',
    'multiplication_matrix', 'polynomial_product', 'format_element', 'format_complex',
    'FIELD_PRESETS', 'get_field_preset', 'rationals', 'sqrt2_field', 'gaussian_field', 'zeta8_field',
    'parse_field_text', 'load_field_file', 'format_field',
    'FIELD_SORT', 'field_code', 'field_element_at', 'field_indexing', 'field_structure',
    'rational_structure',
    'RATIONAL_SORT', 'canonical_rational_term', 'canonical_parts', 'rational_term_structure',
    'EXTENSION_SORT', 'dense_term', 'dense_positions', 'extension_structure',
    'EnumeratedRational', 'RationalIndexEnumerator', 'diagonal_triples', 'enumerate_rational_indices',
    'AxiomResult', 'FieldCheckReport', 'random_element', 'check_field_axioms',
]
