"""
Indexings, indexed structures, term indexings and translators
"""

from .core import (
    DEFAULT_BUDGET, SearchBudget, Indexing, Operation, IndexedStructure,
    bounded_search, right_inverse, derive_inverse_op,
)
from .audit import AuditReport, AuditViolation, check_admissible
from .terms import (
    ConstantSpec, OperationSpec, SortSpec, GenerativeSpec, TermIndexing, TermStructure,
    build_term_indexing, default_label_table, sum_term, summands_of,
)
from .translation import (
    Translator, identity_translator, value_translator, build_translator, transport_function,
)
from .naturals import (
    NATURAL_SORT, natural_indexing, natural_structure, natural_successor_structure, natural_addition_structure,
    unary_term, unary_value,
)

__all__ = [
    'DEFAULT_BUDGET', 'SearchBudget', 'Indexing', 'Operation', 'IndexedStructure',
    'bounded_search', 'right_inverse', 'derive_inverse_op',
    'AuditReport', 'AuditViolation', 'check_admissible',
    'ConstantSpec', 'OperationSpec', 'SortSpec', 'GenerativeSpec', 'TermIndexing', 'TermStructure',
    'build_term_indexing', 'default_label_table', 'sum_term', 'summands_of',
    'Translator', 'identity_translator', 'value_translator', 'build_translator', 'transport_function',
    'NATURAL_SORT', 'natural_indexing', 'natural_structure', 'natural_successor_structure', 'natural_addition_structure',
    'unary_term', 'unary_value',
]
