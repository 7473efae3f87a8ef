"""
Tensor spaces over exact fields: sparse vectors, term indexings and basis permutations
"""

from .words import (
    Word, Alphabet, QUBIT_ALPHABET, TENSOR, word_rank, word_of_rank, word_term, word_of_term, format_word,
)
from .vector import TensorVector, tv_add, tv_scale, tv_tensor, tv_eq, random_vector
from .text_format import format_coefficient, format_state, parse_state
from .term_indexing import (
    SCALAR_SORT, VECTOR_SORT, TensorSpace, space_of, tv_to_term, term_to_tv, canonical_summands,
    vector_at, tensor_indexing, vector_space_indexing,
)
from .permutation import (
    PermutationOracle, identity_oracle, swap_adjacent_oracle, reversal_oracle, parse_oracle,
    permute_vector, PermutedTermIndexing, permuted_indexing, permuted_structure,
    basis_index_term, which_basis, extract_permutation,
)

__all__ = [
    'Word', 'Alphabet', 'QUBIT_ALPHABET', 'TENSOR', 'word_rank', 'word_of_rank', 'word_term',
    'word_of_term', 'format_word',
    'TensorVector', 'tv_add', 'tv_scale', 'tv_tensor', 'tv_eq', 'random_vector',
    'format_coefficient', 'format_state', 'parse_state',
    'SCALAR_SORT', 'VECTOR_SORT', 'TensorSpace', 'space_of', 'tv_to_term', 'term_to_tv',
    'canonical_summands', 'vector_at', 'tensor_indexing', 'vector_space_indexing',
    'PermutationOracle', 'identity_oracle', 'swap_adjacent_oracle', 'reversal_oracle', 'parse_oracle',
    'permute_vector', 'PermutedTermIndexing', 'permuted_indexing', 'permuted_structure',
    'basis_index_term', 'which_basis', 'extract_permutation',
]
