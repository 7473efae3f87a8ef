"""
Prebuilt structures addressable by name from the command line
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from .exactnum.compact import field_structure
from .exactnum.extension import EXTENSION_SORT, extension_structure
from .exactnum.presets import rationals, sqrt2_field
from .exactnum.rational_terms import RATIONAL_SORT, rational_term_structure
from .indexing.core import IndexedStructure, Indexing
from .indexing.naturals import (
    NATURAL_SORT, natural_addition_structure, natural_structure, natural_successor_structure,
)
from .indexing.terms import TermIndexing
from .tensor.term_indexing import SCALAR_SORT, VECTOR_SORT, tensor_indexing, vector_space_indexing
from .tensor.words import QUBIT_ALPHABET, Alphabet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegistryEntry:
    """
    Args:
        name: Registry key
        description: One line for listings
        factory: Builds the structure
        sort: The sort demos and index commands work on
        sample_cap: Largest sample count that keeps term indices printable
        variant: Registry key of a second indexing of the same structure
        audit_operations: Op-table entries audited by default (None for all)
        tensor: Whether basis permutations apply
    """
    name: str
    description: str
    factory: Callable[[], IndexedStructure]
    sort: str
    sample_cap: int
    variant: Optional[str] = None
    audit_operations: Optional[Tuple[str, ...]] = None
    tensor: bool = False


def _rational_scalars() -> IndexedStructure:
    """ℚ as a degree-1 field, so scalars decode to field elements"""
    return field_structure(rationals(), SCALAR_SORT)


def _tensor_space(alphabet: Alphabet, name: str) -> IndexedStructure:
    return tensor_indexing(alphabet, _rational_scalars(), rationals(), name=name).structure


def _qubit_space() -> IndexedStructure:
    return vector_space_indexing(QUBIT_ALPHABET, _rational_scalars(), rationals(), name="qubit-space").structure


_ENTRIES: Tuple[RegistryEntry, ...] = (
    RegistryEntry("nat", "ℕ on the identity indexing with S and plus",
                  natural_structure, NATURAL_SORT, sample_cap=500),
    RegistryEntry("nat-succ", "⟨ℕ, S⟩ over numerals S^n(0)",
                  natural_successor_structure, NATURAL_SORT, sample_cap=12, variant="nat-succ-swapped"),
    RegistryEntry("nat-succ-swapped", "⟨ℕ, S⟩ with the label table reversed",
                  lambda: natural_successor_structure(label_order=("S", "0")), NATURAL_SORT,
                  sample_cap=12, variant="nat-succ"),
    RegistryEntry("nat-plus", "⟨ℕ, plus⟩ over unary sums 1 + (1 + ... 0)",
                  natural_addition_structure, NATURAL_SORT, sample_cap=8, variant="nat-plus-reordered"),
    RegistryEntry("nat-plus-reordered", "⟨ℕ, plus⟩ with the label table reordered",
                  lambda: natural_addition_structure(label_order=("plus", "1", "0")), NATURAL_SORT,
                  sample_cap=8, variant="nat-plus"),
    RegistryEntry("rationals", "⟨ℚ, plus, minus, times, div⟩ over (p - q) / (1 + r)",
                  rational_term_structure, RATIONAL_SORT, sample_cap=12, variant="rationals-reordered"),
    RegistryEntry("rationals-reordered", "⟨ℚ, plus, minus, times, div⟩ with the label table reversed",
                  lambda: rational_term_structure(label_order=("div", "times", "minus", "plus", "1", "0")),
                  RATIONAL_SORT, sample_cap=12, variant="rationals"),
    RegistryEntry("extension-sqrt2", "ℚ(√2) as dense terms S^λ0(0).e0 + S^λ1(0).e1",
                  lambda: extension_structure(sqrt2_field()), EXTENSION_SORT, sample_cap=8,
                  audit_operations=("plus", "dot", "times")),
    RegistryEntry("qubit-space", "two-dimensional ℚ-space with basis e0, e1",
                  _qubit_space, VECTOR_SORT, sample_cap=12, audit_operations=("plus", "dot")),
    RegistryEntry("tensor-2qubit", "tensor space over ℚ generated by |0> and |1>",
                  lambda: _tensor_space(QUBIT_ALPHABET, "tensor-2qubit"), VECTOR_SORT, sample_cap=64,
                  variant="tensor-2qubit-reversed", audit_operations=("plus", "dot", "tensor"), tensor=True),
    RegistryEntry("tensor-2qubit-reversed", "the same tensor space with generators ranked 1 before 0",
                  lambda: _tensor_space(Alphabet(("1", "0")), "tensor-2qubit-reversed"), VECTOR_SORT,
                  sample_cap=64, variant="tensor-2qubit", audit_operations=("plus", "dot", "tensor"),
                  tensor=True),
)

REGISTRY: Dict[str, RegistryEntry] = {entry.name: entry for entry in _ENTRIES}


def registry_names() -> List[str]:
    return list(REGISTRY)


def get_entry(name: str) -> RegistryEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown structure {name!r}; available: {', '.join(REGISTRY)}") from None


@lru_cache(maxsize=None)
def build_structure(name: str) -> IndexedStructure:
    entry = get_entry(name)
    logger.debug("building registry structure %s", name)
    return entry.factory()


def entry_indexing(name: str) -> Indexing:
    """The indexing of the entry's working sort"""
    return build_structure(name).sort(get_entry(name).sort)


def term_indexing(name: str) -> TermIndexing:
    indexing = entry_indexing(name)
    if not isinstance(indexing, TermIndexing):
        raise TypeError(f"{name} is not indexed by terms")
    return indexing
