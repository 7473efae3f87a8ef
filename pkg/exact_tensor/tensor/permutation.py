"""
Permuted indexings of a tensor space and recovery of the permutation

A permutation f of basis-word ranks extends linearly to φ(e_p) = e_{f(p)}.
φ ∘ i is again an indexing with the same index-level + and ·; a translator
g from it back to i reveals f through h(p) = C(g(B(p))), where B(p) indexes
the basis vector of rank p and C reads the rank back.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

from ..encoding.trees import TermTree, node, numeral
from ..error_handling.exceptions import NotABasisVectorError, OracleRangeError
from ..indexing.core import IndexedStructure
from ..indexing.terms import TermIndexing, sum_term
from ..indexing.translation import Translator
from .term_indexing import SCALAR_SORT, VECTOR_SORT, TensorSpace, space_of
from .vector import TensorVector
from .words import word_of_term, word_term

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermutationOracle:
    """
    A permutation of ℕ given by both directions

    Args:
        name: Display name
        forward: f
        inverse: f⁻¹
        tested_range: Queries at or beyond this bound raise OracleRangeError
    """
    name: str
    forward: Callable[[int], int]
    inverse: Callable[[int], int]
    tested_range: Optional[int] = None

    def _check(self, p: int) -> None:
        if p < 0 or (self.tested_range is not None and p >= self.tested_range):
            raise OracleRangeError(f"{self.name} is only tested on [0, {self.tested_range}), got {p}")

    def __call__(self, p: int) -> int:
        self._check(p)
        return self.forward(p)

    def invert(self, p: int) -> int:
        self._check(p)
        return self.inverse(p)

    def verify(self, limit: int) -> bool:
        """inverse ∘ forward is the identity and forward is injective on [0, limit)"""
        images = [self(p) for p in range(limit)]
        return len(set(images)) == limit and all(self.invert(q) == p for p, q in enumerate(images))

    def table(self, limit: int) -> List[int]:
        return [self(p) for p in range(limit)]


def identity_oracle() -> PermutationOracle:
    return PermutationOracle("identity", lambda p: p, lambda p: p)


def swap_adjacent_oracle() -> PermutationOracle:
    """2n ↔ 2n + 1"""
    return PermutationOracle("swap-adjacent", lambda p: p ^ 1, lambda p: p ^ 1)


def reversal_oracle(length: int = 16) -> PermutationOracle:
    """p ↦ length - 1 - p on [0, length), identity beyond"""
    flip = lambda p: length - 1 - p if p < length else p
    return PermutationOracle(f"reverse:{length}", flip, flip)


def parse_oracle(text: str) -> PermutationOracle:
    """identity, swap-adjacent or reverse:N"""
    text = text.strip()
    if text == "identity":
        return identity_oracle()
    if text == "swap-adjacent":
        return swap_adjacent_oracle()
    if text.startswith("reverse"):
        _, _, length = text.partition(":")
        return reversal_oracle(int(length) if length else 16)
    raise ValueError(f"unknown permutation {text!r}; use identity, swap-adjacent or reverse:N")


def permute_vector(v: TensorVector, space: TensorSpace, rank_map: Callable[[int], int]) -> TensorVector:
    """Linear extension of e_p ↦ e_{rank_map(p)}"""
    alphabet = space.alphabet
    return TensorVector(v.field, {
        alphabet.word_of_rank(rank_map(alphabet.rank(word))): c for word, c in v.terms.items()
    })


class PermutedTermIndexing(TermIndexing):
    """
    φ ∘ i over the same domain as the base tensor indexing i

    Translators read pure words as atoms, since φ maps each basis word to a
    single basis vector, and use only plus and dot compositionally.
    """

    def __init__(self, base: TermIndexing, oracle: PermutationOracle):
        space = space_of(base)
        self.base = base
        self.oracle = oracle
        self.space = space
        super().__init__(
            base.structure, base.sort,
            carrier=f"{base.carrier}∘{oracle.name}",
            enumerator=base.enumerate,
            decoder=lambda x: permute_vector(base.decode(x), space, oracle),
            equality=base.equality,
            locator=lambda v: base.locate(permute_vector(v, space, oracle.invert)),
            describe=base.describe,
        )

    def admits(self, x: int) -> bool:
        return self.base.admits(x)

    def is_atom(self, tree: TermTree) -> bool:
        return word_of_term(tree, self.space.alphabet) is not None

    def atom_value(self, tree: TermTree) -> TensorVector:
        word = word_of_term(tree, self.space.alphabet)
        return permute_vector(self.space.basis_vector(word), self.space, self.oracle)

    @property
    def readable_operations(self):
        return ("plus", "dot")


def permuted_indexing(base: TermIndexing, oracle: PermutationOracle) -> PermutedTermIndexing:
    return PermutedTermIndexing(base, oracle)


def permuted_structure(permuted: PermutedTermIndexing) -> IndexedStructure:
    """⟨K, E, +, ·⟩ on the permuted indexing; ⊗ is not carried over"""
    base = permuted.base.structure
    return IndexedStructure(
        f"{base.name}∘{permuted.oracle.name}",
        {SCALAR_SORT: base.sort(SCALAR_SORT), VECTOR_SORT: permuted},
        [base.operation(symbol) for symbol in ("plus", "dot")],
        {name: entry for name, entry in base.constants.items() if entry[0] == SCALAR_SORT},
    )


def basis_index_term(p: int, base: TermIndexing, padded: bool = False) -> int:
    """
    B(p): index of a term denoting the basis vector of rank p

    The default is the admitted term dot(S^u(0), word_p). `padded` gives
    dot(S^z(0), e0) + ... + dot(S^z(0), e_{p-1}) + dot(S^u(0), e_p), whose
    index grows by a factor of about 8 per summand.
    """
    space = space_of(base)
    alphabet = space.alphabet
    unit = node("dot", numeral(space.unit_index), word_term(alphabet.word_of_rank(p), alphabet))
    if not padded:
        return base.index_of_term(unit)
    zero = numeral(space.zero_index)
    summands = [node("dot", zero, word_term(alphabet.word_of_rank(k), alphabet)) for k in range(p)]
    return base.index_of_term(sum_term(summands + [unit]))


def which_basis(x: int, base: TermIndexing) -> int:
    """C(x): the rank p when x decodes to e_p"""
    space = space_of(base)
    v = base.decode(x)
    if len(v) != 1:
        raise NotABasisVectorError(f"index denotes a vector with {len(v)} basis words")
    (word, coefficient), = v.terms.items()
    if coefficient != space.field.one:
        raise NotABasisVectorError(f"coefficient {coefficient} of {''.join(word)} is not 1")
    return space.alphabet.rank(word)


def extract_permutation(g: Translator, limit: int, base: TermIndexing,
                        padded: bool = False, progress=None) -> List[int]:
    """[C(g(B(p))) for p < limit]"""
    ranks = range(limit)
    if progress is not None:
        ranks = progress.track(ranks, total=limit, desc="extract", unit="basis")
    table = [which_basis(g.map(basis_index_term(p, base, padded)), base) for p in ranks]
    logger.info("extracted permutation on [0, %d) through %s", limit, g.name)
    return table
