"""
Alphabets of generators and tensor words

A word b1 b2 ... bn stands for the right-nested product b1 ⊗ (b2 ⊗ ... ⊗ bn).
Words are ranked by length, then lexicographically in generator order.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from ..encoding.trees import TermTree, leaf, node

Word = Tuple[str, ...]

TENSOR = "tensor"


@dataclass(frozen=True)
class Alphabet:
    """Ordered, nonempty list of distinct generator labels"""
    generators: Tuple[str, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("an alphabet needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"generators must be distinct: {self.generators}")
        for letter in self.generators:
            if not letter.isalnum():
                raise ValueError(f"generator labels must be alphanumeric, got {letter!r}")

    @classmethod
    def of(cls, letters: Sequence[str]) -> 'Alphabet':
        return cls(tuple(letters))

    @property
    def size(self) -> int:
        return len(self.generators)

    @property
    def _positions(self) -> Dict[str, int]:
        return {letter: k for k, letter in enumerate(self.generators)}

    def symbol(self, letter: str) -> str:
        """Label of the generator constant in term tables"""
        return f"ket{letter}"

    def letter_of(self, symbol: str) -> Optional[str]:
        if symbol.startswith("ket") and symbol[3:] in self.generators:
            return symbol[3:]
        return None

    def symbols(self) -> Tuple[str, ...]:
        return tuple(self.symbol(letter) for letter in self.generators)

    def check_word(self, word: Word) -> Word:
        word = tuple(word)
        if not word:
            raise ValueError("words are nonempty")
        unknown = [letter for letter in word if letter not in self.generators]
        if unknown:
            raise ValueError(f"letters {unknown} are not generators of {self.generators}")
        return word

    def length_offset(self, length: int) -> int:
        """Rank of the first word of the given length"""
        k = self.size
        if k == 1:
            return length - 1
        return (k ** length - k) // (k - 1)

    def rank(self, word: Word) -> int:
        word = self.check_word(word)
        positions = self._positions
        value = 0
        for letter in word:
            value = value * self.size + positions[letter]
        return self.length_offset(len(word)) + value

    def word_of_rank(self, rank: int) -> Word:
        if rank < 0:
            raise ValueError("ranks are natural numbers")
        length = 1
        while self.length_offset(length + 1) <= rank:
            length += 1
        value = rank - self.length_offset(length)
        letters = []
        for _ in range(length):
            value, digit = divmod(value, self.size)
            letters.append(self.generators[digit])
        return tuple(reversed(letters))


QUBIT_ALPHABET = Alphabet(("0", "1"))


def word_rank(word: Word, alphabet: Alphabet = QUBIT_ALPHABET) -> int:
    return alphabet.rank(word)


def word_of_rank(rank: int, alphabet: Alphabet = QUBIT_ALPHABET) -> Word:
    return alphabet.word_of_rank(rank)


def word_term(word: Word, alphabet: Alphabet) -> TermTree:
    """b1 ⊗ (b2 ⊗ ... ⊗ bn) over the generator constants"""
    word = alphabet.check_word(word)
    tree = leaf(alphabet.symbol(word[-1]))
    for letter in reversed(word[:-1]):
        tree = node(TENSOR, leaf(alphabet.symbol(letter)), tree)
    return tree


def word_of_term(tree: TermTree, alphabet: Alphabet) -> Optional[Word]:
    """The word when tree is a right-nested tensor of generators, otherwise None"""
    letters = []
    while tree.symbol == TENSOR and tree.arity == 2:
        head = tree.children[0]
        letter = alphabet.letter_of(head.symbol) if head.arity == 0 else None
        if letter is None:
            return None
        letters.append(letter)
        tree = tree.children[1]
    letter = alphabet.letter_of(tree.symbol) if tree.arity == 0 else None
    if letter is None:
        return None
    letters.append(letter)
    return tuple(letters)


def format_word(word: Word) -> str:
    return "|" + "".join(word) + ">"
