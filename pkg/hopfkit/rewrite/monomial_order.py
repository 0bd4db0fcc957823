"""
The weighted degree-lexicographic order that orients every rule.
"""
from typing import Iterable, List

from hopfkit.algebra.alphabet import Alphabet, Word


class MonomialOrder:
    """
    Compares total grade first, then length, then symbols left to right by alphabet
    precedence. Because grade weights are non-negative and the tie-breaks are length and
    lexicographic position, the order is total, well-founded on words of bounded grade and
    compatible with concatenation on both sides.
    """
    def __init__(self, alphabet: Alphabet) -> None:
        self.alphabet = alphabet

    def key(self, word: Word):
        return self.alphabet.word_key(word)

    def less(self, left: Word, right: Word) -> bool:
        return self.key(left) < self.key(right)

    def sort(self, words: Iterable[Word]) -> List[Word]:
        return sorted(words, key=self.key)

    def describe(self) -> str:
        return "grade, then length, then lexicographic by {}".format(" < ".join(self.alphabet.symbols))
