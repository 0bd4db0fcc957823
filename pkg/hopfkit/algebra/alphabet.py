"""
Generator alphabets and words. A word is a plain tuple of symbol names; the empty tuple
is the unit monomial ``1``.
"""
from enum import Enum
import re
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from hopfkit.common.checks import ConfigurationError

Word = Tuple[str, ...]
EMPTY_WORD: Word = ()

_SYMBOL_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


class WeightScheme(Enum):
    GRADE = "grade"
    FILTRATION = "filtration"
    LENGTH = "length"


class Generator(NamedTuple):
    """
    One generator as it appears in a presentation file. A generator with an ``inverse``
    contributes two alphabet symbols, itself and its formal inverse.
    """
    name: str
    inverse: Optional[str] = None
    grade: int = 0
    filtration: int = 0

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "inverse": self.inverse, "grade": self.grade,
                "filtration": self.filtration}


class Alphabet:
    """
    An ordered list of symbols with grade and filtration weights and an optional pairing
    of formal inverses. Symbol order is alphabet precedence for the monomial order: a
    generator's inverse symbol comes right after it.

    Parameters
    ----------
    generators : ``Sequence[Generator]``
    """
    def __init__(self, generators: Sequence[Generator]) -> None:
        self.generators: Tuple[Generator, ...] = tuple(generators)
        symbols: List[str] = []
        inverses: Dict[str, str] = {}
        grades: Dict[str, int] = {}
        filtrations: Dict[str, int] = {}
        for generator in self.generators:
            names = [generator.name] if generator.inverse is None else [generator.name, generator.inverse]
            for name in names:
                if not _SYMBOL_PATTERN.match(name):
                    raise ConfigurationError("invalid generator name {!r}".format(name))
                if name in grades:
                    raise ConfigurationError("generator {!r} declared twice".format(name))
                symbols.append(name)
                grades[name] = generator.grade
                filtrations[name] = generator.filtration
            if generator.grade < 0 or generator.filtration < 0:
                raise ConfigurationError("weights of {!r} must be non-negative".format(generator.name))
            if generator.inverse is not None:
                if generator.grade != 0 or generator.filtration != 0:
                    raise ConfigurationError(
                            "{!r} has a formal inverse, so its weights must be 0".format(generator.name))
                inverses[generator.name] = generator.inverse
                inverses[generator.inverse] = generator.name
        self.symbols: Tuple[str, ...] = tuple(symbols)
        self.index: Dict[str, int] = {symbol: i for i, symbol in enumerate(symbols)}
        self._inverses = inverses
        self._grades = grades
        self._filtrations = filtrations

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.index

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Alphabet) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return "Alphabet({})".format(", ".join(self.symbols))

    def inverse(self, symbol: str) -> Optional[str]:
        return self._inverses.get(symbol)

    def is_inverse_symbol(self, symbol: str) -> bool:
        """
        Whether ``symbol`` is the *second* member of an inverse pair (``Ki`` for ``K``).
        """
        partner = self._inverses.get(symbol)
        return partner is not None and self.index[partner] < self.index[symbol]

    def weight(self, word: Word, scheme: WeightScheme) -> int:
        if scheme == WeightScheme.LENGTH:
            return len(word)
        table = self._grades if scheme == WeightScheme.GRADE else self._filtrations
        return sum(table[symbol] for symbol in word)

    def grade(self, word: Word) -> int:
        return self.weight(word, WeightScheme.GRADE)

    def filtration(self, word: Word) -> int:
        return self.weight(word, WeightScheme.FILTRATION)

    def word_key(self, word: Word) -> Tuple[int, int, Tuple[int, ...]]:
        """
        Sort key of the weighted degree-lexicographic order: total grade, then length, then
        symbols left to right by precedence.
        """
        return (self.grade(word), len(word), tuple(self.index[symbol] for symbol in word))

    def check_word(self, word: Iterable[str]) -> Word:
        word = tuple(word)
        for symbol in word:
            if symbol not in self.index:
                raise ConfigurationError("{!r} is not a generator of {!r}".format(symbol, self))
        return word

    def invert_word(self, word: Word) -> Optional[Word]:
        """
        The formal inverse of a word whose symbols are all paired, ``None`` otherwise.
        """
        inverted = []
        for symbol in reversed(word):
            partner = self._inverses.get(symbol)
            if partner is None:
                return None
            inverted.append(partner)
        return tuple(inverted)

    def display_word(self, word: Word) -> str:
        if not word:
            return "1"
        pieces = []
        position = 0
        while position < len(word):
            symbol = word[position]
            run = 1
            while position + run < len(word) and word[position + run] == symbol:
                run += 1
            if self.is_inverse_symbol(symbol):
                pieces.append("{}^-{}".format(self._inverses[symbol], run))
            elif run > 1:
                pieces.append("{}^{}".format(symbol, run))
            else:
                pieces.append(symbol)
            position += run
        return "*".join(pieces)

    def with_weights(self, symbol: str, grade: Optional[int] = None,
                     filtration: Optional[int] = None) -> "Alphabet":
        """
        A copy with one generator's weights replaced.
        """
        generators = []
        for generator in self.generators:
            if generator.name == symbol:
                generator = generator._replace(grade=generator.grade if grade is None else grade,
                                               filtration=generator.filtration if filtration is None
                                               else filtration)
            generators.append(generator)
        if symbol not in {generator.name for generator in self.generators}:
            raise ConfigurationError("{!r} is not a declared generator".format(symbol))
        return Alphabet(generators)

