"""
Noncommutative polynomials: finite linear combinations of words over an
:class:`~hopfkit.algebra.alphabet.Alphabet` with coefficients in one field. Multiplication
here is free concatenation; products in a quotient algebra go through
:mod:`hopfkit.rewrite.rules`.
"""
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from hopfkit.algebra.alphabet import EMPTY_WORD, Alphabet, WeightScheme, Word
from hopfkit.common.checks import AlphabetMismatch, FieldMismatch
from hopfkit.scalars.field import FieldDescriptor
from hopfkit.scalars.scalar import Scalar

Coefficient = Union[Scalar, int, Fraction]


def _as_scalar(field: FieldDescriptor, value: Coefficient) -> Scalar:
    if isinstance(value, Scalar):
        if value.field != field:
            raise FieldMismatch("cannot combine {} with {}".format(field, value.field))
        return value
    return field.from_fraction(Fraction(value))


def format_coefficient(coefficient: Scalar) -> str:
    """
    The coefficient as it should appear in front of a word: anything that is more than a
    single token gets parentheses so the output parses back unchanged.
    """
    text = str(coefficient)
    return "(" + text + ")" if " " in text else text


class NcPoly:
    """
    An element of the free algebra. Zero coefficients are never stored, and iteration
    follows the monomial order (smallest word first).

    Parameters
    ----------
    alphabet : ``Alphabet``
    field : ``FieldDescriptor``
    terms : ``Mapping[Word, Scalar]`` or an iterable of ``(word, coefficient)`` pairs
        Repeated words are summed.
    """
    __slots__ = ("alphabet", "field", "_terms", "_hash")

    def __init__(self,
                 alphabet: Alphabet,
                 field: FieldDescriptor,
                 terms: Union[Mapping[Word, Coefficient], Iterable[Tuple[Word, Coefficient]]] = ()) -> None:
        self.alphabet = alphabet
        self.field = field
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        collected: Dict[Word, Scalar] = {}
        for word, coefficient in pairs:
            word = tuple(word)
            coefficient = _as_scalar(field, coefficient)
            if word in collected:
                collected[word] = collected[word] + coefficient
            else:
                collected[word] = coefficient
        ordered = sorted((word for word, c in collected.items() if not c.is_zero()), key=alphabet.word_key)
        self._terms: Dict[Word, Scalar] = {word: collected[word] for word in ordered}
        self._hash = None

    @classmethod
    def zero(cls, alphabet: Alphabet, field: FieldDescriptor) -> "NcPoly":
        return cls(alphabet, field)

    @classmethod
    def one(cls, alphabet: Alphabet, field: FieldDescriptor) -> "NcPoly":
        return cls(alphabet, field, {EMPTY_WORD: field.one()})

    @classmethod
    def from_word(cls, alphabet: Alphabet, field: FieldDescriptor, word: Iterable[str],
                  coefficient: Coefficient = 1) -> "NcPoly":
        return cls(alphabet, field, [(alphabet.check_word(word), coefficient)])

    @classmethod
    def from_scalar(cls, alphabet: Alphabet, field: FieldDescriptor, value: Coefficient) -> "NcPoly":
        return cls(alphabet, field, [(EMPTY_WORD, value)])

    def _check_compatible(self, other: "NcPoly") -> None:
        if other.alphabet != self.alphabet:
            raise AlphabetMismatch("{!r} and {!r} differ".format(self.alphabet, other.alphabet))
        if other.field != self.field:
            raise FieldMismatch("cannot combine {} with {}".format(self.field, other.field))

    def _like(self, terms: Iterable[Tuple[Word, Scalar]]) -> "NcPoly":
        return NcPoly(self.alphabet, self.field, terms)

    # Read access.

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def items(self) -> Iterator[Tuple[Word, Scalar]]:
        return iter(self._terms.items())

    def words(self) -> List[Word]:
        return list(self._terms)

    def coefficient(self, word: Word) -> Scalar:
        return self._terms.get(tuple(word), self.field.zero())

    def leading_word(self) -> Word:
        return next(reversed(self._terms))

    def is_scalar(self) -> bool:
        return all(word == EMPTY_WORD for word in self._terms)

    def scalar_value(self) -> Scalar:
        return self.coefficient(EMPTY_WORD)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # Arithmetic.

    def __add__(self, other: Any) -> "NcPoly":
        if not isinstance(other, NcPoly):
            if isinstance(other, (Scalar, int, Fraction)):
                other = NcPoly.from_scalar(self.alphabet, self.field, other)
            else:
                return NotImplemented
        self._check_compatible(other)
        return self._like(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return self._like((word, -c) for word, c in self._terms.items())

    def __sub__(self, other: Any) -> "NcPoly":
        if isinstance(other, (Scalar, int, Fraction)):
            other = NcPoly.from_scalar(self.alphabet, self.field, other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "NcPoly":
        return (-self) + other

    def scale(self, factor: Coefficient) -> "NcPoly":
        factor = _as_scalar(self.field, factor)
        return self._like((word, factor * c) for word, c in self._terms.items())

    def __mul__(self, other: Any) -> "NcPoly":
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check_compatible(other)
        return self._like((u + v, a * b) for u, a in self._terms.items() for v, b in other._terms.items())

    def __rmul__(self, other: Any) -> "NcPoly":
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def linear_map(self, image: Callable[[Word], "NcPoly"]) -> "NcPoly":
        """
        Extends ``image`` (defined on words) linearly to this polynomial.
        """
        result = NcPoly.zero(self.alphabet, self.field)
        for word, coefficient in self._terms.items():
            result = result + image(word).scale(coefficient)
        return result

    def max_weight(self, scheme: WeightScheme) -> int:
        """
        The largest weight of a word in the support, ``-1`` for the zero polynomial.
        """
        return max((self.alphabet.weight(word, scheme) for word in self._terms), default=-1)

    # Comparison and printing.

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (Scalar, int, Fraction)):
            other = NcPoly.from_scalar(self.alphabet, self.field, other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.field == other.field
                and self._terms == other._terms)

    def __ne__(self, other: Any) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, tuple(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = [_format_term(format_coefficient(c), self.alphabet.display_word(word), word == EMPTY_WORD)
                  for word, c in reversed(list(self._terms.items()))]
        return join_terms(pieces)

    def __repr__(self) -> str:
        return "NcPoly({})".format(self)


def _format_term(coefficient: str, monomial: str, is_unit: bool) -> str:
    if is_unit:
        return coefficient
    if coefficient == "1":
        return monomial
    if coefficient == "-1":
        return "-" + monomial
    return "{}*{}".format(coefficient, monomial)


def join_terms(pieces: List[str]) -> str:
    text = pieces[0]
    for piece in pieces[1:]:
        text += " - " + piece[1:] if piece.startswith("-") else " + " + piece
    return text


def poly_arith(a: NcPoly, b: Union[NcPoly, Scalar], op: str) -> NcPoly:
    """
    One free-algebra operation, ``op`` in ``{"add", "sub", "concat_mul", "scalar_mul"}``.
    For ``scalar_mul`` the right operand is a scalar or a constant polynomial.
    """
    if op == "scalar_mul":
        if isinstance(b, NcPoly):
            a._check_compatible(b)
            if not b.is_scalar():
                raise ValueError("scalar_mul needs a constant right operand, got {}".format(b))
            b = b.scalar_value()
        return a.scale(b)
    if not isinstance(b, NcPoly):
        raise TypeError("{} needs two polynomials".format(op))
    a._check_compatible(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "concat_mul":
        return a * b
    raise ValueError("unknown polynomial operation {!r}".format(op))


def weighted_degree(word: Word, alphabet: Alphabet, weights: Union[WeightScheme, str]) -> int:
    return alphabet.weight(tuple(word), WeightScheme(weights))
