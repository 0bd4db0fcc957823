"""
Elements of H⊗H and H⊗H⊗H as finite maps from word tuples to scalars.
"""
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from hopfkit.algebra.alphabet import EMPTY_WORD, Alphabet, Word
from hopfkit.algebra.ncpoly import Coefficient, NcPoly, _as_scalar, format_coefficient, join_terms
from hopfkit.common.checks import AlphabetMismatch, FieldMismatch
from hopfkit.scalars.field import FieldDescriptor
from hopfkit.scalars.scalar import Scalar

TensorKey = Tuple[Word, ...]


class TensorPoly:
    """
    A sum of pure tensors of words. ``arity`` is the number of tensor slots (2 or 3). The
    class does not know any relations: slots are normal exactly when the words put in were,
    and :meth:`componentwise_mul` and :meth:`normalized` take the rule set that keeps them so.

    Parameters
    ----------
    alphabet : ``Alphabet``
    field : ``FieldDescriptor``
    arity : ``int``
    terms : ``Mapping[TensorKey, Scalar]`` or an iterable of pairs
    """
    __slots__ = ("alphabet", "field", "arity", "_terms", "_hash")

    def __init__(self,
                 alphabet: Alphabet,
                 field: FieldDescriptor,
                 arity: int = 2,
                 terms: Union[Mapping[TensorKey, Coefficient], Iterable[Tuple[TensorKey, Coefficient]]] = ()) -> None:
        if arity < 1:
            raise ValueError("tensor arity must be positive")
        self.alphabet = alphabet
        self.field = field
        self.arity = arity
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        collected: Dict[TensorKey, Scalar] = {}
        for key, coefficient in pairs:
            key = tuple(tuple(word) for word in key)
            if len(key) != arity:
                raise ValueError("tensor key {} does not have {} slots".format(key, arity))
            coefficient = _as_scalar(field, coefficient)
            collected[key] = collected[key] + coefficient if key in collected else coefficient
        ordered = sorted((key for key, c in collected.items() if not c.is_zero()), key=self._key)
        self._terms: Dict[TensorKey, Scalar] = {key: collected[key] for key in ordered}
        self._hash = None

    def _key(self, key: TensorKey):
        return tuple(self.alphabet.word_key(word) for word in key)

    @classmethod
    def from_pure(cls, polys: Sequence[NcPoly]) -> "TensorPoly":
        """
        The pure tensor ``p_1 ⊗ … ⊗ p_k`` expanded over the words of each factor.
        """
        first = polys[0]
        for poly in polys[1:]:
            first._check_compatible(poly)
        keyed = [((), first.field.one())]
        for poly in polys:
            keyed = [(key + (word,), c * d) for key, c in keyed for word, d in poly.items()]
        return cls(first.alphabet, first.field, len(polys), keyed)

    @classmethod
    def unit(cls, alphabet: Alphabet, field: FieldDescriptor, arity: int = 2) -> "TensorPoly":
        return cls(alphabet, field, arity, {(EMPTY_WORD,) * arity: field.one()})

    @classmethod
    def zero(cls, alphabet: Alphabet, field: FieldDescriptor, arity: int = 2) -> "TensorPoly":
        return cls(alphabet, field, arity)

    def _check_compatible(self, other: "TensorPoly") -> None:
        if other.alphabet != self.alphabet:
            raise AlphabetMismatch("{!r} and {!r} differ".format(self.alphabet, other.alphabet))
        if other.field != self.field:
            raise FieldMismatch("cannot combine {} with {}".format(self.field, other.field))
        if other.arity != self.arity:
            raise ValueError("cannot combine tensors with {} and {} slots".format(self.arity, other.arity))

    def _like(self, terms: Iterable[Tuple[TensorKey, Scalar]], arity: Optional[int] = None) -> "TensorPoly":
        return TensorPoly(self.alphabet, self.field, self.arity if arity is None else arity, terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[Tuple[TensorKey, Scalar]]:
        return iter(self._terms.items())

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key: TensorKey) -> Scalar:
        return self._terms.get(tuple(tuple(word) for word in key), self.field.zero())

    def __add__(self, other: Any) -> "TensorPoly":
        if not isinstance(other, TensorPoly):
            return NotImplemented
        self._check_compatible(other)
        return self._like(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "TensorPoly":
        return self._like((key, -c) for key, c in self._terms.items())

    def __sub__(self, other: Any) -> "TensorPoly":
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Coefficient) -> "TensorPoly":
        factor = _as_scalar(self.field, factor)
        return self._like((key, factor * c) for key, c in self._terms.items())

    def __mul__(self, other: Any) -> "TensorPoly":
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if isinstance(other, TensorPoly):
            return self.componentwise_mul(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> "TensorPoly":
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def componentwise_mul(self, other: "TensorPoly", rules=None) -> "TensorPoly":
        """
        ``(a_1 ⊗ a_2)(b_1 ⊗ b_2) = a_1 b_1 ⊗ a_2 b_2``, each slot normalized by ``rules``
        (any object with ``normal_form(word) -> NcPoly``). Without rules the slots are
        multiplied in the free algebra.
        """
        self._check_compatible(other)
        terms = []
        for left_key, left in self._terms.items():
            for right_key, right in other._terms.items():
                slots = [self._slot_product(u, v, rules) for u, v in zip(left_key, right_key)]
                keyed = [((), left * right)]
                for slot in slots:
                    keyed = [(key + (word,), c * d) for key, c in keyed for word, d in slot]
                terms.extend(keyed)
        return self._like(terms)

    def _slot_product(self, left: Word, right: Word, rules) -> Sequence[Tuple[Word, Scalar]]:
        if rules is None:
            return [(left + right, self.field.one())]
        return list(rules.normal_form(left + right).items())

    def normalized(self, rules) -> "TensorPoly":
        """
        The same tensor with every slot rewritten to normal form.
        """
        terms = []
        for key, coefficient in self._terms.items():
            keyed = [((), coefficient)]
            for word in key:
                keyed = [(partial + (normal,), c * d)
                         for partial, c in keyed for normal, d in rules.normal_form(word).items()]
            terms.extend(keyed)
        return self._like(terms)

    def expand_slot(self, slot: int, image: Callable[[Word], "TensorPoly"]) -> "TensorPoly":
        """
        Replaces slot ``slot`` by the tensor ``image(word)``, so ``(Δ ⊗ id)`` is
        ``expand_slot(0, delta)``. The arity grows by ``image``'s arity minus one.
        """
        terms = []
        arity = None
        for key, coefficient in self._terms.items():
            replacement = image(key[slot])
            arity = self.arity - 1 + replacement.arity
            for inner_key, inner in replacement.items():
                terms.append((key[:slot] + inner_key + key[slot + 1:], coefficient * inner))
        if arity is None:
            return self._like((), self.arity + 1)
        return self._like(terms, arity)

    def contract_slot(self, slot: int, image: Callable[[Word], Scalar]) -> Union["TensorPoly", NcPoly]:
        """
        Applies a functional such as ε to one slot. Contracting a two-slot tensor gives a
        polynomial.
        """
        terms = []
        for key, coefficient in self._terms.items():
            value = image(key[slot])
            terms.append((key[:slot] + key[slot + 1:], coefficient * value))
        if self.arity == 2:
            return NcPoly(self.alphabet, self.field, [(key[0], c) for key, c in terms])
        return self._like(terms, self.arity - 1)

    def map_slot(self, slot: int, image: Callable[[Word], NcPoly]) -> "TensorPoly":
        """
        Applies a linear map on H to one slot.
        """
        terms = []
        for key, coefficient in self._terms.items():
            for word, c in image(key[slot]).items():
                terms.append((key[:slot] + (word,) + key[slot + 1:], coefficient * c))
        return self._like(terms)

    def multiply_slots(self, rules) -> NcPoly:
        """
        The multiplication map ``m: H ⊗ H → H`` applied to a two-slot tensor.
        """
        if self.arity != 2:
            raise ValueError("multiplication needs a two-slot tensor")
        result = NcPoly.zero(self.alphabet, self.field)
        for (left, right), coefficient in self._terms.items():
            result = result + rules.normal_form(left + right).scale(coefficient)
        return result

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.field == other.field
                and self.arity == other.arity and self._terms == other._terms)

    def __ne__(self, other: Any) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.arity, tuple(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for key, coefficient in reversed(list(self._terms.items())):
            pure = "@".join(self.alphabet.display_word(word) for word in key)
            coefficient_text = format_coefficient(coefficient)
            if coefficient_text == "1":
                pieces.append(pure)
            elif coefficient_text == "-1":
                pieces.append("-" + pure)
            else:
                pieces.append("{}*{}".format(coefficient_text, pure))
        return join_terms(pieces)

    def __repr__(self) -> str:
        return "TensorPoly({})".format(self)


def tensor_arith(a: TensorPoly, b: TensorPoly, op: str, rules=None) -> TensorPoly:
    """
    One tensor operation, ``op`` in ``{"add", "sub", "componentwise_mul"}``.
    """
    a._check_compatible(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "componentwise_mul":
        return a.componentwise_mul(b, rules)
    raise ValueError("unknown tensor operation {!r}".format(op))
