"""
The :class:`HopfPresentation`: generators, relations and the values of Δ, ε and S on
generators, extended to all of H by (anti)multiplicativity.
"""
import logging
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from hopfkit.algebra.alphabet import EMPTY_WORD, Alphabet, Word
from hopfkit.algebra.expressions import parse_polynomial
from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.algebra.tensor import TensorPoly
from hopfkit.common.checks import ConfigurationError, UntrustedPresentation
from hopfkit.common.settings import DEFAULT_SETTINGS
from hopfkit.rewrite.rules import RuleSet
from hopfkit.rewrite.word_basis import WindowSpec
from hopfkit.scalars.field import FieldDescriptor
from hopfkit.scalars.scalar import Scalar

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class PresentationMetadata(NamedTuple):
    """
    Facts a builder or a file asserts about its algebra that the kernel cannot derive.

    generation_degree : smallest n such that H is generated by H_n.
    representatives : group-likes whose a_x values are combined into m_H.
    exhaustive : whether the representatives are asserted to determine m_H exactly.
    window : the default truncation used by window-based commands.
    """
    generation_degree: Optional[int] = None
    representatives: Tuple[Word, ...] = ()
    exhaustive: bool = False
    window: Optional[WindowSpec] = None
    source: str = "file"


class HopfPresentation:
    """
    A finitely presented algebra with coalgebra and antipode data on its generators.

    Nothing about the Hopf axioms is assumed at construction; a presentation becomes
    trusted only when :func:`~hopfkit.hopf.verification.verify_bialgebra` and
    :func:`~hopfkit.hopf.verification.verify_antipode` both pass, and every theorem-level
    computation refuses untrusted presentations.

    Parameters
    ----------
    field : ``FieldDescriptor``
    alphabet : ``Alphabet``
    rules : ``RuleSet``
    coproduct : ``Mapping[str, TensorPoly]``
        Δ of every alphabet symbol (inverse symbols included).
    counit : ``Mapping[str, Scalar]``
    antipode : ``Mapping[str, NcPoly]``
    group_likes : ``Sequence[Word]``
        Declared group-like words. Their axioms are checked by ``verify_bialgebra``.
    """
    def __init__(self,
                 field: FieldDescriptor,
                 alphabet: Alphabet,
                 rules: RuleSet,
                 coproduct: Mapping[str, TensorPoly],
                 counit: Mapping[str, Scalar],
                 antipode: Mapping[str, NcPoly],
                 group_likes: Sequence[Word],
                 name: str = "",
                 description: str = "",
                 metadata: PresentationMetadata = None) -> None:
        self.field = field
        self.alphabet = alphabet
        self.rules = rules
        self.name = name
        self.description = description
        self.metadata = metadata or PresentationMetadata()
        for table, label in ((coproduct, "coproduct"), (counit, "counit"), (antipode, "antipode")):
            missing = [symbol for symbol in alphabet.symbols if symbol not in table]
            if missing:
                raise ConfigurationError("{} is missing for {}".format(label, ", ".join(missing)))
            extra = sorted(set(table) - set(alphabet.symbols))
            if extra:
                raise ConfigurationError("{} given for unknown generators {}".format(label, ", ".join(extra)))
        for symbol, tensor in coproduct.items():
            if tensor.arity != 2:
                raise ConfigurationError("coproduct of {} must have two tensor slots".format(symbol))
        self.coproduct: Dict[str, TensorPoly] = {symbol: coproduct[symbol].normalized(rules)
                                                 for symbol in alphabet.symbols}
        self.counit_values: Dict[str, Scalar] = {symbol: counit[symbol] for symbol in alphabet.symbols}
        self.antipode_values: Dict[str, NcPoly] = {symbol: rules.normalize(antipode[symbol])
                                                   for symbol in alphabet.symbols}
        self.group_likes: Tuple[Word, ...] = tuple(alphabet.check_word(word) for word in group_likes)
        for word in self.metadata.representatives:
            if tuple(word) not in self.group_likes:
                raise ConfigurationError("representative {} is not a declared group-like".format(
                        alphabet.display_word(word)))
        self._trusted = False
        self._bialgebra_verified = False
        self._delta_cache: Dict[Word, TensorPoly] = {EMPTY_WORD: TensorPoly.unit(alphabet, field)}
        self._antipode_cache: Dict[Word, NcPoly] = {EMPTY_WORD: NcPoly.one(alphabet, field)}

    # Trust gating.

    @property
    def trusted(self) -> bool:
        return self._trusted

    def require_trusted(self, operation: str) -> None:
        if not self._trusted:
            raise UntrustedPresentation(
                    "{} needs a verified presentation; run verify_bialgebra and verify_antipode on {!r} first"
                    .format(operation, self.name or "the presentation"))

    # Elements.

    def zero(self) -> NcPoly:
        return NcPoly.zero(self.alphabet, self.field)

    def one(self) -> NcPoly:
        return NcPoly.one(self.alphabet, self.field)

    def word(self, word: Sequence[str]) -> NcPoly:
        return self.rules.normal_form(self.alphabet.check_word(word))

    def generator_poly(self, symbol: str) -> NcPoly:
        return self.word((symbol,))

    def element(self, text: str) -> NcPoly:
        """
        Parses and normalizes an element written in the expression grammar.
        """
        return self.rules.normalize(parse_polynomial(text, self.alphabet, self.field))

    def multiply(self, left: NcPoly, right: NcPoly) -> NcPoly:
        return self.rules.multiply(left, right)

    def display(self, word: Word) -> str:
        return self.alphabet.display_word(word)

    # Structure maps.

    def delta_word(self, word: Word) -> TensorPoly:
        word = tuple(word)
        cached = self._delta_cache.get(word)
        if cached is None:
            cached = self.delta_word(word[:-1]).componentwise_mul(self.coproduct[word[-1]], self.rules)
            self._delta_cache[word] = cached
        return cached

    def delta(self, element: NcPoly) -> TensorPoly:
        result = TensorPoly.zero(self.alphabet, self.field)
        for word, coefficient in element.items():
            result = result + self.delta_word(word).scale(coefficient)
        return result

    def counit_word(self, word: Word) -> Scalar:
        value = self.field.one()
        for symbol in word:
            value = value * self.counit_values[symbol]
        return value

    def counit(self, element: NcPoly) -> Scalar:
        value = self.field.zero()
        for word, coefficient in element.items():
            value = value + coefficient * self.counit_word(word)
        return value

    def antipode_word(self, word: Word) -> NcPoly:
        """
        ``S(g_1 ⋯ g_k) = S(g_k) ⋯ S(g_1)``.
        """
        word = tuple(word)
        cached = self._antipode_cache.get(word)
        if cached is None:
            cached = self.rules.multiply(self.antipode_word(word[1:]), self.antipode_values[word[0]])
            self._antipode_cache[word] = cached
        return cached

    def antipode(self, element: NcPoly) -> NcPoly:
        return element.linear_map(self.antipode_word)

    # Group-likes.

    def is_group_like_word(self, word: Word) -> bool:
        word = tuple(word)
        expected = TensorPoly(self.alphabet, self.field, 2, {(word, word): self.field.one()})
        return self.delta_word(word) == expected and self.counit_word(word).is_one()

    def group_like_words(self, words: Sequence[Word]) -> List[Word]:
        return [word for word in words if self.is_group_like_word(word)]

    def inverse_of(self, word: Word, limit: int = DEFAULT_SETTINGS.inverse_search_limit) -> Optional[NcPoly]:
        """
        A two-sided inverse of the word in H: the formal inverse when every symbol is paired,
        otherwise ``g^(k-1)`` for the first ``k <= limit`` with ``g^k = 1``.
        """
        element = self.word(word)
        one = self.one()
        inverted = self.alphabet.invert_word(tuple(word))
        candidates = []
        if inverted is not None:
            candidates.append(self.word(inverted))
        power = one
        for _ in range(limit):
            following = self.multiply(power, element)
            if following == one:
                candidates.append(power)
                break
            power = following
        for candidate in candidates:
            if self.multiply(element, candidate) == one and self.multiply(candidate, element) == one:
                return candidate
        return None

    # Diagnostics.

    def commutativity_probe(self) -> List[Tuple[str, str]]:
        """
        Generator pairs that do not commute in H.
        """
        failures = []
        symbols = self.alphabet.symbols
        for i, first in enumerate(symbols):
            for second in symbols[i + 1:]:
                left = self.rules.normal_form((first, second))
                right = self.rules.normal_form((second, first))
                if left != right:
                    failures.append((first, second))
        return failures

    def is_commutative(self) -> bool:
        return not self.commutativity_probe()

    # Copies. A copy is never trusted.

    def _copy(self, **changes: Any) -> "HopfPresentation":
        arguments = dict(field=self.field, alphabet=self.alphabet, rules=self.rules,
                         coproduct=self.coproduct, counit=self.counit_values, antipode=self.antipode_values,
                         group_likes=self.group_likes, name=self.name, description=self.description,
                         metadata=self.metadata)
        arguments.update(changes)
        return HopfPresentation(**arguments)

    def with_coproduct(self, symbol: str, value: TensorPoly) -> "HopfPresentation":
        coproduct = dict(self.coproduct)
        coproduct[symbol] = value
        return self._copy(coproduct=coproduct)

    def with_antipode(self, symbol: str, value: NcPoly) -> "HopfPresentation":
        antipode = dict(self.antipode_values)
        antipode[symbol] = value
        return self._copy(antipode=antipode)

    def with_weights(self, symbol: str, grade: Optional[int] = None,
                     filtration: Optional[int] = None) -> "HopfPresentation":
        alphabet = self.alphabet.with_weights(symbol, grade=grade, filtration=filtration)

        def rebase_poly(poly: NcPoly) -> NcPoly:
            return NcPoly(alphabet, self.field, poly.items())

        def rebase_tensor(tensor: TensorPoly) -> TensorPoly:
            return TensorPoly(alphabet, self.field, tensor.arity, tensor.items())

        return self._copy(alphabet=alphabet,
                          rules=self.rules.with_alphabet(alphabet),
                          coproduct={s: rebase_tensor(t) for s, t in self.coproduct.items()},
                          antipode={s: rebase_poly(p) for s, p in self.antipode_values.items()})

    def same_structure(self, other: "HopfPresentation") -> bool:
        """
        Whether two presentations carry identical data (trust and caches aside).
        """
        return (self.field == other.field and self.alphabet == other.alphabet
                and self.rules.to_strings() == other.rules.to_strings()
                and self.coproduct == other.coproduct
                and self.counit_values == other.counit_values
                and self.antipode_values == other.antipode_values
                and self.group_likes == other.group_likes)

    def __repr__(self) -> str:
        return "HopfPresentation({!r} over {}, generators {}, {})".format(
                self.name, self.field, ", ".join(self.alphabet.symbols),
                "trusted" if self._trusted else "untrusted")


def delta(element: NcPoly, presentation: HopfPresentation) -> TensorPoly:
    return presentation.delta(element)


def counit(element: NcPoly, presentation: HopfPresentation) -> Scalar:
    return presentation.counit(element)


def antipode(element: NcPoly, presentation: HopfPresentation) -> NcPoly:
    return presentation.antipode(element)
