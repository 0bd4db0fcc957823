"""
Oriented relations and normal forms.

A :class:`RuleSet` realises computation in the quotient of the free algebra by its
relations: every rule ``lhs -> rhs`` has ``rhs`` strictly below ``lhs`` in the monomial
order, so rewriting terminates, and the leftmost occurrence of the earliest-listed
applicable rule is always rewritten first so results are reproducible even when the
system is not confluent.
"""
import logging
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from hopfkit.algebra.alphabet import EMPTY_WORD, Alphabet, Word
from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.common.checks import AlphabetMismatch, FieldMismatch, TerminationOrderViolation
from hopfkit.rewrite.monomial_order import MonomialOrder
from hopfkit.scalars.field import FieldDescriptor

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class RewriteRule(NamedTuple):
    lhs: Word
    rhs: NcPoly

    def __str__(self) -> str:
        return "{} = {}".format(self.rhs.alphabet.display_word(self.lhs), self.rhs)


class Redex(NamedTuple):
    rule_index: int
    position: int


class RuleSet:
    """
    An ordered list of rewrite rules over one alphabet and field.

    Parameters
    ----------
    alphabet : ``Alphabet``
    field : ``FieldDescriptor``
    rules : ``Sequence[RewriteRule]``
        Checked against the monomial order; a rule whose right-hand side is not strictly
        smaller raises :class:`TerminationOrderViolation`.
    """
    def __init__(self, alphabet: Alphabet, field: FieldDescriptor, rules: Sequence[RewriteRule]) -> None:
        self.alphabet = alphabet
        self.field = field
        self.order = MonomialOrder(alphabet)
        self.rules: Tuple[RewriteRule, ...] = tuple(rules)
        for rule in self.rules:
            self._check_rule(rule)
        self._cache: Dict[Word, NcPoly] = {}

    def _check_rule(self, rule: RewriteRule) -> None:
        if rule.lhs == EMPTY_WORD:
            raise TerminationOrderViolation("a relation cannot rewrite the unit 1")
        self.alphabet.check_word(rule.lhs)
        if rule.rhs.alphabet != self.alphabet:
            raise AlphabetMismatch("relation {} uses another alphabet".format(rule))
        if rule.rhs.field != self.field:
            raise FieldMismatch("relation {} has coefficients in {}, expected {}".format(
                    rule, rule.rhs.field, self.field))
        for word in rule.rhs:
            if not self.order.less(word, rule.lhs):
                lhs_text = self.alphabet.display_word(rule.lhs)
                raise TerminationOrderViolation(
                        "relation '{}' is not decreasing: {} is not below {} in the order ({}). "
                        "Put the largest monomial ({}) on the left-hand side.".format(
                                rule, self.alphabet.display_word(word), lhs_text, self.order.describe(),
                                self.alphabet.display_word(max([rule.lhs] + rule.rhs.words(),
                                                               key=self.order.key))))

    def __iter__(self) -> Iterator[RewriteRule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __getitem__(self, index: int) -> RewriteRule:
        return self.rules[index]

    @property
    def lhs_words(self) -> List[Word]:
        return [rule.lhs for rule in self.rules]

    def find_redex(self, word: Word) -> Optional[Redex]:
        """
        The earliest-listed rule that applies anywhere in ``word``, at its leftmost occurrence.
        """
        for index, rule in enumerate(self.rules):
            width = len(rule.lhs)
            for position in range(len(word) - width + 1):
                if word[position:position + width] == rule.lhs:
                    return Redex(index, position)
        return None

    def is_normal(self, word: Word) -> bool:
        return self.find_redex(word) is None

    def rewrite_once(self, word: Word, redex: Redex) -> NcPoly:
        rule = self.rules[redex.rule_index]
        prefix, suffix = word[:redex.position], word[redex.position + len(rule.lhs):]
        return NcPoly(self.alphabet, self.field, [(prefix + middle + suffix, c) for middle, c in rule.rhs.items()])

    def normal_form(self, word: Word) -> NcPoly:
        word = tuple(word)
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        redex = self.find_redex(word)
        if redex is None:
            result = NcPoly.from_word(self.alphabet, self.field, word)
        else:
            result = NcPoly.zero(self.alphabet, self.field)
            for rewritten, coefficient in self.rewrite_once(word, redex).items():
                result = result + self.normal_form(rewritten).scale(coefficient)
        self._cache[word] = result
        if len(self._cache) % 5000 == 0:
            logger.debug("normal-form cache holds %s words", len(self._cache))
        return result

    def normalize(self, poly: NcPoly) -> NcPoly:
        if poly.alphabet != self.alphabet:
            raise AlphabetMismatch("{!r} and {!r} differ".format(poly.alphabet, self.alphabet))
        if poly.field != self.field:
            raise FieldMismatch("cannot normalize over {} with rules over {}".format(poly.field, self.field))
        return poly.linear_map(self.normal_form)

    def multiply(self, left: NcPoly, right: NcPoly) -> NcPoly:
        return self.normalize(left * right)

    def power(self, base: NcPoly, exponent: int) -> NcPoly:
        result = NcPoly.one(self.alphabet, self.field)
        for _ in range(exponent):
            result = self.multiply(result, base)
        return result

    def replace(self, index: int, rule: RewriteRule) -> "RuleSet":
        rules = list(self.rules)
        rules[index] = rule
        return RuleSet(self.alphabet, self.field, rules)

    def with_alphabet(self, alphabet: Alphabet) -> "RuleSet":
        """
        The same relations over an alphabet that differs only in its weights.
        """
        return RuleSet(alphabet, self.field,
                       [RewriteRule(rule.lhs, NcPoly(alphabet, self.field, rule.rhs.items()))
                        for rule in self.rules])

    def to_strings(self) -> List[str]:
        return [str(rule) for rule in self.rules]


def normalize(poly: NcPoly, rules: RuleSet) -> NcPoly:
    return rules.normalize(poly)


def quotient_mul(left: NcPoly, right: NcPoly, rules: RuleSet) -> NcPoly:
    return rules.multiply(left, right)
