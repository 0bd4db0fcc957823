"""
Enumeration of normal words, the spanning sets of every truncation we compute in.
"""
import logging
from typing import Any, Dict, List, NamedTuple, Optional, Union

from hopfkit.algebra.alphabet import EMPTY_WORD, WeightScheme, Word
from hopfkit.common.checks import ConfigurationError
from hopfkit.common.settings import DEFAULT_SETTINGS
from hopfkit.rewrite.rules import RuleSet

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class WindowSpec(NamedTuple):
    """
    How to truncate H: all normal words of ``weights``-weight at most ``bound`` and length
    at most ``length_cap``. A cap of ``None`` means the default ``2 * bound + 4`` (or
    ``bound`` itself when the weight is the length).
    """
    weights: WeightScheme
    bound: int
    length_cap: Optional[int] = None

    def effective_cap(self) -> int:
        if self.length_cap is not None:
            return self.length_cap
        if self.weights == WeightScheme.LENGTH:
            return self.bound
        return DEFAULT_SETTINGS.length_cap(self.bound)

    def enlarged(self, extra: int = 1) -> "WindowSpec":
        cap = None if self.length_cap is None else self.length_cap + 2 * extra
        return WindowSpec(self.weights, self.bound + extra, cap)

    def to_json(self) -> Dict[str, Any]:
        return {"weights": self.weights.value, "bound": self.bound, "length_cap": self.length_cap}

    @classmethod
    def from_json(cls, document: Dict[str, Any]) -> "WindowSpec":
        unknown = set(document) - {"weights", "bound", "length_cap"}
        if unknown:
            raise ConfigurationError("unknown window entries: {}".format(", ".join(sorted(unknown))))
        try:
            weights = WeightScheme(document.get("weights", "grade"))
        except ValueError:
            raise ConfigurationError("window weights must be one of {}".format(
                    ", ".join(scheme.value for scheme in WeightScheme)))
        return cls(weights, int(document["bound"]), document.get("length_cap"))

    def __str__(self) -> str:
        return "{} <= {} (length <= {})".format(self.weights.value, self.bound, self.effective_cap())


def word_basis(rules: RuleSet,
               bound: int,
               weights: Union[WeightScheme, str] = WeightScheme.GRADE,
               length_cap: Optional[int] = None) -> List[Word]:
    """
    All normal words with weight at most ``bound``, in the monomial order. Words are grown
    one symbol at a time; since every prefix of a normal word is normal, a candidate only
    needs checking for a left-hand side that ends at its last symbol.
    """
    if bound < 0:
        raise ConfigurationError("word_basis needs a non-negative bound, got {}".format(bound))
    spec = WindowSpec(WeightScheme(weights), bound, length_cap)
    cap = spec.effective_cap()
    alphabet = rules.alphabet
    lhs_words = rules.lhs_words
    found: List[Word] = []
    stack: List[Word] = [EMPTY_WORD]
    while stack:
        word = stack.pop()
        found.append(word)
        if len(word) >= cap:
            continue
        for symbol in alphabet.symbols:
            candidate = word + (symbol,)
            if alphabet.weight(candidate, spec.weights) > bound:
                continue
            if any(len(lhs) <= len(candidate) and candidate[-len(lhs):] == lhs for lhs in lhs_words):
                continue
            stack.append(candidate)
    found.sort(key=alphabet.word_key)
    logger.debug("window %s has %s normal words", spec, len(found))
    return found
