"""
Critical-pair diagnostics for a :class:`~hopfkit.rewrite.rules.RuleSet`.

Two kinds of ambiguity are examined: overlaps, where a proper suffix of one left-hand side
is a proper prefix of another (a rule may overlap itself), and inclusions, where one
left-hand side occurs inside another. Each ambiguous word is reduced both ways and the two
results are normalized; unequal normal forms are reported.
"""
import logging
from typing import Any, Dict, List, NamedTuple

from hopfkit.algebra.alphabet import Word
from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.rewrite.rules import Redex, RuleSet

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class NonJoinable(NamedTuple):
    word: Word
    kind: str
    rules: List[str]
    first: NcPoly
    second: NcPoly

    def to_json(self) -> Dict[str, Any]:
        alphabet = self.first.alphabet
        return {"word": alphabet.display_word(self.word),
                "kind": self.kind,
                "rules": list(self.rules),
                "first": str(self.first),
                "second": str(self.second)}

    def __str__(self) -> str:
        return "{} ({}): {} != {}".format(self.first.alphabet.display_word(self.word), self.kind,
                                         self.first, self.second)


def _ambiguities(rules: RuleSet, depth: int):
    for i, first in enumerate(rules):
        for j, second in enumerate(rules):
            left, right = first.lhs, second.lhs
            for shared in range(1, min(len(left), len(right))):
                if left[-shared:] == right[:shared]:
                    word = left + right[shared:]
                    if len(word) <= depth:
                        yield word, "overlap", Redex(i, 0), Redex(j, len(left) - shared)
            if i != j and len(right) <= len(left):
                for position in range(len(left) - len(right) + 1):
                    if left[position:position + len(right)] == right and len(left) <= depth:
                        if len(right) == len(left) and j < i:
                            continue
                        yield left, "inclusion", Redex(i, 0), Redex(j, position)


def confluence_report(rules: RuleSet, depth: int) -> List[NonJoinable]:
    """
    Every ambiguity of length at most ``depth`` whose two reductions have different normal
    forms. An empty list means the system is locally confluent up to that length.
    """
    if depth < 1:
        raise ValueError("confluence depth must be at least 1")
    report = []
    examined = 0
    for word, kind, first, second in _ambiguities(rules, depth):
        examined += 1
        one = rules.normalize(rules.rewrite_once(word, first))
        other = rules.normalize(rules.rewrite_once(word, second))
        if one != other:
            report.append(NonJoinable(word, kind, [str(rules[first.rule_index]), str(rules[second.rule_index])],
                                      one, other))
    logger.debug("examined %s ambiguities up to length %s, %s not joinable", examined, depth, len(report))
    return report
