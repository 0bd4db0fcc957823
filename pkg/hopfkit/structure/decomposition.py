"""
Checks on the first two layers of the coradical filtration: the Taft–Wilson decomposition
``H_1 = kG ⊕ (⊕ P_{x,y}')`` and the coalgebra-filtration property of the declared
filtration weights.
"""
import logging
from typing import List, Optional, Sequence

from hopfkit.algebra.alphabet import WeightScheme, Word
from hopfkit.common.report import Report
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.structure.linear_algebra import EchelonBasis
from hopfkit.structure.skew_primitives import skew_primitives
from hopfkit.structure.window import BasisWindow

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


def h1_decomposition_check(presentation: HopfPresentation,
                           window: BasisWindow,
                           group_likes: Optional[Sequence[Word]] = None) -> Report:
    """
    Verifies inside ``window`` that ``kG + Σ_{x,y} P_{x,y}'`` is a direct sum and reports its
    dimension. ``group_likes`` defaults to the declared ones; ``G`` is taken to be that list.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("h1_decomposition_check")
    group = [tuple(word) for word in (group_likes if group_likes is not None else H.group_likes)]
    report = Report("kG ⊕ (⊕_(x,y) P_(x,y)') is direct within the window",
                    {"window": str(window.spec), "group_likes": [H.display(word) for word in group]})
    span = EchelonBasis(H.field, H.alphabet.word_key)
    for word in group:
        if not span.add(dict(H.word(word).items())):
            report.fail("group-likes are linearly dependent", H.display(word))
    prime_dimensions = {}
    for x in group:
        for y in group:
            space = skew_primitives(H, x, y, window)
            if space.prime_basis:
                prime_dimensions["({}, {})".format(H.display(x), H.display(y))] = len(space.prime_basis)
            for element in space.prime_basis:
                if not span.add(dict(element.items())):
                    report.fail("P_({},{})' meets the earlier summands".format(H.display(x), H.display(y)), element)
    report.details["kG_dimension"] = len(group)
    report.details["prime_dimensions"] = prime_dimensions
    report.details["dimension"] = span.rank
    logger.info("H_1 window decomposition of %r: dimension %s (%s)", H.name, span.rank, report.status)
    return report


def filtration_step_check(presentation: HopfPresentation, n: int, window: BasisWindow) -> Report:
    """
    Checks ``Δ(H_d) ⊆ H⊗H_(d-1) + H_0⊗H`` for every window word of declared filtration
    degree ``d <= n``, with ``H_0`` spanned by the group-like words. Tensor keys are pairs of
    normal words, so membership is decided term by term.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("filtration_step_check")
    report = Report("Δ(H_d) ⊆ H⊗H_(d-1) + H_0⊗H for the declared filtration, d <= {}".format(n),
                    {"n": n, "window": str(window.spec)})
    checked = 0
    group_like_cache = {}

    def group_like(word: Word) -> bool:
        if word not in group_like_cache:
            group_like_cache[word] = H.is_group_like_word(word)
        return group_like_cache[word]

    for word in window.words_up_to(H, n, WeightScheme.FILTRATION):
        degree = H.alphabet.filtration(word)
        checked += 1
        offending: List[str] = []
        for (left, right), coefficient in H.delta_word(word).items():
            if degree >= 1 and H.alphabet.filtration(right) <= degree - 1:
                continue
            if group_like(left):
                continue
            offending.append("{}*{}@{}".format(coefficient, H.display(left), H.display(right)))
        if offending:
            report.fail("Δ({}) has terms outside H⊗H_{} + H_0⊗H: {}".format(
                    H.display(word), degree - 1, ", ".join(offending)), H.display(word))
    report.details["words_checked"] = checked
    logger.info("filtration step check on %r up to %s: %s", H.name, n, report.status)
    return report
