"""
Spaces of (x, y)-skew-primitive elements, ``P_{x,y} = {h : Δ(h) = h⊗x + y⊗h}``, solved
exactly inside a basis window.
"""
import logging
from typing import Any, Dict, List, NamedTuple, Optional, Sequence

from hopfkit.algebra.alphabet import EMPTY_WORD, Word
from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.algebra.tensor import TensorPoly
from hopfkit.common.checks import ConfigurationError, HopfkitError
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.structure.linear_algebra import EchelonBasis, kernel, reduced_echelon
from hopfkit.structure.window import BasisWindow

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class SkewPrimitiveSpace(NamedTuple):
    x: Word
    y: Word
    basis: List[NcPoly]
    contains_x_minus_y: bool
    prime_basis: List[NcPoly]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self, presentation: HopfPresentation) -> Dict[str, Any]:
        return {"x": presentation.display(self.x),
                "y": presentation.display(self.y),
                "dimension": self.dimension,
                "basis": [str(h) for h in self.basis],
                "contains_x_minus_y": self.contains_x_minus_y,
                "prime_basis": [str(h) for h in self.prime_basis]}


def _skew_defect(presentation: HopfPresentation, element: NcPoly, x: Word, y: Word) -> TensorPoly:
    H = presentation  # pylint: disable=invalid-name
    expected = TensorPoly.from_pure([element, H.word(x)]) + TensorPoly.from_pure([H.word(y), element])
    return H.delta(element) - expected


def is_skew_primitive(presentation: HopfPresentation, element: NcPoly, x: Word, y: Word) -> bool:
    return _skew_defect(presentation, element, x, y).is_zero()


def _echelon_polys(presentation: HopfPresentation, polys: Sequence[NcPoly]) -> List[NcPoly]:
    H = presentation  # pylint: disable=invalid-name
    rows = reduced_echelon([dict(poly.items()) for poly in polys], H.field, H.alphabet.word_key)
    return [NcPoly(H.alphabet, H.field, row) for row in rows]


def _space_from_basis(presentation: HopfPresentation, x: Word, y: Word, basis: List[NcPoly]) -> SkewPrimitiveSpace:
    H = presentation  # pylint: disable=invalid-name
    for element in basis:
        if not is_skew_primitive(H, element, x, y):
            raise HopfkitError("solver returned {} which is not ({}, {})-skew-primitive".format(
                    element, H.display(x), H.display(y)))
    span = EchelonBasis(H.field, H.alphabet.word_key)
    difference = H.word(x) - H.word(y)
    contains = False
    if not difference.is_zero():
        contains = span_contains(H, basis, difference)
        if contains:
            span.add(dict(difference.items()))
    prime_basis = [element for element in basis if span.add(dict(element.items()))]
    return SkewPrimitiveSpace(tuple(x), tuple(y), basis, contains, prime_basis)


def span_contains(presentation: HopfPresentation, basis: Sequence[NcPoly], element: NcPoly) -> bool:
    span = EchelonBasis(presentation.field, presentation.alphabet.word_key)
    for vector in basis:
        span.add(dict(vector.items()))
    return span.contains(dict(element.items()))


def skew_primitives(presentation: HopfPresentation,
                    x: Sequence[str],
                    y: Sequence[str],
                    window: BasisWindow) -> SkewPrimitiveSpace:
    """
    The kernel of ``h ↦ Δ(h) − h⊗x − y⊗h`` on the span of ``window``.

    Parameters
    ----------
    presentation : ``HopfPresentation``
        Must be trusted.
    x, y : ``Word``
        Declared group-likes (or normal group-like words).
    window : ``BasisWindow``

    Returns
    -------
    The solution space in reduced echelon form (pivot at the largest word), with a
    complement of ``k(x − y)`` in ``prime_basis``.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("skew_primitives")
    x, y = H.alphabet.check_word(x), H.alphabet.check_word(y)
    for word in (x, y):
        if word not in H.group_likes and not H.is_group_like_word(word):
            raise ConfigurationError("{} is not a group-like of {!r}".format(H.display(word), H.name))
    images = []
    for word in window.words:
        element = H.word(word)
        images.append(dict(_skew_defect(H, element, x, y).items()))
    solutions = kernel(images, H.field)
    basis = [NcPoly(H.alphabet, H.field, [(window.words[i], c) for i, c in solution.items()])
             for solution in solutions]
    basis = _echelon_polys(H, [H.rules.normalize(element) for element in basis])
    logger.debug("P_{%s,%s} has dimension %s in a window of %s words", H.display(x), H.display(y),
                 len(basis), len(window))
    return _space_from_basis(H, x, y, basis)


def shift_to_x1(presentation: HopfPresentation, space: SkewPrimitiveSpace) -> SkewPrimitiveSpace:
    """
    Right multiplication by ``y⁻¹`` maps ``P_{x,y}`` onto ``P_{xy⁻¹,1}``; the image is
    re-verified element by element.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("shift_to_x1")
    y_inverse = H.inverse_of(space.y)
    if y_inverse is None:
        raise ConfigurationError("{} has no inverse in {!r}".format(H.display(space.y), H.name))
    shifted_x = H.multiply(H.word(space.x), y_inverse)
    if not shifted_x.is_monomial() or not shifted_x.coefficient(shifted_x.leading_word()).is_one():
        raise ConfigurationError("x·y⁻¹ = {} is not a single group-like word".format(shifted_x))
    images = [H.multiply(element, y_inverse) for element in space.basis]
    return _space_from_basis(H, shifted_x.leading_word(), EMPTY_WORD, _echelon_polys(H, images))
