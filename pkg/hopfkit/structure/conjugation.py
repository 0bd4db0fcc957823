"""
The conjugation action of group-likes on ``P_{x,1}`` and the invariants built from it:
``a_x``, the order of conjugation by ``x`` on ``P_{x,1}``, and ``m_H``, the lcm of the
``a_x``.
"""
import logging
import math
from typing import Dict, List, Optional, Sequence

from hopfkit.algebra.alphabet import EMPTY_WORD, Word
from hopfkit.common.checks import ConfigurationError, NotInvariant
from hopfkit.common.settings import DEFAULT_SETTINGS
from hopfkit.common.verdicts import OrderResult
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.scalars.mult_order import mult_order
from hopfkit.structure.linear_algebra import (EchelonBasis, Matrix, identity_matrix, is_diagonal, is_identity,
                                              matrix_mul)
from hopfkit.structure.skew_primitives import SkewPrimitiveSpace, skew_primitives
from hopfkit.structure.window import BasisWindow

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


def conjugation_matrix(presentation: HopfPresentation, x: Sequence[str], space: SkewPrimitiveSpace) -> Matrix:
    """
    The matrix of ``h ↦ x h x⁻¹`` on ``space`` (column ``j`` holds the image of basis element
    ``j``). Raises :class:`NotInvariant` when an image leaves the space, which inside a
    window means the window is too small.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("conjugation_matrix")
    x = H.alphabet.check_word(x)
    if space.y != EMPTY_WORD:
        raise ConfigurationError("conjugation_matrix needs a P_(x,1) space, got y = {}".format(H.display(space.y)))
    x_inverse = H.inverse_of(x)
    if x_inverse is None:
        raise ConfigurationError("{} is not invertible in {!r}".format(H.display(x), H.name))
    x_element = H.word(x)
    span = EchelonBasis(H.field, H.alphabet.word_key)
    for index, element in enumerate(space.basis):
        span.add(dict(element.items()), index)
    size = len(space.basis)
    columns: List[List] = []
    for element in space.basis:
        image = H.multiply(H.multiply(x_element, element), x_inverse)
        coordinates = span.express(dict(image.items()))
        if coordinates is None:
            raise NotInvariant("conjugating {} by {} gives {}, outside the computed space; enlarge the window"
                               .format(element, H.display(x), image))
        columns.append([coordinates.get(i, H.field.zero()) for i in range(size)])
    return [[columns[j][i] for j in range(size)] for i in range(size)]


def matrix_order(presentation: HopfPresentation, matrix: Matrix, cutoff: int) -> OrderResult:
    """
    Smallest ``m >= 1`` with ``matrix^m = 1``. Diagonal matrices are decided exactly from the
    multiplicative orders of their entries; other matrices are powered up to ``cutoff``.
    """
    field = presentation.field
    if not matrix:
        return OrderResult.finite(1)
    if is_diagonal(matrix):
        orders = [mult_order(matrix[i][i]) for i in range(len(matrix))]
        if any(order.is_infinite for order in orders):
            return OrderResult.infinite()
        return OrderResult.finite(_lcm(order.value for order in orders))
    power = matrix
    for exponent in range(1, cutoff + 1):
        if is_identity(power):
            return OrderResult.finite(exponent)
        power = matrix_mul(power, matrix, field)
    return OrderResult.unknown(cutoff)


def a_x(presentation: HopfPresentation,
        x: Sequence[str],
        window: BasisWindow,
        cutoff: int = DEFAULT_SETTINGS.cutoff) -> OrderResult:
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("a_x")
    space = skew_primitives(H, x, EMPTY_WORD, window)
    result = matrix_order(H, conjugation_matrix(H, x, space), cutoff)
    logger.debug("a_%s = %s on a space of dimension %s", H.display(tuple(x)), result, space.dimension)
    return result


def m_H(presentation: HopfPresentation,  # pylint: disable=invalid-name
        representatives: Optional[Sequence[Word]] = None,
        window: Optional[BasisWindow] = None,
        cutoff: int = DEFAULT_SETTINGS.cutoff,
        exhaustive: Optional[bool] = None) -> OrderResult:
    """
    ``lcm{a_x}`` over ``representatives`` (by default the presentation's own). Unless the
    representatives are asserted exhaustive, a finite value is flagged as a lower bound.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("m_H")
    metadata = H.metadata
    if representatives is None:
        representatives = metadata.representatives or H.group_likes
        exhaustive = metadata.exhaustive if exhaustive is None else exhaustive
    representatives = [tuple(word) for word in representatives]
    for word in representatives:
        if word not in H.group_likes:
            raise ConfigurationError("{} is not a declared group-like".format(H.display(word)))
    window = window or BasisWindow.build(H)
    components: Dict[str, OrderResult] = {H.display(word): a_x(H, word, window, cutoff) for word in representatives}
    if any(result.is_infinite for result in components.values()):
        result = OrderResult.infinite()
    elif any(result.is_unknown for result in components.values()):
        result = OrderResult.unknown(cutoff)
    else:
        result = OrderResult.finite(_lcm(value.value for value in components.values()),
                                    lower_bound=not exhaustive)
    if result.lower_bound:
        logger.warning("m_H = %s is a lower bound: representatives %s are not asserted exhaustive",
                       result.value, ", ".join(components))
    logger.info("m_H of %r = %s from %s", H.name, result,
                ", ".join("a_{} = {}".format(name, value) for name, value in components.items()))
    result.components = components
    return result


def _lcm(values) -> int:
    result = 1
    for value in values:
        result = result * value // math.gcd(result, value)
    return result
