"""
Powers of the antipode and classification of ``S²``-orbits.
"""
import logging
from typing import Any, Dict, List, NamedTuple, Optional

from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.common.settings import DEFAULT_SETTINGS
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.scalars.scalar import Scalar

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


def antipode_power(presentation: HopfPresentation, element: NcPoly, k: int) -> NcPoly:
    """
    ``S^k(element)``, normalized after every application.
    """
    presentation.require_trusted("antipode_power")
    if k < 0:
        raise ValueError("antipode_power needs k >= 0, got {}".format(k))
    current = element
    for _ in range(k):
        current = presentation.antipode(current)
    return current


def s_squared_orbit(presentation: HopfPresentation, element: NcPoly, steps: int) -> List[NcPoly]:
    """
    ``[h, S²(h), S⁴(h), …, S^(2·steps)(h)]``.
    """
    orbit = [element]
    for _ in range(steps):
        orbit.append(antipode_power(presentation, orbit[-1], 2))
    return orbit


class OrbitClassification(NamedTuple):
    """
    One of ``Periodic`` (``S^(2·period)(h) = h``), ``Geometric`` (``S²(h) = ratio·h``),
    ``Arithmetic`` (``S^(2·step·t)(h) = h + t·residual`` for every examined ``t``) or
    ``Unclassified``.
    """
    kind: str
    period: Optional[int] = None
    ratio: Optional[Scalar] = None
    residual: Optional[NcPoly] = None
    step: Optional[int] = None

    PERIODIC = "Periodic"
    GEOMETRIC = "Geometric"
    ARITHMETIC = "Arithmetic"
    UNCLASSIFIED = "Unclassified"

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"kind": self.kind}
        if self.period is not None:
            document["period"] = self.period
        if self.ratio is not None:
            document["ratio"] = str(self.ratio)
        if self.residual is not None:
            document["residual"] = str(self.residual)
            document["step"] = self.step
        return document

    def __str__(self) -> str:
        if self.kind == self.PERIODIC:
            return "Periodic({})".format(self.period)
        if self.kind == self.GEOMETRIC:
            return "Geometric({})".format(self.ratio)
        if self.kind == self.ARITHMETIC:
            return "Arithmetic({}, step {})".format(self.residual, self.step)
        return self.kind


def classify_orbit(presentation: HopfPresentation,
                   element: NcPoly,
                   depth: int = DEFAULT_SETTINGS.orbit_depth) -> OrbitClassification:
    """
    Classifies the ``S²``-orbit of ``element`` from its first ``depth`` iterates. Periodicity
    is tested first; an arithmetic progression needs at least two steps to be recognised.
    """
    orbit = s_squared_orbit(presentation, element, depth)
    for period in range(1, depth + 1):
        if orbit[period] == element:
            return OrbitClassification(OrbitClassification.PERIODIC, period=period)
    if not element.is_zero():
        leading = element.leading_word()
        ratio = orbit[1].coefficient(leading) / element.coefficient(leading)
        if orbit[1] == element.scale(ratio):
            return OrbitClassification(OrbitClassification.GEOMETRIC, ratio=ratio)
    for step in range(1, depth // 2 + 1):
        residual = orbit[step] - element
        if residual.is_zero():
            continue
        if all(orbit[step * t] == element + residual.scale(t) for t in range(2, depth // step + 1)):
            return OrbitClassification(OrbitClassification.ARITHMETIC, residual=residual, step=step)
    return OrbitClassification(OrbitClassification.UNCLASSIFIED)
