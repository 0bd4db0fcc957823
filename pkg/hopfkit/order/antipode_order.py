"""
The order of the antipode.

``S = id`` is decided by testing generators together with a commutativity probe; every
other finite order is even, and since ``S²`` is an algebra map, ``S^(2j) = id`` exactly
when every generator's ``S²``-period divides ``j``. Generator orbits are classified first
(geometric and arithmetic drifts certify infinite order, a geometric ratio of finite order
gives the period outright) and only the remaining generators are iterated.
"""
import logging
import math
from typing import Dict, Optional

from hopfkit.common.settings import DEFAULT_SETTINGS, AnalysisSettings
from hopfkit.common.verdicts import ArithmeticDrift, GeometricDrift, OrderResult
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.order.orbits import OrbitClassification, antipode_power, classify_orbit
from hopfkit.scalars.field import characteristic
from hopfkit.scalars.mult_order import mult_order

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


def is_identity_antipode(presentation: HopfPresentation) -> bool:
    H = presentation  # pylint: disable=invalid-name
    fixes_generators = all(H.antipode_word((symbol,)) == H.generator_poly(symbol) for symbol in H.alphabet.symbols)
    return fixes_generators and H.is_commutative()


def _brute_force_period(presentation: HopfPresentation, symbol: str, max_steps: int) -> Optional[int]:
    generator = presentation.generator_poly(symbol)
    current = generator
    for step in range(1, max_steps + 1):
        current = antipode_power(presentation, current, 2)
        if current == generator:
            return step
    return None


def generator_periods(presentation: HopfPresentation,
                      settings: AnalysisSettings = DEFAULT_SETTINGS) -> Dict[str, object]:
    """
    For each generator either its exact ``S²``-period, an infinite-order certificate, or
    ``None`` when neither was found within the cutoff.
    """
    H = presentation  # pylint: disable=invalid-name
    zero_characteristic = characteristic(H.field) == 0
    periods: Dict[str, object] = {}
    for symbol in H.alphabet.symbols:
        orbit = classify_orbit(H, H.generator_poly(symbol), settings.orbit_depth)
        logger.debug("S²-orbit of %s: %s", symbol, orbit)
        if orbit.kind == OrbitClassification.PERIODIC:
            periods[symbol] = orbit.period
            continue
        if orbit.kind == OrbitClassification.GEOMETRIC:
            order = mult_order(orbit.ratio)
            if order.is_infinite:
                periods[symbol] = GeometricDrift(symbol, orbit.ratio)
                continue
            periods[symbol] = order.value
            continue
        if orbit.kind == OrbitClassification.ARITHMETIC and zero_characteristic:
            periods[symbol] = ArithmeticDrift(symbol, orbit.residual, 2 * orbit.step)
            continue
        periods[symbol] = _brute_force_period(H, symbol, settings.cutoff // 2)
    return periods


def antipode_order(presentation: HopfPresentation,
                   cutoff: Optional[int] = None,
                   settings: AnalysisSettings = DEFAULT_SETTINGS) -> OrderResult:
    """
    ``Finite(m)``, ``InfiniteCertified`` with a drift certificate, or ``UnknownBeyond(cutoff)``.
    The finite value is the one an even-power sweep up to ``cutoff`` would find.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("antipode_order")
    if cutoff is not None:
        settings = settings._replace(cutoff=cutoff)
    if is_identity_antipode(H):
        result = OrderResult.finite(1)
        logger.info("antipode order of %r: %s", H.name, result)
        return result
    periods = generator_periods(H, settings)
    for value in periods.values():
        if isinstance(value, (GeometricDrift, ArithmeticDrift)):
            result = OrderResult.infinite(value)
            logger.info("antipode order of %r: %s", H.name, result)
            return result
    if any(value is None for value in periods.values()):
        result = OrderResult.unknown(settings.cutoff)
    else:
        half = 1
        for value in periods.values():
            half = half * value // math.gcd(half, value)
        order = 2 * half
        result = OrderResult.finite(order) if order <= settings.cutoff else OrderResult.unknown(settings.cutoff)
    logger.info("antipode order of %r: %s", H.name, result)
    return result
