"""
Checkers for the structural statements about the antipode: the order parity law, the
conjugation formula on ``P_{x,1}``, the filtration step and nilpotence of
``S^(2m_H) − id``, the arithmetic-progression claim, the characteristic-p bound and its
binomial mechanism, the order law for graded presentations, and the statements about
finite and central group-likes.

Each checker returns a :class:`~hopfkit.common.report.Report`; only kernel inconsistencies
(:class:`ParityViolation`) and failed preconditions raise.
"""
import logging
import math
from typing import Any, Dict, List, Optional

from hopfkit.algebra.alphabet import WeightScheme, Word
from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.common.checks import ConfigurationError, GradingViolation, ParityViolation
from hopfkit.common.report import Report
from hopfkit.common.settings import DEFAULT_SETTINGS
from hopfkit.common.verdicts import ArithmeticDrift, GeometricDrift, OrderResult
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.order.antipode_order import antipode_order
from hopfkit.order.orbits import antipode_power
from hopfkit.scalars.field import characteristic
from hopfkit.scalars.mult_order import mult_order
from hopfkit.structure.conjugation import m_H as compute_m_H
from hopfkit.structure.decomposition import filtration_step_check
from hopfkit.structure.skew_primitives import SkewPrimitiveSpace
from hopfkit.structure.window import BasisWindow

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


def _shifted(presentation: HopfPresentation, element: NcPoly, m_H: int) -> NcPoly:  # pylint: disable=invalid-name
    """
    ``(S^(2m_H) − id)(element)``.
    """
    return antipode_power(presentation, element, 2 * m_H) - element


def check_order_parity(presentation: HopfPresentation, result: OrderResult) -> Report:
    if not result.is_finite:
        raise ConfigurationError("order parity applies to finite orders, got {}".format(result))
    report = Report("|S| = 1 or |S| is even", {"order": result.value})
    if result.value != 1 and result.value % 2 == 1:
        raise ParityViolation("antipode order {} of {!r} is odd and larger than 1".format(result.value,
                                                                                           presentation.name))
    return report


def check_conjugation_formula(presentation: HopfPresentation, x: Word, space: SkewPrimitiveSpace, m: int) -> Report:
    """
    For every basis element ``h`` of ``P_{x,1}``: ``S(h) = −h x⁻¹`` and
    ``S^(2j)(h) = x^j h x^(−j)`` for ``j = 1..m``.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_conjugation_formula")
    x = H.alphabet.check_word(x)
    if tuple(space.x) != x or space.y:
        raise ConfigurationError("expected the space P_({},1), got P_({},{})".format(
                H.display(x), H.display(space.x), H.display(space.y)))
    report = Report("S(h) = −h·x⁻¹ and S^(2j)(h) = x^j·h·x^(−j) on P_({},1), j <= {}".format(H.display(x), m),
                    {"x": H.display(x), "m": m, "dimension": space.dimension})
    x_inverse = H.inverse_of(x)
    if x_inverse is None:
        return report.fail("x has no inverse", H.display(x))
    x_element = H.word(x)
    for h in space.basis:
        if H.antipode(h) != -H.multiply(h, x_inverse):
            report.fail("S(h) differs from −h·x⁻¹", h)
        current = h
        conjugated = h
        for j in range(1, m + 1):
            current = antipode_power(H, current, 2)
            conjugated = H.multiply(H.multiply(x_element, conjugated), x_inverse)
            if current != conjugated:
                report.fail("S^{}(h) = {} but x^{}·h·x^-{} = {}".format(2 * j, current, j, j, conjugated), h)
                break
    logger.info("conjugation formula on P_(%s,1) of %r: %s", H.display(x), H.name, report.status)
    return report


def check_taft_wilson_step(presentation: HopfPresentation, m_H: int, n: int,  # pylint: disable=invalid-name
                           window: BasisWindow) -> Report:
    """
    ``(S^(2m_H) − id)(H_d) ⊆ H_(d−1)`` for every window word of filtration degree ``d <= n``,
    and ``(S^(2m_H) − id)(H_1) = 0``. ``H_d`` is the span of the normal words of declared
    filtration degree at most ``d``.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_taft_wilson_step")
    report = Report("(S^(2m_H) − id)(H_d) ⊆ H_(d−1) for d <= {}, and (S^(2m_H) − id)(H_1) = 0".format(n),
                    {"m_H": m_H, "n": n, "window": str(window.spec)})
    report.absorb(filtration_step_check(H, n, window))
    words = window.words_up_to(H, n, WeightScheme.FILTRATION)
    for word in words:
        degree = H.alphabet.filtration(word)
        image = _shifted(H, H.word(word), m_H)
        if degree <= 1:
            if not image.is_zero():
                report.fail("(S^{} − id)({}) = {} is not 0".format(2 * m_H, H.display(word), image), H.display(word))
            continue
        too_high = [w for w in image if H.alphabet.filtration(w) > degree - 1]
        if too_high:
            report.fail("(S^{} − id)({}) = {} leaves H_{}".format(2 * m_H, H.display(word), image, degree - 1),
                        H.display(word))
    report.details["words_checked"] = len(words)
    logger.info("filtration step of S^%s − id on %r up to %s: %s", 2 * m_H, H.name, n, report.status)
    return report


def check_nilpotence(presentation: HopfPresentation, m_H: int, n: int,  # pylint: disable=invalid-name
                     window: BasisWindow) -> Report:
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_nilpotence")
    report = Report("(S^(2m_H) − id)^{} vanishes on H_{}".format(n, n),
                    {"m_H": m_H, "n": n, "window": str(window.spec)})
    words = window.words_up_to(H, n, WeightScheme.FILTRATION)
    for word in words:
        image = H.word(word)
        for _ in range(n):
            image = _shifted(H, image, m_H)
            if image.is_zero():
                break
        if not image.is_zero():
            report.fail("(S^{} − id)^{}({}) = {}".format(2 * m_H, n, H.display(word), image), H.display(word))
    report.details["words_checked"] = len(words)
    logger.info("nilpotence of S^%s − id on H_%s of %r: %s", 2 * m_H, n, H.name, report.status)
    return report


def check_drift_progression(presentation: HopfPresentation, h: NcPoly, m_H: int,  # pylint: disable=invalid-name
                   t_max: int) -> Report:
    """
    With ``r = S^(2m_H)(h) − h``, checks ``S^(2m_H·t)(h) = h + t·r`` for ``t = 1..t_max``.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_drift_progression")
    residual = _shifted(H, h, m_H)
    report = Report("S^(2m_H·t)(h) = h + t·r for t <= {}".format(t_max),
                    {"h": str(h), "m_H": m_H, "residual": str(residual), "t_max": t_max})
    current = h
    for t in range(1, t_max + 1):
        current = antipode_power(H, current, 2 * m_H)
        expected = h + residual.scale(t)
        if current != expected:
            report.fail("S^{}(h) = {} but h + {}·r = {}".format(2 * m_H * t, current, t, expected), t)
            break
    return report


def admissible_exponents(p: int, n: int) -> List[int]:
    """
    Every ``l >= 0`` with ``p^l >= n >= p^(l−1)``, always including the least ``l`` with
    ``p^l >= n``.
    """
    least = 0
    while p ** least < n:
        least += 1
    exponents = [least]
    l = least + 1
    while n * p >= p ** l:
        exponents.append(l)
        l += 1
    return exponents


def check_char_p_bound(presentation: HopfPresentation,
                       m_H: int,  # pylint: disable=invalid-name
                       n: Optional[int] = None,
                       order: Optional[OrderResult] = None,
                       cutoff: int = DEFAULT_SETTINGS.cutoff) -> Report:
    """
    In characteristic ``p``, with ``H`` generated by ``H_n`` and ``l`` least with ``p^l >= n``,
    checks ``S^(2m_H·p^l) = id`` on the generators and that ``|S|`` divides ``2m_H·p^l``.

    Parameters
    ----------
    n : ``int``, optional
        The generation degree. Defaults to the one recorded in the presentation metadata.
    order : ``OrderResult``, optional
        A previously computed antipode order; computed with ``cutoff`` when omitted.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_char_p_bound")
    p = characteristic(H.field)
    if p == 0:
        raise ConfigurationError("the characteristic-p bound needs a field of positive characteristic, got {}"
                                 .format(H.field))
    if n is None:
        n = H.metadata.generation_degree
    if n is None:
        raise ConfigurationError("{!r} records no generation degree; pass n explicitly".format(H.name))
    exponents = admissible_exponents(p, n)
    l = exponents[0]
    bound = 2 * m_H * p ** l
    report = Report("S^(2m_H·p^l) = id with p^l >= n >= p^(l−1), and |S| divides 2m_H·p^l",
                    {"p": p, "n": n, "m_H": m_H, "l": l, "bound": bound})
    for symbol in H.alphabet.symbols:
        generator = H.generator_poly(symbol)
        if antipode_power(H, generator, bound) != generator:
            report.fail("S^{} does not fix the generator".format(bound), symbol)
    order = order or antipode_order(H, cutoff)
    report.details["order"] = str(order)
    admissible: List[Dict[str, Any]] = []
    for exponent in exponents:
        candidate = 2 * m_H * p ** exponent
        entry: Dict[str, Any] = {"l": exponent, "bound": candidate}
        if order.is_finite:
            entry["attained"] = order.value == candidate
            entry["strictly_below"] = order.value < candidate
        admissible.append(entry)
    report.details["admissible"] = admissible
    if not order.is_finite:
        report.fail("the antipode order is not finite", order)
    elif bound % order.value != 0:
        report.fail("|S| = {} does not divide {}".format(order.value, bound), order)
    else:
        report.details["attained"] = order.value == bound
    logger.info("characteristic-%s bound %s on %r: %s (order %s)", p, bound, H.name, report.status, order)
    return report


def check_char_p_binomial(presentation: HopfPresentation, m_H: int, h: NcPoly,  # pylint: disable=invalid-name
                          l: int = 1) -> Report:
    """
    ``(S^(2m_H) − id)^(p^l)(h) = S^(2m_H·p^l)(h) − h``, both sides evaluated directly.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_char_p_binomial")
    p = characteristic(H.field)
    if p == 0:
        raise ConfigurationError("the binomial identity needs positive characteristic, got {}".format(H.field))
    exponent = p ** l
    report = Report("(S^(2m_H) − id)^(p^l)(h) = S^(2m_H·p^l)(h) − h", {"p": p, "l": l, "m_H": m_H, "h": str(h)})
    left = h
    for _ in range(exponent):
        left = _shifted(H, left, m_H)
    right = antipode_power(H, h, 2 * m_H * exponent) - h
    if left != right:
        report.fail("left side {} differs from right side {}".format(left, right), h)
    return report


def check_s_squared_identity_on_group_likes(presentation: HopfPresentation, window: BasisWindow) -> Report:
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_s_squared_identity_on_group_likes")
    group = H.group_like_words(window.words)
    report = Report("S² = id on the group-likes of the window", {"window": str(window.spec)})
    for word in group:
        element = H.word(word)
        if antipode_power(H, element, 2) != element:
            report.fail("S² moves a group-like", H.display(word))
    report.details["group_likes"] = [H.display(word) for word in group]
    return report


def check_grading(presentation: HopfPresentation, window: BasisWindow) -> None:
    """
    Raises :class:`GradingViolation` unless the rules are homogeneous for the grade weights,
    ``Δ`` is graded and ``S`` preserves grades on the window words.
    """
    H = presentation  # pylint: disable=invalid-name
    grade = H.alphabet.grade
    for rule in H.rules.rules:
        for word in rule.rhs:
            if grade(word) != grade(rule.lhs):
                raise GradingViolation("relation is not homogeneous ({} vs {})".format(grade(rule.lhs), grade(word)),
                                       str(rule))
    for word in window:
        for left, right in H.delta_word(word).keys():
            if grade(left) + grade(right) != grade(word):
                raise GradingViolation("Δ does not preserve the grading", "Δ({})".format(H.display(word)))
        for image in H.antipode_word(word):
            if grade(image) != grade(word):
                raise GradingViolation("S does not preserve the grading", "S({})".format(H.display(word)))


def check_graded_order_law(presentation: HopfPresentation,
                           window: BasisWindow,
                           m_H: Optional[OrderResult] = None,  # pylint: disable=invalid-name
                           order: Optional[OrderResult] = None,
                           cutoff: int = DEFAULT_SETTINGS.cutoff) -> Report:
    """
    For a graded presentation with ``m_H`` finite: ``|S| = 1`` or ``|S| = 2m_H``.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_graded_order_law")
    check_grading(H, window)
    m_H = m_H or compute_m_H(H, window=window, cutoff=cutoff)
    order = order or antipode_order(H, cutoff)
    report = Report("S = id or |S| = 2m_H for a graded presentation", {"m_H": str(m_H), "order": str(order)})
    if not m_H.is_finite:
        report.details["applies"] = False
        return report
    report.details["applies"] = True
    if not order.is_finite or order.value not in (1, 2 * m_H.value):
        report.fail("|S| is neither 1 nor 2m_H = {}".format(2 * m_H.value), order)
    logger.info("graded order law on %r: %s", H.name, report.status)
    return report


def group_like_order(presentation: HopfPresentation,
                     word: Word,
                     limit: int = DEFAULT_SETTINGS.inverse_search_limit) -> Optional[int]:
    """
    The least ``k <= limit`` with ``g^k = 1``, or ``None`` when there is none.
    """
    H = presentation  # pylint: disable=invalid-name
    element = H.word(word)
    one = H.one()
    power = element
    for k in range(1, limit + 1):
        if power == one:
            return k
        power = H.multiply(power, element)
    return None


def central_group_likes(presentation: HopfPresentation) -> bool:
    """
    Whether every declared group-like commutes with every generator.
    """
    H = presentation  # pylint: disable=invalid-name
    for word in H.group_likes:
        g = H.word(word)
        for symbol in H.alphabet.symbols:
            generator = H.generator_poly(symbol)
            if H.multiply(g, generator) != H.multiply(generator, g):
                return False
    return True


def check_group_exponent_bound(presentation: HopfPresentation,
                               window: BasisWindow,
                               m_H: Optional[OrderResult] = None,  # pylint: disable=invalid-name
                               cutoff: int = DEFAULT_SETTINGS.cutoff) -> Report:
    """
    When every declared group-like has finite order: ``m_H`` is finite and divides the
    exponent of ``G(H)``.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_group_exponent_bound")
    orders = {H.display(word): group_like_order(H, word) for word in H.group_likes}
    report = Report("m_H divides exp G(H) when G(H) is finite", {"orders": dict(orders)})
    if any(order is None for order in orders.values()):
        report.details["applies"] = False
        return report
    exponent = 1
    for order in orders.values():
        exponent = exponent * order // math.gcd(exponent, order)
    m_H = m_H or compute_m_H(H, window=window, cutoff=cutoff)
    report.details.update({"applies": True, "exponent": exponent, "m_H": str(m_H)})
    if not m_H.is_finite:
        report.fail("m_H is not finite", m_H)
    elif exponent % m_H.value != 0:
        report.fail("m_H = {} does not divide exp G(H) = {}".format(m_H.value, exponent), m_H)
    logger.info("group exponent bound on %r: %s", H.name, report.status)
    return report


def check_central_group_likes(presentation: HopfPresentation,
                              window: BasisWindow,
                              m_H: Optional[OrderResult] = None,  # pylint: disable=invalid-name
                              order: Optional[OrderResult] = None,
                              cutoff: int = DEFAULT_SETTINGS.cutoff) -> Report:
    """
    When the group-likes are central: ``m_H = 1``, and ``|S|`` divides ``2`` or is infinite
    in characteristic zero, while in characteristic ``p`` it divides ``2p^l`` for some ``l``.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("check_central_group_likes")
    p = characteristic(H.field)
    statement = "central G(H): m_H = 1 and |S| divides {}".format("2p^l" if p else "2 or |S| = ∞")
    report = Report(statement, {"characteristic": p})
    if not central_group_likes(H):
        report.details["applies"] = False
        return report
    m_H = m_H or compute_m_H(H, window=window, cutoff=cutoff)
    order = order or antipode_order(H, cutoff)
    report.details.update({"applies": True, "m_H": str(m_H), "order": str(order)})
    if not m_H.is_finite or m_H.value != 1:
        report.fail("m_H = {} for central group-likes".format(m_H), m_H)
    if order.is_unknown:
        report.warn("the antipode order is unknown beyond {}".format(order.cutoff))
    elif p == 0:
        if order.is_finite and order.value not in (1, 2):
            report.fail("|S| = {} is finite but does not divide 2".format(order.value), order)
    elif not order.is_finite:
        report.fail("|S| is infinite in characteristic {}".format(p), order)
    else:
        residue = order.value
        while residue % p == 0:
            residue //= p
        if residue not in (1, 2):
            report.fail("|S| = {} does not divide 2p^l for any l".format(order.value), order)
    logger.info("central group-like statements on %r: %s", H.name, report.status)
    return report


def reverify_certificate(presentation: HopfPresentation,
                         result: OrderResult,
                         horizon: int = DEFAULT_SETTINGS.claim_horizon) -> Report:
    """
    Re-evaluates an infinite-order certificate from scratch.
    """
    H = presentation  # pylint: disable=invalid-name
    H.require_trusted("reverify_certificate")
    certificate = result.certificate
    report = Report("the infinite-order certificate re-verifies", {"certificate": str(certificate)})
    if isinstance(certificate, GeometricDrift):
        generator = H.generator_poly(certificate.generator)
        if antipode_power(H, generator, 2) != generator.scale(certificate.ratio):
            report.fail("S² does not act by the ratio", certificate.generator)
        if not mult_order(certificate.ratio).is_infinite:
            report.fail("the ratio has finite multiplicative order", certificate.ratio)
    elif isinstance(certificate, ArithmeticDrift):
        generator = H.generator_poly(certificate.generator)
        if characteristic(H.field) != 0:
            report.fail("arithmetic drift only certifies in characteristic 0", H.field)
        if certificate.residual.is_zero():
            report.fail("the residual is zero", certificate.generator)
        current = generator
        for t in range(1, horizon + 1):
            current = antipode_power(H, current, certificate.step)
            if current != generator + certificate.residual.scale(t):
                report.fail("the progression breaks at t = {}".format(t), certificate.generator)
                break
    else:
        report.fail("no certificate to verify", result)
    return report
