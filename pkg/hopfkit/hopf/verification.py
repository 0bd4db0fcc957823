"""
Exact verification of the bialgebra and antipode axioms on generators and relations.

Δ and ε are algebra maps and S is an anti-algebra map, so once they are well defined on
the relations and satisfy the axioms on generators they satisfy them everywhere.
"""
import logging

from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.algebra.tensor import TensorPoly
from hopfkit.common.report import Report
from hopfkit.common.settings import DEFAULT_SETTINGS
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.rewrite.confluence import confluence_report

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


def _attach_confluence_warning(presentation: HopfPresentation, report: Report, depth: int) -> None:
    problems = confluence_report(presentation.rules, depth)
    report.details["non_joinable_overlaps"] = len(problems)
    if problems:
        message = "relations are not confluent up to length {} ({} non-joinable ambiguities, first: {}); " \
                  "checks on relations are only sound up to this report".format(depth, len(problems), problems[0])
        report.warn(message)
        logger.warning(message)


def verify_bialgebra(presentation: HopfPresentation,
                     confluence_depth: int = DEFAULT_SETTINGS.confluence_depth) -> Report:
    """
    Checks that Δ and ε respect every relation, that Δ is coassociative and ε is a counit
    on every generator, and that every declared group-like is an invertible group-like.
    """
    H = presentation  # pylint: disable=invalid-name
    display = H.display
    report = Report("Δ and ε define a bialgebra structure on the quotient",
                    {"generators": len(H.alphabet), "relations": len(H.rules),
                     "group_likes": len(H.group_likes)})

    for rule in H.rules:
        if H.delta_word(rule.lhs) != H.delta(rule.rhs):
            report.fail("Δ does not respect relation {}".format(rule),
                        "Δ({}) = {} but Δ(rhs) = {}".format(display(rule.lhs), H.delta_word(rule.lhs),
                                                           H.delta(rule.rhs)))
        if H.counit_word(rule.lhs) != H.counit(rule.rhs):
            report.fail("ε does not respect relation {}".format(rule),
                        "ε({}) = {} but ε(rhs) = {}".format(display(rule.lhs), H.counit_word(rule.lhs),
                                                           H.counit(rule.rhs)))

    for symbol in H.alphabet.symbols:
        coproduct = H.coproduct[symbol]
        left = coproduct.expand_slot(0, H.delta_word)
        right = coproduct.expand_slot(1, H.delta_word)
        if left != right:
            report.fail("coassociativity fails on {}".format(symbol),
                        "(Δ⊗id)Δ = {} but (id⊗Δ)Δ = {}".format(left, right))
        generator = H.generator_poly(symbol)
        for slot, label in ((0, "(ε⊗id)Δ"), (1, "(id⊗ε)Δ")):
            contracted = coproduct.contract_slot(slot, H.counit_word)
            if contracted != generator:
                report.fail("counit law fails on {}".format(symbol), "{}({}) = {}".format(label, symbol, contracted))

    for word in H.group_likes:
        element = H.word(word)
        if H.delta(element) != TensorPoly.from_pure([element, element]):
            report.fail("declared group-like is not group-like", "Δ({}) = {}".format(display(word), H.delta(element)))
        if not H.counit(element).is_one():
            report.fail("declared group-like has ε ≠ 1", "ε({}) = {}".format(display(word), H.counit(element)))
        if H.inverse_of(word) is None:
            report.fail("declared group-like has no inverse", display(word))

    _attach_confluence_warning(H, report, confluence_depth)
    H._bialgebra_verified = report.passed  # pylint: disable=protected-access
    if not report.passed:
        H._trusted = False  # pylint: disable=protected-access
    logger.info("verify_bialgebra on %r: %s", H.name, report.status)
    return report


def verify_antipode(presentation: HopfPresentation,
                    confluence_depth: int = DEFAULT_SETTINGS.confluence_depth) -> Report:
    """
    Checks ``m(S⊗id)Δ(g) = ε(g)1 = m(id⊗S)Δ(g)`` on every generator and ``S(lhs) = S(rhs)``
    on every relation. The presentation is marked trusted when this and
    :func:`verify_bialgebra` both pass; the latter is run first if it has not been.
    """
    H = presentation  # pylint: disable=invalid-name
    report = Report("S is an antipode for the bialgebra",
                    {"generators": len(H.alphabet), "relations": len(H.rules)})
    if not H._bialgebra_verified:  # pylint: disable=protected-access
        report.absorb(verify_bialgebra(H, confluence_depth))
    else:
        _attach_confluence_warning(H, report, confluence_depth)

    for symbol in H.alphabet.symbols:
        coproduct = H.coproduct[symbol]
        expected = NcPoly.from_scalar(H.alphabet, H.field, H.counit_values[symbol])
        left = coproduct.map_slot(0, H.antipode_word).multiply_slots(H.rules)
        right = coproduct.map_slot(1, H.antipode_word).multiply_slots(H.rules)
        if left != expected:
            report.fail("m(S⊗id)Δ ≠ ε·1 on {}".format(symbol), "m(S⊗id)Δ({}) = {}".format(symbol, left))
        if right != expected:
            report.fail("m(id⊗S)Δ ≠ ε·1 on {}".format(symbol), "m(id⊗S)Δ({}) = {}".format(symbol, right))

    for rule in H.rules:
        if H.antipode_word(rule.lhs) != H.antipode(rule.rhs):
            report.fail("S does not respect relation {}".format(rule),
                        "S({}) = {} but S(rhs) = {}".format(H.display(rule.lhs), H.antipode_word(rule.lhs),
                                                           H.antipode(rule.rhs)))

    H._trusted = report.passed and H._bialgebra_verified  # pylint: disable=protected-access
    logger.info("verify_antipode on %r: %s", H.name, report.status)
    return report


def verify(presentation: HopfPresentation,
           confluence_depth: int = DEFAULT_SETTINGS.confluence_depth) -> Report:
    """
    Both axiom suites in one report; the presentation ends up trusted exactly when it passes.
    """
    report = Report("the presentation defines a Hopf algebra")
    bialgebra = verify_bialgebra(presentation, confluence_depth)
    antipode = verify_antipode(presentation, confluence_depth)
    report.absorb(bialgebra).absorb(antipode)
    report.details.update({"bialgebra": bialgebra.status, "antipode": antipode.status,
                           "trusted": presentation.trusted})
    return report
