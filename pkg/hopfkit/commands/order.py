"""
The ``order`` subcommand determines the order of the antipode, or certifies that it is
infinite.

.. code-block:: bash

    $ hopfkit order --file data/presentations/uq_borel_c5.json
    == uq_borel_c5 over QQ(q_5) ==
    Finite(10), matches expected 2n = 10

Built-in family members are compared with their predicted values. For files over a field
of characteristic zero the expectation is ``S = id`` or ``|S| = 2m_H``, with ``m_H`` computed
in the presentation's default window.
"""
import argparse
import logging
from typing import Any, Dict, List, Optional, Set, Tuple

from overrides import overrides

from hopfkit.commands.common import (Target, add_output_arguments, add_presentation_arguments, emit, header,
                                     load_targets, untrusted_payload)
from hopfkit.commands.subcommand import Subcommand
from hopfkit.common.checks import HopfkitError
from hopfkit.common.verdicts import OrderResult
from hopfkit.examples.families import Family, expected_results
from hopfkit.order.antipode_order import antipode_order
from hopfkit.order.theorems import check_order_parity, reverify_certificate
from hopfkit.scalars.field import FieldKind, characteristic
from hopfkit.structure.conjugation import m_H

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class Order(Subcommand):
    @overrides
    def add_subparser(self, name: str, parser: argparse._SubParsersAction) -> argparse.ArgumentParser:
        # pylint: disable=protected-access
        description = '''Compute the order of the antipode: Finite(m), InfiniteCertified with a
                         re-verifiable certificate, or UnknownBeyond(cutoff).'''
        subparser = parser.add_parser(name, description=description, help='Compute the antipode order.')
        add_presentation_arguments(subparser, multiple=True)
        add_output_arguments(subparser)
        subparser.set_defaults(func=order_from_args)
        return subparser


def _expectation(target: Target, cutoff: int) -> Optional[Tuple[str, Optional[Set[int]]]]:
    """
    A description of the expected order with the admissible finite values (``None`` for an
    infinite order), or ``None`` when nothing is predicted.
    """
    H = target.presentation  # pylint: disable=invalid-name
    if target.spec is not None:
        expected = expected_results(target.spec)
        if expected.order is None:
            return "|S| = ∞", None
        if target.spec.family == Family.UQ_BOREL and H.field.kind == FieldKind.CYCLOTOMIC:
            return "2n = {}".format(expected.order), {expected.order}
        return "|S| = {}".format(expected.order), {expected.order}
    if characteristic(H.field) != 0:
        return None
    try:
        invariant = m_H(H, cutoff=cutoff)
    except HopfkitError as error:
        logger.warning("no expectation for %r: %s", H.name, error)
        return None
    if invariant.is_infinite:
        return "|S| = ∞", None
    if invariant.is_finite and not invariant.lower_bound:
        name = "2n" if H.field.kind == FieldKind.CYCLOTOMIC and invariant.value == H.field.n else "2m_H"
        return "{} = {}".format(name, 2 * invariant.value), {1, 2 * invariant.value}
    return None


def _matches(result: OrderResult, expected: Optional[Set[int]]) -> bool:
    if expected is None:
        return result.is_infinite
    return result.is_finite and result.value in expected


def order_from_args(args: argparse.Namespace) -> int:
    results: List[Dict[str, Any]] = []
    text: List[str] = []
    for target in load_targets(args):
        if not target.trusted:
            results.append(untrusted_payload(target))
            text.extend([header(target), str(target.verification)])
            continue
        H = target.presentation  # pylint: disable=invalid-name
        result = antipode_order(H, args.cutoff)
        entry: Dict[str, Any] = {"target": target.label, "order": result.to_json(), "passed": True}
        line = str(result)
        if result.is_finite:
            check_order_parity(H, result)
        if result.is_infinite and result.certificate is not None:
            recheck = reverify_certificate(H, result)
            entry["certificate_check"] = recheck.to_json()
            entry["passed"] = recheck.passed
        expectation = _expectation(target, args.cutoff)
        if expectation is not None:
            description, expected = expectation
            matched = _matches(result, expected)
            entry["expected"] = description
            entry["passed"] = entry["passed"] and matched
            line += ", {} expected {}".format("matches" if matched else "DOES NOT MATCH", description)
        results.append(entry)
        text.extend([header(target), line])
    return emit(args, "order", results, text)
