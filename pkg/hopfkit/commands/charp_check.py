"""
The ``charp-check`` subcommand checks the characteristic-p bound: with ``H`` generated by
``H_n`` and ``l`` least with ``p^l >= n``, ``S^(2m_H·p^l) = id`` and ``|S|`` divides
``2m_H·p^l``. The binomial identity behind it is checked on every generator.

.. code-block:: bash

    $ hopfkit charp-check --family taft-wilson --p 3,5,7
"""
import argparse
import logging

from overrides import overrides

from hopfkit.commands.common import (add_output_arguments, add_presentation_arguments, add_window_arguments, emit,
                                     header, load_targets, untrusted_payload, window_for)
from hopfkit.commands.subcommand import Subcommand
from hopfkit.common.checks import ConfigurationError
from hopfkit.order.antipode_order import antipode_order
from hopfkit.order.theorems import admissible_exponents, check_char_p_binomial, check_char_p_bound
from hopfkit.scalars.field import characteristic
from hopfkit.structure.conjugation import m_H

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class CharpCheck(Subcommand):
    @overrides
    def add_subparser(self, name: str, parser: argparse._SubParsersAction) -> argparse.ArgumentParser:
        # pylint: disable=protected-access
        description = '''Check the characteristic-p bound on the antipode order and its binomial
                         mechanism.'''
        subparser = parser.add_parser(name, description=description, help='Check the characteristic-p bound.')
        add_presentation_arguments(subparser, multiple=True)
        subparser.add_argument('--degree', type=int, help='generation degree n (default: from the presentation)')
        add_window_arguments(subparser)
        add_output_arguments(subparser)
        subparser.set_defaults(func=charp_check_from_args)
        return subparser


def charp_check_from_args(args: argparse.Namespace) -> int:
    results, text = [], []
    for target in load_targets(args):
        if not target.trusted:
            results.append(untrusted_payload(target))
            text.extend([header(target), str(target.verification)])
            continue
        H = target.presentation  # pylint: disable=invalid-name
        p = characteristic(H.field)
        if p == 0:
            raise ConfigurationError("charp-check needs a field of positive characteristic, {!r} is over {}"
                                     .format(H.name, H.field))
        invariant = m_H(H, window=window_for(H, args), cutoff=args.cutoff)
        text.append(header(target))
        if not invariant.is_finite:
            message = "m_H = {}: the bound needs a finite m_H".format(invariant)
            results.append({"target": target.label, "passed": False, "error": message})
            text.append(message)
            continue
        n = args.degree if args.degree is not None else H.metadata.generation_degree
        order = antipode_order(H, args.cutoff)
        bound = check_char_p_bound(H, invariant.value, n, order=order, cutoff=args.cutoff)
        l = admissible_exponents(p, bound.details["n"])[0]
        reports = [bound] + [check_char_p_binomial(H, invariant.value, H.generator_poly(symbol), l)
                             for symbol in H.alphabet.symbols]
        results.append({"target": target.label,
                        "passed": all(report.passed for report in reports),
                        "reports": [report.to_json() for report in reports]})
        text.extend(str(report) for report in reports)
    return emit(args, "charp-check", results, text)
