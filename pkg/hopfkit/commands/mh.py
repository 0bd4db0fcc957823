"""
The ``mh`` subcommand computes ``m_H``, the lcm over the representative group-likes ``x``
of the order of conjugation by ``x`` on ``P_{x,1}``.

.. code-block:: bash

    $ hopfkit mh --family uq-borel --n 5
    == uq_borel_c5 over QQ(q_5) ==
    m_H = Finite(5)
        a_K = Finite(1)
        a_K^-1 = Finite(5)
    matches expected m_H = 5
"""
import argparse
import logging

from overrides import overrides

from hopfkit.commands.common import (add_output_arguments, add_presentation_arguments, add_window_arguments, emit,
                                     header, load_targets, untrusted_payload, window_for)
from hopfkit.commands.subcommand import Subcommand
from hopfkit.examples.families import expected_results
from hopfkit.structure.conjugation import m_H

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class MH(Subcommand):
    @overrides
    def add_subparser(self, name: str, parser: argparse._SubParsersAction) -> argparse.ArgumentParser:
        # pylint: disable=protected-access
        description = '''Compute m_H from the representative group-likes of the presentation. Unless the
                         representatives are declared exhaustive the value is a lower bound.'''
        subparser = parser.add_parser(name, description=description, help='Compute m_H.')
        add_presentation_arguments(subparser, multiple=True)
        add_window_arguments(subparser)
        add_output_arguments(subparser)
        subparser.set_defaults(func=mh_from_args)
        return subparser


def mh_from_args(args: argparse.Namespace) -> int:
    results, text = [], []
    for target in load_targets(args):
        if not target.trusted:
            results.append(untrusted_payload(target))
            text.extend([header(target), str(target.verification)])
            continue
        H = target.presentation  # pylint: disable=invalid-name
        window = window_for(H, args)
        result = m_H(H, window=window, cutoff=args.cutoff)
        entry = {"target": target.label, "m_H": result.to_json(), "window": str(window.spec), "passed": True}
        lines = [header(target), "m_H = {}".format(result)]
        lines.extend("    a_{} = {}".format(name, value) for name, value in sorted(result.components.items()))
        if target.spec is not None:
            expected = expected_results(target.spec)
            entry["expected"] = expected.to_json()
            entry["passed"] = expected.matches_m_H(result)
            verdict = "matches" if entry["passed"] else "DOES NOT MATCH"
            lines.append("{} expected m_H = {}".format(verdict, expected.to_json()["m_H"]))
        results.append(entry)
        text.extend(lines)
    return emit(args, "mh", results, text)
