"""
The ``skewprim`` subcommand lists a basis of ``P_{x,y} = {h : Δ(h) = h⊗x + y⊗h}`` inside a
basis window.

.. code-block:: bash

    $ hopfkit skewprim --family uq-borel --n 3 --x K^-1 --y 1
"""
import argparse
import logging

from overrides import overrides

from hopfkit.algebra.expressions import parse_word
from hopfkit.commands.common import (add_output_arguments, add_presentation_arguments, add_window_arguments, emit,
                                     header, load_targets, untrusted_payload, window_for)
from hopfkit.commands.subcommand import Subcommand
from hopfkit.structure.skew_primitives import skew_primitives

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class SkewPrim(Subcommand):
    @overrides
    def add_subparser(self, name: str, parser: argparse._SubParsersAction) -> argparse.ArgumentParser:
        # pylint: disable=protected-access
        description = '''Solve for the (x, y)-skew-primitive elements among the normal words of a
                         basis window.'''
        subparser = parser.add_parser(name, description=description, help='List skew-primitive elements.')
        add_presentation_arguments(subparser, multiple=True)
        subparser.add_argument('--x', type=str, default='1', help='the group-like x, e.g. K^-1')
        subparser.add_argument('--y', type=str, default='1', help='the group-like y')
        add_window_arguments(subparser)
        add_output_arguments(subparser)
        subparser.set_defaults(func=skewprim_from_args)
        return subparser


def skewprim_from_args(args: argparse.Namespace) -> int:
    results, text = [], []
    for target in load_targets(args):
        if not target.trusted:
            results.append(untrusted_payload(target))
            text.extend([header(target), str(target.verification)])
            continue
        H = target.presentation  # pylint: disable=invalid-name
        window = window_for(H, args)
        x, y = parse_word(args.x, H.alphabet), parse_word(args.y, H.alphabet)
        space = skew_primitives(H, x, y, window)
        entry = space.to_json(H)
        entry.update({"target": target.label, "window": str(window.spec), "passed": True})
        results.append(entry)
        text.append(header(target))
        text.append("P_({},{}) in {}: dimension {}".format(H.display(space.x), H.display(space.y), window.spec,
                                                            space.dimension))
        text.extend("    {}".format(element) for element in space.basis)
        if space.contains_x_minus_y:
            text.append("    contains x - y; complement: {}".format(
                    ", ".join(str(element) for element in space.prime_basis) or "0"))
    return emit(args, "skewprim", results, text)
