"""
The ``verify`` subcommand checks the bialgebra and antipode axioms of a presentation.

.. code-block:: bash

    $ hopfkit verify --help
    usage: hopfkit verify [-h] (--file FILE | --family FAMILY) [--n N] [--p P] [--q Q]
                          [--field FIELD] [--json] [--cutoff CUTOFF] [-v]
"""
import argparse
import logging

from overrides import overrides

from hopfkit.commands.common import add_output_arguments, add_presentation_arguments, emit, header, load_targets
from hopfkit.commands.subcommand import Subcommand
from hopfkit.hopf.verification import verify

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class Verify(Subcommand):
    @overrides
    def add_subparser(self, name: str, parser: argparse._SubParsersAction) -> argparse.ArgumentParser:
        # pylint: disable=protected-access
        description = '''Check Δ and ε on relations, coassociativity, the counit laws, the group-like
                         axioms and the antipode laws.'''
        subparser = parser.add_parser(name, description=description, help='Verify the Hopf axioms.')
        add_presentation_arguments(subparser, multiple=True)
        add_output_arguments(subparser)
        subparser.set_defaults(func=verify_from_args)
        return subparser


def verify_from_args(args: argparse.Namespace) -> int:
    results, text = [], []
    for target in load_targets(args):
        report = target.verification or verify(target.presentation)
        results.append({"target": target.label, "passed": report.passed, "report": report.to_json()})
        text.extend([header(target), str(report)])
    return emit(args, "verify", results, text)
