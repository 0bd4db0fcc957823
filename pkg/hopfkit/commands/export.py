"""
The ``export`` subcommand writes a presentation file, either for a built-in family member
or, with ``--file``, a normalized copy of an existing file.

.. code-block:: bash

    $ hopfkit export --family uq-borel --n 5 --output uq_borel_c5.json
"""
import argparse
import logging
import sys

from overrides import overrides

from hopfkit.commands.common import add_presentation_arguments, load_targets
from hopfkit.commands.subcommand import Subcommand
from hopfkit.common.checks import ConfigurationError
from hopfkit.hopf.document import export

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class Export(Subcommand):
    @overrides
    def add_subparser(self, name: str, parser: argparse._SubParsersAction) -> argparse.ArgumentParser:
        # pylint: disable=protected-access
        description = '''Write a presentation in the file format read by --file.'''
        subparser = parser.add_parser(name, description=description, help='Export a presentation file.')
        add_presentation_arguments(subparser)
        subparser.add_argument('--output', type=str, help='file to write (default: standard output)')
        subparser.add_argument('-v', '--verbose', action='count', default=0, help='log more')
        subparser.set_defaults(func=export_from_args, json=False)
        return subparser


def export_from_args(args: argparse.Namespace) -> int:
    targets = load_targets(args)
    if len(targets) != 1:
        raise ConfigurationError("export writes one presentation; give a single --n or --p")
    text = export(targets[0].presentation)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as output_file:
            output_file.write(text)
        logger.info("wrote %s", args.output)
    else:
        sys.stdout.write(text)
    return 0
