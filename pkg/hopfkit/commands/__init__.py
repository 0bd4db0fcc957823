"""
The ``hopfkit`` command line.

.. code-block:: bash

    $ hopfkit --help
    usage: hopfkit [-h] {verify,mh,order,skewprim,tw-check,charp-check,sweep,export} ...

Each subcommand returns 0 exactly when every check it ran passed, 1 when a check failed
and 2 when the input could not be processed.
"""
import argparse
import logging
import sys
from typing import Dict, List, Optional

from hopfkit.commands.charp_check import CharpCheck
from hopfkit.commands.export import Export
from hopfkit.commands.mh import MH
from hopfkit.commands.order import Order
from hopfkit.commands.skewprim import SkewPrim
from hopfkit.commands.subcommand import Subcommand
from hopfkit.commands.sweep import Sweep
from hopfkit.commands.tw_check import TwCheck
from hopfkit.commands.verify import Verify
from hopfkit.common.checks import HopfkitError

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

SUBCOMMANDS: Dict[str, Subcommand] = {
        "verify": Verify(),
        "mh": MH(),
        "order": Order(),
        "skewprim": SkewPrim(),
        "tw-check": TwCheck(),
        "charp-check": CharpCheck(),
        "sweep": Sweep(),
        "export": Export(),
}


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(format='%(asctime)s - %(levelname)s - %(name)s - %(message)s', level=level)
    logging.getLogger("hopfkit").setLevel(level)


def build_parser(prog: Optional[str] = None) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Compute with finitely presented pointed Hopf algebras.",
                                     usage='%(prog)s', prog=prog)
    subparsers = parser.add_subparsers(title='Commands', metavar='')
    for name, subcommand in SUBCOMMANDS.items():
        subcommand.add_subparser(name, subparsers)
    return parser


def main(argv: Optional[List[str]] = None, prog: Optional[str] = "hopfkit") -> int:
    """
    Runs one subcommand and returns its exit status.
    """
    parser = build_parser(prog)
    args = parser.parse_args(argv)
    if 'func' not in dir(args):
        parser.print_help()
        return 2
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except (HopfkitError, OSError) as error:
        sys.stderr.write("{}: error: {}\n".format(prog, error))
        return 2


run_command = main  # pylint: disable=invalid-name
