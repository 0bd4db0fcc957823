"""
The ``sweep`` subcommand computes ``m_H``, ``|S|`` and (in characteristic ``p``) the bound
``2·m_H·p^l`` over a range of family parameters and compares every row with the predicted
values.

.. code-block:: bash

    $ hopfkit sweep --family taft-wilson --p 3,5,7
    parameter  m_H  |S|  bound  match?
            3    1    6      6       ✓
            5    1   10     10       ✓
            7    1   14     14       ✓
"""
import argparse
import logging
from typing import Any, Dict

import pandas as pd
from overrides import overrides

from hopfkit.commands.common import add_output_arguments, add_presentation_arguments, emit, family_specs, progress
from hopfkit.commands.subcommand import Subcommand
from hopfkit.common.checks import ConfigurationError
from hopfkit.common.verdicts import OrderResult
from hopfkit.examples.builders import build
from hopfkit.examples.families import ExampleSpec, expected_results
from hopfkit.order.antipode_order import antipode_order
from hopfkit.order.theorems import admissible_exponents
from hopfkit.scalars.field import characteristic
from hopfkit.structure.conjugation import m_H

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

COLUMNS = ["parameter", "m_H", "|S|", "bound", "match?"]


class Sweep(Subcommand):
    @overrides
    def add_subparser(self, name: str, parser: argparse._SubParsersAction) -> argparse.ArgumentParser:
        # pylint: disable=protected-access
        description = '''Tabulate m_H, the antipode order and the characteristic-p bound over a family
                         and compare each row with the predicted values.'''
        subparser = parser.add_parser(name, description=description, help='Sweep a built-in family.')
        add_presentation_arguments(subparser, multiple=True)
        add_output_arguments(subparser)
        subparser.set_defaults(func=sweep_from_args)
        return subparser


def _cell(result: OrderResult) -> str:
    if result.is_finite:
        return str(result.value)
    return "∞" if result.is_infinite else "?>{}".format(result.cutoff)


def sweep_row(spec: ExampleSpec, cutoff: int) -> Dict[str, Any]:
    """
    One row of the sweep table for ``spec``.
    """
    H = build(spec)  # pylint: disable=invalid-name
    expected = expected_results(spec)
    invariant = m_H(H, cutoff=cutoff)
    p = characteristic(H.field)
    bound = None
    if p and invariant.is_finite:
        # |S| divides the bound.
        cutoff = min(cutoff, 4 * invariant.value * p * p)
        bound = 2 * invariant.value * p ** admissible_exponents(p, H.metadata.generation_degree or 0)[0]
    order = antipode_order(H, cutoff)
    match = expected.matches_m_H(invariant) and expected.matches_order(order) and bound == expected.bound
    if bound is not None:
        match = match and order.is_finite and bound % order.value == 0
    row = {"parameter": spec.label,
           "m_H": _cell(invariant),
           "|S|": _cell(order),
           "bound": "-" if bound is None else str(bound),
           "match?": "✓" if match else "✗"}
    logger.info("sweep %s: %s", spec.name, row)
    return row


def sweep_from_args(args: argparse.Namespace) -> int:
    if args.file:
        raise ConfigurationError("sweep runs over a built-in family; use --family")
    specs = family_specs(args)
    rows = [sweep_row(spec, args.cutoff) for spec in progress(specs, args, args.family)]
    table = pd.DataFrame(rows, columns=COLUMNS)
    results = [dict(row, passed=row["match?"] == "✓") for row in table.to_dict(orient="records")]
    return emit(args, "sweep", results, [table.to_string(index=False)])
