"""
The ``tw-check`` subcommand runs the coradical-filtration checks on a presentation with
finite ``m_H``: the Taft–Wilson decomposition of ``H_1``, the filtration property of the
declared weights, ``(S^(2m_H) − id)(H_1) = 0``, ``(S^(2m_H) − id)(H_n) ⊆ H_(n−1)``,
``(S^(2m_H) − id)^n(H_n) = 0``, the conjugation formula on every ``P_{x,1}`` and the
arithmetic progression of ``S^(2m_H)`` on the generators. It also checks the statements
about finite and central group-likes.

``--n`` keeps its family meaning here; the filtration degree is ``--degree``.
"""
import argparse
import logging

from overrides import overrides

from hopfkit.algebra.alphabet import EMPTY_WORD
from hopfkit.commands.common import (add_output_arguments, add_presentation_arguments, add_window_arguments, emit,
                                     header, load_targets, progress, untrusted_payload, window_for)
from hopfkit.commands.subcommand import Subcommand
from hopfkit.common.settings import DEFAULT_SETTINGS
from hopfkit.order.theorems import (check_central_group_likes, check_conjugation_formula, check_drift_progression,
                                    check_group_exponent_bound, check_nilpotence,
                                    check_s_squared_identity_on_group_likes, check_taft_wilson_step)
from hopfkit.structure.conjugation import m_H
from hopfkit.structure.decomposition import filtration_step_check, h1_decomposition_check
from hopfkit.structure.skew_primitives import skew_primitives

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

CONJUGATION_POWERS = 6


class TwCheck(Subcommand):
    @overrides
    def add_subparser(self, name: str, parser: argparse._SubParsersAction) -> argparse.ArgumentParser:
        # pylint: disable=protected-access
        description = '''Check the coradical-filtration statements about S^(2m_H) − id in a basis window.'''
        subparser = parser.add_parser(name, description=description, help='Run the filtration checks.')
        add_presentation_arguments(subparser, multiple=True)
        subparser.add_argument('--degree',
                               type=int,
                               help='filtration degree n (default: the generation degree, at least 1)')
        add_window_arguments(subparser)
        add_output_arguments(subparser)
        subparser.set_defaults(func=tw_check_from_args)
        return subparser


def tw_check_from_args(args: argparse.Namespace) -> int:
    results, text = [], []
    for target in load_targets(args):
        if not target.trusted:
            results.append(untrusted_payload(target))
            text.extend([header(target), str(target.verification)])
            continue
        H = target.presentation  # pylint: disable=invalid-name
        window = window_for(H, args)
        invariant = m_H(H, window=window, cutoff=args.cutoff)
        text.append(header(target))
        if not invariant.is_finite:
            message = "m_H = {}: the filtration checks need a finite m_H".format(invariant)
            results.append({"target": target.label, "passed": False, "m_H": invariant.to_json(), "error": message})
            text.append(message)
            continue
        m = invariant.value
        n = args.degree if args.degree is not None else max(1, H.metadata.generation_degree or 1)
        reports = [h1_decomposition_check(H, window),
                   filtration_step_check(H, n, window),
                   check_s_squared_identity_on_group_likes(H, window),
                   check_taft_wilson_step(H, m, 1, window),
                   check_taft_wilson_step(H, m, n, window),
                   check_nilpotence(H, m, n, window),
                   check_group_exponent_bound(H, window, m_H=invariant, cutoff=args.cutoff),
                   check_central_group_likes(H, window, m_H=invariant, cutoff=args.cutoff)]
        representatives = H.metadata.representatives or H.group_likes
        for x in progress(list(representatives), args, "P_(x,1)"):
            space = skew_primitives(H, x, EMPTY_WORD, window)
            reports.append(check_conjugation_formula(H, x, space, CONJUGATION_POWERS))
        for symbol in H.alphabet.symbols:
            reports.append(check_drift_progression(H, H.generator_poly(symbol), m, DEFAULT_SETTINGS.claim_horizon))
        results.append({"target": target.label,
                        "passed": all(report.passed for report in reports),
                        "m_H": invariant.to_json(),
                        "degree": n,
                        "window": str(window.spec),
                        "reports": [report.to_json() for report in reports]})
        text.append("m_H = {}, n = {}, window {}".format(invariant, n, window.spec))
        text.extend(str(report) for report in reports)
    return emit(args, "tw-check", results, text)
