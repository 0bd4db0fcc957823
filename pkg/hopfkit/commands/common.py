"""
Arguments and plumbing shared by the subcommands: choosing presentations (a file or a
built-in family), choosing windows, and writing text or JSON output.
"""
import argparse
import json
import logging
import sys
from typing import Any, Dict, List, NamedTuple, Optional

from tqdm import tqdm

from hopfkit.algebra.alphabet import WeightScheme
from hopfkit.common.checks import ConfigurationError
from hopfkit.common.report import Report
from hopfkit.common.settings import DEFAULT_SETTINGS
from hopfkit.examples.builders import build
from hopfkit.examples.families import ExampleSpec, Family
from hopfkit.hopf.document import parse_presentation
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.hopf.verification import verify
from hopfkit.rewrite.word_basis import WindowSpec
from hopfkit.scalars.field import FieldDescriptor, FieldKind
from hopfkit.structure.window import BasisWindow

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class Target(NamedTuple):
    """
    One presentation to run a command on. ``spec`` is set for built-in family members, and
    ``verification`` holds the axiom report of a presentation read from a file.
    """
    label: str
    presentation: Optional[HopfPresentation]
    spec: Optional[ExampleSpec] = None
    verification: Optional[Report] = None

    @property
    def trusted(self) -> bool:
        return self.presentation is not None and self.presentation.trusted


def add_presentation_arguments(subparser: argparse.ArgumentParser, multiple: bool = False) -> None:
    source = subparser.add_mutually_exclusive_group(required=True)
    source.add_argument('--file', type=str, help='path to a presentation file (JSON)')
    source.add_argument('--family',
                        type=str,
                        choices=[family.value for family in Family],
                        help='a built-in family')
    values = 'a value, a comma-separated list or a range like 2..12' if multiple else 'a value'
    subparser.add_argument('--n', type=str, help='cyclotomic order for uq-borel or group order for group-cyclic '
                                                 '({})'.format(values))
    subparser.add_argument('--p', type=str, help='characteristic of the prime field ({})'.format(values))
    subparser.add_argument('--q', type=str, help='deformation parameter of uq-borel over QQ or GF(p)')
    subparser.add_argument('--field',
                           type=str,
                           help='coefficient field: QQ, GF(p), QQ(q) or QQ(zeta_n)')


def add_output_arguments(subparser: argparse.ArgumentParser) -> None:
    subparser.add_argument('--json', action='store_true', default=False, help='write a machine-readable report')
    subparser.add_argument('--cutoff',
                           type=int,
                           default=DEFAULT_SETTINGS.cutoff,
                           help='largest antipode power or matrix power to try')
    subparser.add_argument('-v', '--verbose', action='count', default=0, help='log more (repeat for debug output)')


def add_window_arguments(subparser: argparse.ArgumentParser) -> None:
    subparser.add_argument('--bound', type=int, help='weight bound of the basis window')
    subparser.add_argument('--weights',
                           type=str,
                           choices=[scheme.value for scheme in WeightScheme],
                           help='weights the window bound refers to')


def parse_values(text: Optional[str]) -> List[int]:
    """
    ``"5"``, ``"3,5,7"`` or ``"2..12"`` as a list of integers.
    """
    if text is None:
        return []
    values: List[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                low, high = part.split("..")
                values.extend(range(int(low), int(high) + 1))
            elif part:
                values.append(int(part))
    except ValueError:
        raise ConfigurationError("cannot read {!r} as integers; use 5, 3,5,7 or 2..12".format(text))
    return values


def parse_field(text: str) -> FieldDescriptor:
    """
    Reads ``QQ``, ``GF(p)``, ``QQ(q)`` (rational functions) or ``QQ(zeta_n)``.
    """
    compact = text.replace(" ", "")
    upper = compact.upper()
    if upper in ("QQ", "Q", "RATIONALS"):
        return FieldDescriptor.rationals()
    if upper.startswith("GF(") and compact.endswith(")"):
        return FieldDescriptor.prime_field(int(compact[3:-1]))
    if upper.startswith("QQ(") and compact.endswith(")"):
        inner = compact[3:-1]
        if "_" in inner:
            variable, order = inner.rsplit("_", 1)
            return FieldDescriptor.cyclotomic(int(order), variable=variable)
        return FieldDescriptor.rational_functions(inner)
    raise ConfigurationError("unknown field {!r}; expected QQ, GF(p), QQ(q) or QQ(zeta_n)".format(text))


def family_specs(args: argparse.Namespace) -> List[ExampleSpec]:
    family = Family(args.family)
    field = parse_field(args.field) if args.field else None
    ns, ps = parse_values(args.n), parse_values(args.p)
    if family == Family.TAFT_WILSON:
        if not ps:
            raise ConfigurationError("taft-wilson needs --p")
        return [ExampleSpec.taft_wilson(p) for p in ps]
    if family == Family.UQ_BOREL:
        if ns:
            return [ExampleSpec.uq_borel_cyclotomic(n) for n in ns]
        if ps:
            if args.q is None:
                raise ConfigurationError("uq-borel over GF(p) needs --q")
            return [ExampleSpec.uq_borel(FieldDescriptor.prime_field(p), args.q) for p in ps]
        if field is None or field.kind == FieldKind.RATIONAL_FUNCTIONS:
            return [ExampleSpec.uq_borel(field or FieldDescriptor.rational_functions("q"), args.q)]
        return [ExampleSpec.uq_borel(field, args.q)]
    fields = [FieldDescriptor.prime_field(p) for p in ps] or [field or FieldDescriptor.rationals()]
    if family == Family.GROUP_CYCLIC:
        if not ns:
            raise ConfigurationError("group-cyclic needs --n")
        return [ExampleSpec.group_cyclic(n, f) for f in fields for n in ns]
    return [ExampleSpec.group_laurent(f) for f in fields]


def load_targets(args: argparse.Namespace) -> List[Target]:
    """
    The presentations a command runs on. Files are parsed and verified here; a file that
    fails verification comes back untrusted together with its report.
    """
    if args.file:
        with open(args.file, "r", encoding="utf-8") as presentation_file:
            document = parse_presentation(presentation_file.read(), source=args.file)
        presentation = document.presentation
        report = verify(presentation)
        return [Target(presentation.name or args.file, presentation, verification=report)]
    targets = []
    for spec in family_specs(args):
        targets.append(Target(spec.label, build(spec), spec))
    return targets


def window_for(presentation: HopfPresentation, args: argparse.Namespace) -> BasisWindow:
    bound = getattr(args, "bound", None)
    weights = getattr(args, "weights", None)
    if bound is None and weights is None:
        return BasisWindow.build(presentation)
    default = presentation.metadata.window or WindowSpec(WeightScheme.GRADE, 1)
    spec = WindowSpec(WeightScheme(weights) if weights else default.weights,
                      bound if bound is not None else default.bound,
                      default.length_cap if bound is None else None)
    return BasisWindow.build(presentation, spec)


def progress(items: List[Any], args: argparse.Namespace, desc: str):
    disable = args.json or len(items) < 2 or not sys.stderr.isatty()
    return tqdm(items, desc=desc, disable=disable)


def untrusted_payload(target: Target) -> Dict[str, Any]:
    return {"target": target.label, "passed": False, "verification": target.verification.to_json()}


def emit(args: argparse.Namespace, command: str, results: List[Dict[str, Any]], text: List[str]) -> int:
    """
    Writes the command output and returns the exit status: 0 exactly when every result
    passed.
    """
    passed = all(result.get("passed", True) for result in results)
    if args.json:
        payload = {"command": command, "passed": passed, "results": results}
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(text) + "\n")
    return 0 if passed else 1


def header(target: Target) -> str:
    presentation = target.presentation
    return "== {} over {} ==".format(presentation.name or target.label, presentation.field)
