"""
The JSON presentation document read by the command line and written by ``export``.

A document looks like::

    {
      "name": "uq_borel",
      "field": {"kind": "cyclotomic", "n": 5, "variable": "q"},
      "generators": [{"name": "E", "grade": 1, "filtration": 1},
                     {"name": "K", "inverse": "Ki"}],
      "relations": ["K*K^-1 = 1", "K*E = q*E*K", ...],
      "coproduct": {"E": "E@1 + K@E", ...},
      "counit": {"E": "0", ...},
      "antipode": {"E": "-K^-1*E", ...},
      "group_likes": ["1", "K", "K^-1"]
    }

plus the optional metadata entries ``description``, ``generation_degree``,
``representatives``, ``exhaustive_representatives`` and ``window``. Relations are
``lhs = rhs`` with a monomial on the left that must be the largest word of the relation.
"""
import json
import logging
from typing import Any, Dict, List, Optional

from hopfkit.algebra.alphabet import Alphabet, Generator
from hopfkit.algebra.expressions import parse_expression, parse_polynomial, parse_tensor, parse_word
from hopfkit.algebra.ncpoly import NcPoly
from hopfkit.common.checks import ConfigurationError, ExpressionSyntaxError
from hopfkit.hopf.presentation import HopfPresentation, PresentationMetadata
from hopfkit.rewrite.rules import RewriteRule, RuleSet
from hopfkit.rewrite.word_basis import WindowSpec
from hopfkit.scalars.field import FieldDescriptor
from hopfkit.scalars.scalar import Scalar

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

REQUIRED_KEYS = ("field", "generators", "relations", "coproduct", "counit", "antipode", "group_likes")
OPTIONAL_KEYS = ("name", "description", "generation_degree", "representatives",
                 "exhaustive_representatives", "window")
GENERATOR_KEYS = ("name", "inverse", "grade", "filtration")


class PresentationDocument:
    """
    A parsed presentation file: the raw document plus the :class:`HopfPresentation` it
    describes. Building the presentation is part of parsing, so a document that parses
    has well-formed expressions and decreasing relations.
    """
    def __init__(self, document: Dict[str, Any], presentation: HopfPresentation) -> None:
        self.document = document
        self.presentation = presentation

    @property
    def name(self) -> str:
        return self.document.get("name", "")

    @property
    def description(self) -> str:
        return self.document.get("description", "")

    @property
    def generation_degree(self) -> Optional[int]:
        return self.document.get("generation_degree")

    @property
    def exhaustive_representatives(self) -> bool:
        return bool(self.document.get("exhaustive_representatives", False))

    def to_json(self) -> Dict[str, Any]:
        return dict(self.document)

    def dumps(self) -> str:
        return json.dumps(self.document, indent=2, ensure_ascii=False) + "\n"


def _reraise(where: str, error: ExpressionSyntaxError):
    raise type(error)("{}: {}".format(where, error.message)) from error


def _parse_generators(entries: Any) -> List[Generator]:
    if not isinstance(entries, list) or not entries:
        raise ConfigurationError("'generators' must be a non-empty list")
    generators = []
    for entry in entries:
        if isinstance(entry, str):
            entry = {"name": entry}
        if not isinstance(entry, dict) or "name" not in entry:
            raise ConfigurationError("every generator needs a 'name': {!r}".format(entry))
        unknown = set(entry) - set(GENERATOR_KEYS)
        if unknown:
            raise ConfigurationError("unknown generator entries for {}: {}".format(
                    entry["name"], ", ".join(sorted(unknown))))
        generators.append(Generator(entry["name"], entry.get("inverse"),
                                    int(entry.get("grade", 0)), int(entry.get("filtration", 0))))
    return generators


def _parse_relation(text: str, alphabet: Alphabet, field: FieldDescriptor) -> RewriteRule:
    if not isinstance(text, str) or text.count("=") != 1:
        raise ConfigurationError("relation {!r} must have the form 'lhs = rhs'".format(text))
    left_text, right_text = (side.strip() for side in text.split("="))
    try:
        left = parse_polynomial(left_text, alphabet, field)
        right = parse_polynomial(right_text, alphabet, field)
    except ExpressionSyntaxError as error:
        _reraise("in relation {!r}".format(text), error)
    if not left.is_monomial() or left.leading_word() == ():
        raise ConfigurationError("the left-hand side of relation {!r} must be a single non-constant monomial; "
                                 "write the largest word on the left".format(text))
    lhs = left.leading_word()
    return RewriteRule(lhs, right.scale(left.coefficient(lhs).inverse()))


def _parse_table(document: Dict[str, Any], key: str, alphabet: Alphabet) -> Dict[str, str]:
    table = document[key]
    if not isinstance(table, dict):
        raise ConfigurationError("'{}' must map generator names to expressions".format(key))
    for symbol in table:
        if symbol not in alphabet:
            raise ConfigurationError("'{}' has an entry for unknown generator {!r}".format(key, symbol))
    missing = [symbol for symbol in alphabet.symbols if symbol not in table]
    if missing:
        raise ConfigurationError("'{}' is missing generators: {}".format(key, ", ".join(missing)))
    return {symbol: str(value) for symbol, value in table.items()}


def presentation_from_document(document: Dict[str, Any], source: str = "file") -> HopfPresentation:
    if not isinstance(document, dict):
        raise ConfigurationError("a presentation must be a JSON object")
    unknown = set(document) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS)
    if unknown:
        raise ConfigurationError("unknown presentation entries: {}".format(", ".join(sorted(unknown))))
    missing = [key for key in REQUIRED_KEYS if key not in document]
    if missing:
        raise ConfigurationError("presentation is missing: {}".format(", ".join(missing)))

    field = FieldDescriptor.from_json(document["field"])
    alphabet = Alphabet(_parse_generators(document["generators"]))
    if not isinstance(document["relations"], list):
        raise ConfigurationError("'relations' must be a list of 'lhs = rhs' strings")
    rules = RuleSet(alphabet, field, [_parse_relation(text, alphabet, field) for text in document["relations"]])

    coproduct, counit, antipode = {}, {}, {}
    for symbol, text in _parse_table(document, "coproduct", alphabet).items():
        try:
            coproduct[symbol] = parse_tensor(text, alphabet, field)
        except ExpressionSyntaxError as error:
            _reraise("in the coproduct of {}".format(symbol), error)
    for symbol, text in _parse_table(document, "counit", alphabet).items():
        try:
            value = parse_expression(text, alphabet, field)
        except ExpressionSyntaxError as error:
            _reraise("in the counit of {}".format(symbol), error)
        if isinstance(value, NcPoly) and value.is_scalar():
            value = value.scalar_value()
        if not isinstance(value, Scalar):
            raise ConfigurationError("the counit of {} must be a scalar, got {!r}".format(symbol, text))
        counit[symbol] = value
    for symbol, text in _parse_table(document, "antipode", alphabet).items():
        try:
            antipode[symbol] = parse_polynomial(text, alphabet, field)
        except ExpressionSyntaxError as error:
            _reraise("in the antipode of {}".format(symbol), error)

    def words(key: str) -> List[tuple]:
        entries = document.get(key, [])
        if not isinstance(entries, list):
            raise ConfigurationError("'{}' must be a list of words".format(key))
        try:
            return [tuple(parse_word(str(text), alphabet)) for text in entries]
        except ExpressionSyntaxError as error:
            _reraise("in '{}'".format(key), error)

    window = document.get("window")
    metadata = PresentationMetadata(generation_degree=document.get("generation_degree"),
                                    representatives=tuple(words("representatives")),
                                    exhaustive=bool(document.get("exhaustive_representatives", False)),
                                    window=WindowSpec.from_json(window) if window is not None else None,
                                    source=source)
    return HopfPresentation(field, alphabet, rules, coproduct, counit, antipode, words("group_likes"),
                            name=document.get("name", ""), description=document.get("description", ""),
                            metadata=metadata)


def parse_presentation(text: str, source: str = "file") -> PresentationDocument:
    """
    Parses a presentation file. JSON errors carry their line and column; expression errors
    name the entry they occur in.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise ExpressionSyntaxError("invalid presentation document: {}".format(error.msg), text,
                                    (error.lineno, error.colno), ["valid JSON"])
    presentation = presentation_from_document(document, source)
    logger.info("parsed presentation %r over %s with %s relations", presentation.name, presentation.field,
                len(presentation.rules))
    return PresentationDocument(document, presentation)


def to_document(presentation: HopfPresentation) -> PresentationDocument:
    """
    Writes a presentation back out in the file format; parsing the result gives a
    presentation with the same data.
    """
    H = presentation  # pylint: disable=invalid-name
    generators = []
    for generator in H.alphabet.generators:
        entry: Dict[str, Any] = {"name": generator.name}
        if generator.inverse is not None:
            entry["inverse"] = generator.inverse
        entry["grade"] = generator.grade
        entry["filtration"] = generator.filtration
        generators.append(entry)
    document: Dict[str, Any] = {
            "name": H.name,
            "description": H.description,
            "field": H.field.to_json(),
            "generators": generators,
            "relations": H.rules.to_strings(),
            "coproduct": {s: str(H.coproduct[s]) for s in H.alphabet.symbols},
            "counit": {s: str(H.counit_values[s]) for s in H.alphabet.symbols},
            "antipode": {s: str(H.antipode_values[s]) for s in H.alphabet.symbols},
            "group_likes": [H.display(word) for word in H.group_likes],
    }
    metadata = H.metadata
    if metadata.generation_degree is not None:
        document["generation_degree"] = metadata.generation_degree
    if metadata.representatives:
        document["representatives"] = [H.display(word) for word in metadata.representatives]
        document["exhaustive_representatives"] = metadata.exhaustive
    if metadata.window is not None:
        document["window"] = metadata.window.to_json()
    return PresentationDocument(document, H)


def export(presentation: HopfPresentation) -> str:
    return to_document(presentation).dumps()
