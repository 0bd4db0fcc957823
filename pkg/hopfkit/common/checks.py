"""
Exceptions raised by hopfkit.

A failed axiom or theorem check is *not* an exception: those come back as
:class:`~hopfkit.common.report.Report` objects with witnesses. The classes below cover
bad input (presentations, expressions, command-line configuration), violated
preconditions, and internal-consistency failures of the kernel.
"""
from typing import Optional, Sequence, Tuple


class HopfkitError(Exception):
    """
    The root of every error hopfkit raises on purpose.
    """
    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


class ConfigurationError(HopfkitError):
    """
    The error raised when a presentation, an example specification or a command line
    cannot be turned into something we can compute with.
    """


class SpecInvariantViolated(ConfigurationError):
    pass


class FieldMismatch(HopfkitError):
    pass


class DivisionByZero(HopfkitError, ZeroDivisionError):
    pass


class AlphabetMismatch(HopfkitError):
    pass


class ExpressionSyntaxError(ConfigurationError):
    """
    A positioned syntax error. ``position`` is a ``(line, column)`` pair, both 1-based;
    expressions are single-line so their line is always 1.
    """
    def __init__(self,
                 message: str,
                 text: str = "",
                 position: Optional[Tuple[int, int]] = None,
                 expected: Sequence[str] = ()) -> None:
        self.text = text
        self.position = position
        self.expected = list(expected)
        full_message = message
        if position is not None:
            full_message = "{} (line {}, column {})".format(message, position[0], position[1])
        if self.expected:
            full_message += "; expected one of: {}".format(", ".join(self.expected))
        if text and position is not None and position[0] == 1 and "\n" not in text:
            full_message += "\n  {}\n  {}^".format(text, " " * (position[1] - 1))
        super().__init__(full_message)


class UnknownSymbol(ExpressionSyntaxError):
    pass


class TerminationOrderViolation(ConfigurationError):
    pass


class UntrustedPresentation(HopfkitError):
    pass


class NotInvariant(HopfkitError):
    """
    Raised when conjugation does not map a computed skew-primitive space into itself.
    Inside a truncated window this means the window is too small; enlarge the bound.
    """


class ParityViolation(HopfkitError):
    """
    A finite antipode order that is odd and larger than one. This cannot happen in a
    Hopf algebra, so it always points at a bug in the kernel.
    """


class GradingViolation(HopfkitError):
    def __init__(self, message: str, witness: str = "") -> None:
        super().__init__(message if not witness else "{}: {}".format(message, witness))
        self.witness = witness
