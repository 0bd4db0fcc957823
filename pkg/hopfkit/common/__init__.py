from hopfkit.common.checks import (AlphabetMismatch, ConfigurationError, DivisionByZero,
                                   ExpressionSyntaxError, FieldMismatch, GradingViolation,
                                   HopfkitError, NotInvariant, ParityViolation,
                                   SpecInvariantViolated, TerminationOrderViolation,
                                   UnknownSymbol, UntrustedPresentation)
from hopfkit.common.report import Report, Witness
from hopfkit.common.settings import AnalysisSettings, DEFAULT_SETTINGS
