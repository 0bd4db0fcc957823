"""
The result type of every verification and theorem check.
"""
from typing import Any, Dict, List, NamedTuple


class Witness(NamedTuple):
    description: str
    element: str

    def to_json(self) -> Dict[str, str]:
        return {"description": self.description, "element": self.element}


class Report:
    """
    The outcome of one checked statement.

    Parameters
    ----------
    statement : ``str``
        The claim that was checked, written out in words.
    details : ``Dict[str, Any]``, optional
        Dimensions, bounds, certificates and anything else worth reporting. Values must be
        JSON-serialisable and are emitted with sorted keys.
    """
    def __init__(self, statement: str, details: Dict[str, Any] = None) -> None:
        self.statement = statement
        self.passed = True
        self.witnesses: List[Witness] = []
        self.warnings: List[str] = []
        self.details: Dict[str, Any] = dict(details or {})

    def fail(self, description: str, element: Any = "") -> "Report":
        self.passed = False
        self.witnesses.append(Witness(description, str(element)))
        return self

    def warn(self, message: str) -> "Report":
        if message not in self.warnings:
            self.warnings.append(message)
        return self

    def absorb(self, other: "Report") -> "Report":
        """
        Folds the failures and warnings of ``other`` into this report.
        """
        if not other.passed:
            self.passed = False
            for witness in other.witnesses:
                self.witnesses.append(Witness("{}: {}".format(other.statement, witness.description),
                                              witness.element))
        for warning in other.warnings:
            self.warn(warning)
        return self

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> Dict[str, Any]:
        return {"statement": self.statement,
                "status": self.status,
                "witnesses": [witness.to_json() for witness in self.witnesses],
                "warnings": list(self.warnings),
                "details": self.details}

    def __str__(self) -> str:
        lines = ["[{}] {}".format(self.status, self.statement)]
        for key in sorted(self.details):
            lines.append("    {}: {}".format(key, self.details[key]))
        for witness in self.witnesses:
            lines.append("    witness: {} -> {}".format(witness.description, witness.element))
        for warning in self.warnings:
            lines.append("    warning: {}".format(warning))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return "Report({!r}, passed={})".format(self.statement, self.passed)
