"""
Order verdicts shared by the structure and order computations: ``Finite(m)``,
``InfiniteCertified`` (with a certificate when one is known) and ``UnknownBeyond(cutoff)``.
"""
from typing import Any, Dict, NamedTuple, Optional


class GeometricDrift(NamedTuple):
    """
    ``S²(g) = ratio · g`` with ``ratio`` of infinite multiplicative order.
    """
    generator: str
    ratio: Any

    def to_json(self) -> Dict[str, Any]:
        return {"type": "GeometricDrift", "generator": self.generator, "ratio": str(self.ratio)}

    def __str__(self) -> str:
        return "GeometricDrift({}, {})".format(self.generator, self.ratio)


class ArithmeticDrift(NamedTuple):
    """
    ``S^(step·t)(g) = g + t · residual`` for every ``t``, with a non-zero residual in
    characteristic zero.
    """
    generator: str
    residual: Any
    step: int

    def to_json(self) -> Dict[str, Any]:
        return {"type": "ArithmeticDrift", "generator": self.generator, "residual": str(self.residual),
                "step": self.step}

    def __str__(self) -> str:
        return "ArithmeticDrift({}, {}, step {})".format(self.generator, self.residual, self.step)


class OrderResult:
    FINITE = "Finite"
    INFINITE = "InfiniteCertified"
    UNKNOWN = "UnknownBeyond"

    def __init__(self,
                 kind: str,
                 value: Optional[int] = None,
                 certificate: Any = None,
                 cutoff: Optional[int] = None,
                 lower_bound: bool = False) -> None:
        self.kind = kind
        self.value = value
        self.certificate = certificate
        self.cutoff = cutoff
        self.lower_bound = lower_bound
        self.components: Dict[str, "OrderResult"] = {}

    @classmethod
    def finite(cls, value: int, lower_bound: bool = False) -> "OrderResult":
        return cls(cls.FINITE, value=value, lower_bound=lower_bound)

    @classmethod
    def infinite(cls, certificate: Any = None) -> "OrderResult":
        return cls(cls.INFINITE, certificate=certificate)

    @classmethod
    def unknown(cls, cutoff: int) -> "OrderResult":
        return cls(cls.UNKNOWN, cutoff=cutoff)

    @property
    def is_finite(self) -> bool:
        return self.kind == self.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == self.INFINITE

    @property
    def is_unknown(self) -> bool:
        return self.kind == self.UNKNOWN

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"kind": self.kind}
        if self.value is not None:
            document["value"] = self.value
        if self.certificate is not None:
            document["certificate"] = self.certificate.to_json()
        if self.cutoff is not None:
            document["cutoff"] = self.cutoff
        if self.lower_bound:
            document["lower_bound"] = True
        if self.components:
            document["components"] = {name: str(value) for name, value in sorted(self.components.items())}
        return document

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, OrderResult):
            return NotImplemented
        return (self.kind, self.value, self.cutoff, self.lower_bound, str(self.certificate)) == \
            (other.kind, other.value, other.cutoff, other.lower_bound, str(other.certificate))

    def __hash__(self) -> int:
        return hash((self.kind, self.value, self.cutoff))

    def __str__(self) -> str:
        if self.is_finite:
            text = "Finite({})".format(self.value)
            return text + " (LOWER-BOUND)" if self.lower_bound else text
        if self.is_infinite:
            return self.kind if self.certificate is None else "{}: {}".format(self.kind, self.certificate)
        return "UnknownBeyond({})".format(self.cutoff)

    __repr__ = __str__
