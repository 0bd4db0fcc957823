"""
Built-in presentations. Every builder writes a presentation document and hands it to the
same parser the command line uses, so a builder's output and its exported file describe
the same algebra by construction. The result is verified before it is returned.
"""
import logging
from typing import Any, Dict

from hopfkit.common.checks import HopfkitError
from hopfkit.examples.families import ExampleSpec, Family
from hopfkit.hopf.document import presentation_from_document
from hopfkit.hopf.presentation import HopfPresentation
from hopfkit.hopf.verification import verify

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


def _q_text(spec: ExampleSpec) -> str:
    return spec.field.variable if spec.q is None else "({})".format(spec.q)


def uq_borel_document(spec: ExampleSpec) -> Dict[str, Any]:
    """
    The Borel part of the quantized enveloping algebra of sl(2): ``KE = qEK``, ``K``
    invertible, ``Δ(E) = E⊗1 + K⊗E``, ``Δ(K) = K⊗K``, ``S(E) = −K⁻¹E``.

    The rule ``K⁻¹E = q⁻¹EK⁻¹`` is not independent: multiply ``KE = qEK`` by ``K⁻¹`` on
    both sides. With ``E' = EK⁻¹``, ``Δ(E') = E'⊗K⁻¹ + 1⊗E'`` and conjugation by ``K⁻¹``
    scales ``E'`` by ``q⁻¹``, so ``m_H`` is the multiplicative order of ``q``.
    """
    q = _q_text(spec)
    return {
            "name": spec.name,
            "description": "Borel part of U_q(sl2) over {}".format(spec.field),
            "field": spec.field.to_json(),
            "generators": [{"name": "E", "grade": 1, "filtration": 1},
                           {"name": "K", "inverse": "Ki", "grade": 0, "filtration": 0}],
            "relations": ["K*K^-1 = 1",
                          "K^-1*K = 1",
                          "K*E = {}*E*K".format(q),
                          "K^-1*E = {}^-1*E*K^-1".format(q)],
            "coproduct": {"E": "E@1 + K@E", "K": "K@K", "Ki": "K^-1@K^-1"},
            "counit": {"E": "0", "K": "1", "Ki": "1"},
            "antipode": {"E": "-K^-1*E", "K": "K^-1", "Ki": "K"},
            "group_likes": ["1", "K", "K^-1"],
            "generation_degree": 1,
            "representatives": ["K", "K^-1"],
            "exhaustive_representatives": True,
            "window": {"weights": "grade", "bound": 1, "length_cap": None},
    }


def taft_wilson_document(spec: ExampleSpec) -> Dict[str, Any]:
    """
    The connected ``p³``-dimensional algebra generated by primitives ``X``, ``Y`` and ``Z``
    with ``Δ(Z) = Z⊗1 + X⊗Y + 1⊗Z``, in characteristic ``p >= 3``.

    The rules orient ``[Y, X] = −X``, ``[Z, Y] = Z`` and ``[X, Z] = ½X²`` with the larger
    word on the left; ``S(Z) = −Z + XY`` solves ``m(S⊗id)Δ(Z) = 0``.
    """
    p = spec.field.p
    return {
            "name": spec.name,
            "description": "connected Hopf algebra R of dimension p^3 over {}".format(spec.field),
            "field": spec.field.to_json(),
            "generators": [{"name": "X", "grade": 1, "filtration": 1},
                           {"name": "Y", "grade": 0, "filtration": 1},
                           {"name": "Z", "grade": 2, "filtration": 2}],
            "relations": ["Y*X = X*Y - X",
                          "Z*Y = Y*Z + Z",
                          "Z*X = X*Z - 1/2*X^2",
                          "X^{} = 0".format(p),
                          "Y^{} = Y".format(p),
                          "Z^{} = 0".format(p)],
            "coproduct": {"X": "X@1 + 1@X", "Y": "Y@1 + 1@Y", "Z": "Z@1 + X@Y + 1@Z"},
            "counit": {"X": "0", "Y": "0", "Z": "0"},
            "antipode": {"X": "-X", "Y": "-Y", "Z": "-Z + X*Y"},
            "group_likes": ["1"],
            "generation_degree": 2,
            "representatives": ["1"],
            "exhaustive_representatives": True,
            "window": {"weights": "filtration", "bound": 2, "length_cap": None},
    }


def group_cyclic_document(spec: ExampleSpec) -> Dict[str, Any]:
    n = spec.n
    elements = ["1"] + ["g" if k == 1 else "g^{}".format(k) for k in range(1, n)]
    return {
            "name": spec.name,
            "description": "group algebra of the cyclic group of order {} over {}".format(n, spec.field),
            "field": spec.field.to_json(),
            "generators": [{"name": "g", "grade": 0, "filtration": 0}],
            "relations": ["g^{} = 1".format(n)],
            "coproduct": {"g": "g@g"},
            "counit": {"g": "1"},
            "antipode": {"g": elements[-1] if n > 1 else "1"},
            "group_likes": elements,
            "generation_degree": 0,
            "representatives": elements,
            "exhaustive_representatives": True,
            "window": {"weights": "length", "bound": n - 1, "length_cap": None},
    }


def group_laurent_document(spec: ExampleSpec) -> Dict[str, Any]:
    return {
            "name": spec.name,
            "description": "group algebra of the integers over {}".format(spec.field),
            "field": spec.field.to_json(),
            "generators": [{"name": "g", "inverse": "gi", "grade": 0, "filtration": 0}],
            "relations": ["g*g^-1 = 1", "g^-1*g = 1"],
            "coproduct": {"g": "g@g", "gi": "g^-1@g^-1"},
            "counit": {"g": "1", "gi": "1"},
            "antipode": {"g": "g^-1", "gi": "g"},
            "group_likes": ["1", "g", "g^-1"],
            "generation_degree": 0,
            "representatives": ["1", "g", "g^-1"],
            "exhaustive_representatives": False,
            "window": {"weights": "grade", "bound": 0, "length_cap": 4},
    }


_DOCUMENT_BUILDERS = {
        Family.UQ_BOREL: uq_borel_document,
        Family.TAFT_WILSON: taft_wilson_document,
        Family.GROUP_CYCLIC: group_cyclic_document,
        Family.GROUP_LAURENT: group_laurent_document,
}


def build_document(spec: ExampleSpec) -> Dict[str, Any]:
    spec.validate()
    return _DOCUMENT_BUILDERS[spec.family](spec)


def build(spec: ExampleSpec) -> HopfPresentation:
    """
    Builds, verifies and returns a trusted presentation.

    Raises
    ------
    SpecInvariantViolated
        If the parameters are outside the family's range (``q`` in ``{0, 1}``, a
        Taft–Wilson field of characteristic below 3, a cyclic group of order below 1).
    """
    presentation = presentation_from_document(build_document(spec), source="builder")
    report = verify(presentation)
    if not report.passed:
        raise HopfkitError("built-in presentation {} failed verification:\n{}".format(spec.name, report))
    logger.info("built %r over %s (%s relations)", presentation.name, presentation.field, len(presentation.rules))
    return presentation
