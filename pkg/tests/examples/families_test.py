import json

import pytest

from hopfkit.common.checks import (ConfigurationError, ExpressionSyntaxError, SpecInvariantViolated,
                                   TerminationOrderViolation)
from hopfkit.common.verdicts import OrderResult
from hopfkit.examples import ExampleSpec, ExpectedResults, Family, build_document, expected_results
from hopfkit.hopf import export, parse_presentation, presentation_from_document, verify
from hopfkit.scalars import FieldDescriptor


class TestExampleSpec:
    @pytest.mark.parametrize("spec", [
            ExampleSpec.uq_borel(FieldDescriptor.rationals(), "1"),
            ExampleSpec.uq_borel(FieldDescriptor.prime_field(7), "0"),
            ExampleSpec.uq_borel(FieldDescriptor.prime_field(7), "8"),
            ExampleSpec.uq_borel_cyclotomic(1),
            ExampleSpec(Family.TAFT_WILSON, FieldDescriptor.rationals()),
            ExampleSpec.taft_wilson(2),
            ExampleSpec.group_cyclic(0),
    ])
    def test_out_of_range_parameters(self, spec):
        with pytest.raises(SpecInvariantViolated):
            build_document(spec)

    def test_q_is_required_over_plain_fields(self):
        with pytest.raises(ConfigurationError):
            ExampleSpec.uq_borel(FieldDescriptor.rationals()).q_value()

    def test_names_and_labels(self):
        assert ExampleSpec.uq_borel_cyclotomic(5).name == "uq_borel_c5"
        assert ExampleSpec.uq_borel_cyclotomic(5).label == "5"
        assert ExampleSpec.uq_borel_generic().name == "uq_borel_generic_q"
        assert ExampleSpec.taft_wilson(7).name == "taft_wilson_r_p7"
        assert ExampleSpec.taft_wilson(7).label == "7"
        assert ExampleSpec.group_cyclic(4).name == "group_cyclic_4"
        assert ExampleSpec.group_cyclic(4, FieldDescriptor.prime_field(3)).name == "group_cyclic_4_gf3"
        assert ExampleSpec.group_laurent().name == "group_laurent"
        assert ExampleSpec.uq_borel(FieldDescriptor.prime_field(7), "3").label == "GF(7), q = 3"


class TestExpectedResults:
    @pytest.mark.parametrize("spec, expected", [
            (ExampleSpec.uq_borel_cyclotomic(3), ExpectedResults(3, 6)),
            (ExampleSpec.uq_borel_generic(), ExpectedResults(None, None)),
            (ExampleSpec.uq_borel(FieldDescriptor.rationals(), "-1"), ExpectedResults(2, 4)),
            (ExampleSpec.uq_borel(FieldDescriptor.prime_field(7), "3"), ExpectedResults(6, 12, 12)),
            (ExampleSpec.uq_borel(FieldDescriptor.prime_field(7), "2"), ExpectedResults(3, 6, 6)),
            (ExampleSpec.uq_borel(FieldDescriptor.prime_field(7), "-1"), ExpectedResults(2, 4, 4)),
            (ExampleSpec.taft_wilson(5), ExpectedResults(1, 10, 10)),
            (ExampleSpec.group_cyclic(2), ExpectedResults(1, 1)),
            (ExampleSpec.group_cyclic(5, FieldDescriptor.prime_field(3)), ExpectedResults(1, 2, 2)),
            (ExampleSpec.group_laurent(), ExpectedResults(1, 2)),
    ])
    def test_predictions(self, spec, expected):
        assert expected_results(spec) == expected

    @pytest.mark.parametrize("n", [2, 3, 4, 6, 9, 12])
    def test_cyclotomic_members_use_the_root_order(self, n):
        assert expected_results(ExampleSpec.uq_borel_cyclotomic(n)) == ExpectedResults(n, 2 * n)

    def test_matching(self):
        expected = ExpectedResults(3, None)
        assert expected.matches_m_H(OrderResult.finite(3))
        assert not expected.matches_m_H(OrderResult.finite(6))
        assert expected.matches_order(OrderResult.infinite())
        assert not expected.matches_order(OrderResult.unknown(10))
        assert expected.to_json() == {"m_H": "3", "order": "∞", "bound": None}


class TestBundledPresentations:
    @pytest.mark.parametrize("filename, spec", [
            ("uq_borel.json", ExampleSpec.uq_borel_cyclotomic(3)),
            ("uq_borel_c5.json", ExampleSpec.uq_borel_cyclotomic(5)),
            ("uq_borel_generic_q.json", ExampleSpec.uq_borel_generic()),
            ("taft_wilson_r_p5.json", ExampleSpec.taft_wilson(5)),
    ])
    def test_files_match_the_builders(self, filename, spec, data_dir, build_cached):
        document = parse_presentation((data_dir / filename).read_text())
        assert document.presentation.same_structure(build_cached(spec))
        assert document.name == spec.name
        assert verify(document.presentation).passed

    @pytest.mark.parametrize("family", ["uq_borel_c3", "uq_borel_generic", "taft_wilson_p3", "group_cyclic_4",
                                        "group_laurent"])
    def test_export_parses_back(self, family, request):
        H = request.getfixturevalue(family)
        document = parse_presentation(export(H))
        assert document.presentation.same_structure(H)
        assert document.presentation.metadata.window == H.metadata.window
        assert not document.presentation.trusted


class TestDocumentErrors:
    @staticmethod
    def _uq_document():
        return build_document(ExampleSpec.uq_borel_cyclotomic(3))

    def test_missing_entries(self):
        document = self._uq_document()
        del document["antipode"]
        with pytest.raises(ConfigurationError) as info:
            presentation_from_document(document)
        assert "antipode" in str(info.value)

    def test_missing_generator_in_a_table(self):
        document = self._uq_document()
        del document["counit"]["Ki"]
        with pytest.raises(ConfigurationError):
            presentation_from_document(document)

    def test_invalid_json_is_positioned(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            parse_presentation('{"field": {"kind": "rationals"},\n  "generators": [}')
        assert info.value.position[0] == 2

    def test_relation_needs_a_monomial_on_the_left(self):
        document = self._uq_document()
        document["relations"][2] = "K*E + E = q*E*K"
        with pytest.raises(ConfigurationError) as info:
            presentation_from_document(document)
        assert "single non-constant monomial" in str(info.value)

    def test_relation_must_decrease(self):
        document = self._uq_document()
        document["relations"][2] = "E*K = q^-1*K*E"
        with pytest.raises(TerminationOrderViolation):
            presentation_from_document(document)

    def test_unknown_entries(self):
        document = self._uq_document()
        document["comment"] = "not part of the format"
        with pytest.raises(ConfigurationError):
            presentation_from_document(json.loads(json.dumps(document)))
