import json

import pytest

from hopfkit.commands import main
from hopfkit.examples import ExampleSpec, build_document
from hopfkit.hopf import parse_presentation


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestMain:
    def test_no_subcommand(self, capsys):
        status, out, _ = run(capsys)
        assert status == 2
        assert "verify" in out

    def test_unknown_family_is_an_argument_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["verify", "--family", "sl3"])
        assert info.value.code == 2
        capsys.readouterr()

    def test_configuration_errors_exit_with_2(self, capsys):
        status, _, err = run(capsys, "order", "--family", "taft-wilson")
        assert status == 2
        assert err.startswith("hopfkit: error: ")
        assert "--p" in err

    def test_out_of_range_parameters_exit_with_2(self, capsys):
        status, _, err = run(capsys, "verify", "--family", "group-cyclic", "--n", "0")
        assert status == 2
        assert "n >= 1" in err

    def test_missing_file(self, capsys, tmp_path):
        status, _, err = run(capsys, "verify", "--file", str(tmp_path / "missing.json"))
        assert status == 2
        assert err.count("\n") == 1

    def test_bad_json_is_positioned(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"field": {"kind": "rationals"},\n "generators": [}\n')
        status, _, err = run(capsys, "verify", "--file", str(path))
        assert status == 2
        assert "line 2" in err


class TestVerify:
    def test_builtin(self, capsys):
        status, out, _ = run(capsys, "verify", "--family", "uq-borel", "--n", "3,5")
        assert status == 0
        assert "== uq_borel_c3 over" in out
        assert "== uq_borel_c5 over" in out

    def test_bundled_file(self, capsys, data_dir):
        status, out, _ = run(capsys, "verify", "--file", str(data_dir / "taft_wilson_r_p5.json"), "--json")
        assert status == 0
        payload = json.loads(out)
        assert payload["command"] == "verify"
        assert payload["passed"] is True
        assert payload["results"][0]["report"]["status"] == "PASS"

    def test_corrupted_file_fails_with_a_witness(self, capsys, tmp_path):
        document = build_document(ExampleSpec.uq_borel_cyclotomic(3))
        document["antipode"]["E"] = "-E*K^-1"
        path = tmp_path / "corrupted.json"
        path.write_text(json.dumps(document))
        status, out, _ = run(capsys, "verify", "--file", str(path), "--json")
        assert status == 1
        report = json.loads(out)["results"][0]["report"]
        assert report["status"] == "FAIL"
        assert report["witnesses"]

        status, out, _ = run(capsys, "order", "--file", str(path))
        assert status == 1


class TestMH:
    def test_cyclotomic(self, capsys):
        status, out, _ = run(capsys, "mh", "--family", "uq-borel", "--n", "5")
        assert status == 0
        assert "m_H = Finite(5)" in out
        assert "a_K^-1 = Finite(5)" in out
        assert "matches expected m_H = 5" in out

    def test_generic_q(self, capsys):
        status, out, _ = run(capsys, "mh", "--family", "uq-borel", "--field", "QQ(q)", "--json")
        assert status == 0
        assert json.loads(out)["results"][0]["expected"]["m_H"] == "∞"

    def test_lower_bound_is_flagged(self, capsys):
        status, out, _ = run(capsys, "mh", "--family", "group-laurent")
        assert status == 0
        assert "m_H = Finite(1) (LOWER-BOUND)" in out


class TestOrder:
    def test_cyclotomic_file(self, capsys, data_dir):
        status, out, _ = run(capsys, "order", "--file", str(data_dir / "uq_borel_c5.json"))
        assert status == 0
        assert "Finite(10), matches expected 2n = 10" in out

    def test_generic_file_is_certified_infinite(self, capsys, data_dir):
        status, out, _ = run(capsys, "order", "--file", str(data_dir / "uq_borel_generic_q.json"))
        assert status == 0
        assert "InfiniteCertified: GeometricDrift(E, " in out
        assert "matches expected |S| = ∞" in out

    def test_json_certificate(self, capsys):
        status, out, _ = run(capsys, "order", "--family", "uq-borel", "--json")
        assert status == 0
        entry = json.loads(out)["results"][0]
        assert entry["order"]["certificate"]["type"] == "GeometricDrift"
        assert entry["certificate_check"]["status"] == "PASS"

    def test_restricted_algebra(self, capsys):
        status, out, _ = run(capsys, "order", "--family", "taft-wilson", "--p", "3")
        assert status == 0
        assert "Finite(6), matches expected |S| = 6" in out

    def test_cutoff(self, capsys):
        status, out, _ = run(capsys, "order", "--family", "taft-wilson", "--p", "5", "--cutoff", "4")
        assert status == 1
        assert "UnknownBeyond(4)" in out


class TestSkewPrim:
    def test_listing(self, capsys):
        status, out, _ = run(capsys, "skewprim", "--family", "uq-borel", "--n", "3", "--x", "K^-1", "--y", "1")
        assert status == 0
        assert "P_(K^-1,1)" in out
        assert "dimension 2" in out
        assert "contains x - y; complement: E*K^-1" in out

    def test_bound(self, capsys):
        status, out, _ = run(capsys, "skewprim", "--family", "taft-wilson", "--p", "3", "--bound", "1", "--json")
        assert status == 0
        entry = json.loads(out)["results"][0]
        assert entry["basis"] == ["Y", "X"]
        assert entry["dimension"] == 2

    def test_unknown_group_like(self, capsys):
        status, _, err = run(capsys, "skewprim", "--family", "uq-borel", "--n", "3", "--x", "F")
        assert status == 2
        assert "F" in err


class TestStructureChecks:
    @pytest.mark.parametrize("argv", [["--family", "taft-wilson", "--p", "3"],
                                      ["--family", "uq-borel", "--n", "3"],
                                      ["--family", "group-cyclic", "--n", "4"]])
    def test_tw_check(self, capsys, argv):
        status, out, _ = run(capsys, "tw-check", *argv)
        assert status == 0, out
        assert "FAIL" not in out

    def test_tw_check_needs_a_finite_m_H(self, capsys):
        status, out, _ = run(capsys, "tw-check", "--family", "uq-borel")
        assert status == 1
        assert "the filtration checks need a finite m_H" in out

    def test_tw_check_reports_group_like_statements(self, capsys):
        status, out, _ = run(capsys, "tw-check", "--family", "group-cyclic", "--n", "4", "--json")
        assert status == 0
        reports = {report["statement"]: report for report in json.loads(out)["results"][0]["reports"]}
        assert reports["m_H divides exp G(H) when G(H) is finite"]["details"]["exponent"] == 4
        central = reports["central G(H): m_H = 1 and |S| divides 2 or |S| = ∞"]
        assert central["status"] == "PASS"
        assert central["details"]["applies"] is True

    def test_tw_check_degree(self, capsys):
        status, out, _ = run(capsys, "tw-check", "--family", "taft-wilson", "--p", "3", "--degree", "2", "--json")
        assert status == 0
        assert json.loads(out)["results"][0]["degree"] == 2

    @pytest.mark.parametrize("argv", [["--family", "taft-wilson", "--p", "3,5"],
                                      ["--family", "uq-borel", "--p", "7", "--q", "3"],
                                      ["--family", "group-cyclic", "--n", "6", "--p", "5"]])
    def test_charp_check(self, capsys, argv):
        status, out, _ = run(capsys, "charp-check", *argv)
        assert status == 0, out
        assert "FAIL" not in out

    def test_charp_check_refuses_characteristic_zero(self, capsys):
        status, _, err = run(capsys, "charp-check", "--family", "uq-borel", "--n", "3")
        assert status == 2
        assert "positive characteristic" in err


class TestExport:
    def test_standard_output(self, capsys, build_cached):
        status, out, _ = run(capsys, "export", "--family", "uq-borel", "--n", "5")
        assert status == 0
        document = parse_presentation(out)
        assert document.presentation.same_structure(build_cached(ExampleSpec.uq_borel_cyclotomic(5)))

    def test_output_file(self, capsys, tmp_path, data_dir):
        path = tmp_path / "r_p5.json"
        status, out, _ = run(capsys, "export", "--file", str(data_dir / "taft_wilson_r_p5.json"), "--output",
                             str(path))
        assert status == 0
        assert out == ""
        status, _, _ = run(capsys, "order", "--file", str(path))
        assert status == 0

    def test_single_target(self, capsys):
        status, _, err = run(capsys, "export", "--family", "taft-wilson", "--p", "3,5")
        assert status == 2
        assert "one presentation" in err
