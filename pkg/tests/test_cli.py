import json

import pytest

from gausslab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestGauss:
    def test_quotient(self, capsys):
        code, out = run(capsys, "gauss", "2", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["coeffs"] == ["1", "1", "2", "1", "1"]
        assert doc["v"] == 1

    def test_methods_agree(self, capsys):
        results = []
        for method in ("quotient", "pascal", "enum", "koh"):
            code, out = run(capsys, "gauss", "3", "3", "--method", method)
            assert code == 0
            results.append(json.loads(out)["coeffs"])
        assert len({tuple(r) for r in results}) == 1

    def test_koh_terms_breakdown(self, capsys):
        code, out = run(capsys, "gauss", "4", "2", "--method", "koh", "--terms")
        doc = json.loads(out)
        assert code == 0
        assert doc["rule"] == "calibrated"
        assert all({"exponent", "factors", "darga", "coefficients"} <= set(t) for t in doc["terms"])

    def test_koh_stated_rule(self, capsys):
        code, out = run(capsys, "gauss", "4", "2", "--method", "koh", "--koh-rule", "stated")
        assert code == 0
        assert json.loads(out)["coeffs"] != ["1", "1", "2", "2", "3", "2", "2", "1", "1"]

    def test_byte_identical_reruns(self, capsys):
        _, first = run(capsys, "gauss", "5", "3", "--method", "koh", "--terms")
        _, second = run(capsys, "gauss", "5", "3", "--method", "koh", "--terms")
        assert first == second

    def test_budget_exit_code(self, capsys):
        code = main(["gauss", "12", "12", "--method", "enum", "--budget", "100"])
        capsys.readouterr()
        assert code == 3


class TestCheck:
    def test_log_concave_failure_exit(self, capsys):
        code, out = run(capsys, "check", '["1","1","2","1","1"]', "--log-concave")
        assert code == 1
        assert json.loads(out)["checks"]["log_concave"] is False

    def test_all_checks_default(self, capsys):
        code, out = run(capsys, "check", '["1","2","1"]')
        doc = json.loads(out)
        assert code == 0
        checks = doc["checks"]
        assert checks["unimodal"] and checks["log_concave"] and checks["palindromic"]
        assert checks["real_rooted"] and checks["gamma_nonnegative"]
        assert checks["mode"] == 1

    def test_gamma_with_center(self, capsys):
        code, out = run(capsys, "check", '["1","1"]', "--center", "3", "--gamma")
        doc = json.loads(out)
        assert code == 1  # not palindromic about 3/2
        assert doc["checks"]["gamma_nonnegative"] is False

    def test_bad_json_usage_error(self, capsys):
        code = main(["check", "not-json", "--unimodal"])
        capsys.readouterr()
        assert code == 2


class TestInjectionAudit:
    def test_rule_4_small_box(self, capsys):
        code, out = run(capsys, "injection-audit", "--rule", "4", "--amax", "2", "--bmax", "2")
        assert code == 0
        doc = json.loads(out)
        box22 = next(r for r in doc["audits"] if r["a"] == 2 and r["b"] == 2)
        assert box22["outcome"] == "Undefined"
        assert box22["k"] == 1
        assert box22["witnesses"] == [[1, 0]]

    def test_verify_claims(self, capsys):
        code, out = run(
            capsys,
            "injection-audit", "--rule", "1", "--amax", "4", "--bmax", "4",
            "--verify-claims",
        )
        assert code == 0
        doc = json.loads(out)
        claim44 = next(c for c in doc["claims"] if c["a"] == 4 and c["b"] == 4)
        assert claim44["verdict"] == "Confirmed"
        assert claim44["claimed_k"] == 6
        assert claim44["first_failure"]["k"] == 4

    def test_table_mode(self, capsys):
        code, out = run(capsys, "injection-audit", "--rule", "4", "--amax", "2", "--bmax", "2", "--table")
        assert code == 0
        assert "MaxWt" in out and "Undefined" in out


class TestPosetCommands:
    def test_sperner_exhaustive(self, capsys):
        code, out = run(capsys, "sperner", "4", "--exhaustive")
        doc = json.loads(out)
        assert code == 0
        assert doc["exhaustive"]["max_size"] == "6"
        assert doc["exhaustive"]["num_maximum"] == "1"

    def test_lym(self, capsys):
        code, out = run(capsys, "lym", "3", "[[1,2],[3]]")
        doc = json.loads(out)
        assert code == 0
        assert doc["sum"] == "2/3"
        assert doc["bound_holds"] is True

    def test_lym_not_antichain(self, capsys):
        code = main(["lym", "3", "[[1],[1,2]]"])
        capsys.readouterr()
        assert code == 2

    def test_bruhat(self, capsys):
        code, out = run(capsys, "bruhat", "3")
        doc = json.loads(out)
        assert code == 0
        assert doc["rank_histogram"] == ["1", "2", "2", "1"]
        assert doc["matches_q_factorial"] is True

    def test_stirling(self, capsys):
        code, out = run(capsys, "stirling", "4")
        doc = json.loads(out)
        assert code == 0
        assert doc["row"] == ["1", "7", "6", "1"]

    def test_eulerian(self, capsys):
        code, out = run(capsys, "eulerian", "4")
        doc = json.loads(out)
        assert code == 0
        assert doc["coeffs"] == ["1", "11", "11", "1"]
        assert all(doc["checks"].values())


class TestPathCommands:
    def test_fab(self, capsys):
        code, out = run(capsys, "paths", "fab", "2", "2", "4")
        doc = json.loads(out)
        assert code == 0
        assert doc["count"] == "6" and doc["agree"] is True

    def test_fab_parity_error(self, capsys):
        code = main(["paths", "fab", "1", "1", "3"])
        capsys.readouterr()
        assert code == 2

    def test_monotone(self, capsys):
        code, out = run(capsys, "paths", "monotone", "6", "2")
        doc = json.loads(out)
        assert code == 0
        assert doc["injective"] is True and doc["source_count"] == "15"

    def test_sagan(self, capsys):
        code, out = run(capsys, "paths", "sagan", "4", "4")
        doc = json.loads(out)
        assert code == 0
        assert doc["sequence"] == ["1", "16", "36", "16", "1"]


class TestReport:
    def test_report_small(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        code = main(["report", "--all", "--amax", "3", "--bmax", "3", "--out", str(out_file)])
        capsys.readouterr()
        assert code == 0
        doc = json.loads(out_file.read_text())
        assert doc["pass"] is True
        assert doc["sections"]["gaussian"]["pass"] is True
        grid = doc["sections"]["gaussian"]["grid"]
        assert all(cell["four_way_agreement"] for cell in grid)
        stated = {(c["a"], c["b"]): c["stated_rule_agrees"] for c in grid}
        assert all(agree == (a == b) for (a, b), agree in stated.items())

    def test_report_deterministic(self, capsys):
        code1, out1 = run(capsys, "report", "--amax", "2", "--bmax", "2")
        code2, out2 = run(capsys, "report", "--amax", "2", "--bmax", "2")
        assert code1 == code2 == 0
        assert out1 == out2


class TestUsage:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        capsys.readouterr()
        assert err.value.code == 2

    def test_missing_args(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["gauss", "2"])
        capsys.readouterr()
        assert err.value.code == 2
