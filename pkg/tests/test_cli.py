"""Tests for argument parsing, command execution and exit codes."""
import io
import json
from unittest.mock import patch

import pytest

from annihilator.cli.commands import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    family_report,
    run,
)
from annihilator.cli.parser import Command, OutputFormat, parse_args
from annihilator.domain.errors import UsageError
from annihilator.infrastructure.graph6 import decode_graph6, encode_graph6
from annihilator.main import main
from annihilator.schemas.reports import CheckResult, VerificationReport


class TestParseArgs:
    """Test argv to CommandPlan."""

    def test_analyze_g6(self):
        """Test the simplest analyze call."""
        plan = parse_args(["analyze", "--g6", "C~"])
        assert plan.command == Command.ANALYZE
        assert plan.g6 == "C~"
        assert plan.format == OutputFormat.TEXT
        assert plan.input_sources == ["--g6"]

    def test_scan_orders(self):
        """Test --n and --max-n."""
        assert parse_args(["scan", "--n", "5"]).orders == [5]
        assert parse_args(["scan", "--max-n", "3"]).orders == [1, 2, 3]

    def test_family(self):
        """Test the family subcommand defaults to a full report."""
        plan = parse_args(["family", "bip-even", "--k", "2", "--format", "json"])
        assert (plan.family, plan.k, plan.emit) == ("bip-even", 2, "report")
        assert plan.format == OutputFormat.JSON

    def test_verify(self):
        """Test verify flags."""
        plan = parse_args(["verify", "--quick", "--threads", "2", "--deterministic"])
        assert plan.quick and plan.deterministic
        assert plan.threads == 2

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["bogus"],
            ["analyze"],
            ["analyze", "--g6", "@", "--stdin"],
            ["analyze", "--g6", "@", "--k", "2"],
            ["analyze", "--g6", "@", "--format", "xml"],
            ["analyze", "--g6", "@", "--budget", "0"],
            ["analyze", "--family", "bip-even", "--k", "-1"],
            ["scan", "--n", "9"],
            ["scan", "--max-n", "0"],
            ["scan", "--n", "3", "--max-n", "4"],
            ["scan", "--n", "3", "--stdin"],
            ["scan"],
            ["family"],
            ["verify", "--unknown"],
        ],
    )
    def test_usage_errors(self, argv):
        """Test invalid invocations raise UsageError."""
        with pytest.raises(UsageError):
            parse_args(argv)


class TestAnalyzeCommand:
    """Test analyze through main()."""

    def test_single_vertex_text(self, capsys):
        """Test K1 in text format."""
        assert main(["analyze", "--g6", "@"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "n=1 m=0 alpha=1 mu=0 h=1" in out
        assert "classification: consistent" in out

    def test_json(self, capsys):
        """Test K4 as JSON."""
        assert main(["analyze", "--g6", "C~", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert (data["alpha"], data["mu"], data["h"]) == (1, 2, 2)
        assert data["is_ke"] is False

    def test_family_input(self, capsys):
        """Test analyzing a family member shows vertex labels."""
        assert main(["analyze", "--family", "bip-even", "--k", "0"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "classification: converse_counterexample" in out
        assert "{a1, a2, a3, a4}" in out

    def test_file_input_is_a_list(self, tmp_path, capsys):
        """Test a file of graphs gives a JSON array in input order."""
        path = tmp_path / "graphs.g6"
        path.write_text("@\n\nC~\n")
        assert main(["analyze", "--file", str(path), "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert [d["graph6"] for d in data] == ["@", "C~"]

    def test_stdin_tsv(self, monkeypatch, capsys):
        """Test standard input with TSV output."""
        monkeypatch.setattr("sys.stdin", io.StringIO("A_\n"))
        assert main(["analyze", "--stdin", "--format", "tsv"]) == EXIT_OK
        header, row = capsys.readouterr().out.splitlines()
        assert header.split("\t")[:3] == ["graph6", "n", "m"]
        assert row.split("\t")[:3] == ["A_", "2", "1"]

    @pytest.mark.parametrize(
        "argv",
        [
            ["analyze", "--g6", "!!"],
            ["analyze", "--family", "nope"],
            ["analyze", "--family", "spider-odd", "--k", "0"],
            ["analyze", "--family", "ke-even"],
            ["scan", "--n", "9"],
        ],
    )
    def test_usage_exit_code(self, argv, capsys):
        """Test bad input exits 1 with a message on stderr."""
        assert main(argv) == EXIT_USAGE
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err

    def test_missing_file(self, tmp_path, capsys):
        """Test an unreadable file exits 1."""
        assert main(["analyze", "--file", str(tmp_path / "missing.g6")]) == EXIT_USAGE
        assert "error" in capsys.readouterr().err

    def test_budget_exit_code(self, cycle5, capsys):
        """Test exceeding the budget exits 2."""
        assert main(["analyze", "--g6", encode_graph6(cycle5), "--budget", "2"]) == EXIT_BUDGET
        assert "budget" in capsys.readouterr().err


class TestFamilyCommand:
    """Test family through main()."""

    def test_report_json(self, capsys):
        """Test bipartite_even(2) matches its closed forms."""
        assert main(["family", "bip-even", "--k", "2", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        rows = {row["quantity"]: row for row in data["closed_forms"]}
        assert rows["h"]["computed"] == 8
        assert rows["alpha"]["computed"] == 6
        assert all(row["matches"] for row in rows.values())

    def test_emit_g6(self, capsys):
        """Test emitting only graph6."""
        assert main(["family", "ke-odd", "--k", "1", "--emit", "g6"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 1
        assert decode_graph6(lines[0]).n == 11

    def test_fixed_has_no_closed_form(self, capsys):
        """Test catalog graphs show computed values only."""
        assert main(["family", "fixed:fig55.T1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "vertices: v1 v2 v3 v4 v5 v6 v7 v8" in out
        assert "MISMATCH" not in out

    def test_mismatch_is_flagged(self, caplog):
        """Test a disagreeing closed form is marked and logged."""
        with patch("annihilator.cli.commands.annihilation_number", return_value=0):
            report = family_report("ke-even", 0)
        row = next(r for r in report.closed_forms if r.quantity == "h")
        assert row.matches is False
        assert "closed form gives" in caplog.text

    def test_tsv(self, capsys):
        """Test the TSV closed-form table."""
        assert main(["family", "spider-even", "--k", "3", "--format", "tsv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "quantity\texpected\tcomputed\tmatches"
        assert "h\t7\t7\tTrue" in lines


class TestScanCommand:
    """Test scan through main()."""

    def test_deterministic_json_is_reproducible(self, capsys):
        """Test two deterministic runs print identical bytes."""
        argv = ["scan", "--n", "4", "--format", "json", "--deterministic"]
        assert main(argv) == EXIT_OK
        first = capsys.readouterr().out
        assert main(argv) == EXIT_OK
        second = capsys.readouterr().out
        assert first == second
        data = json.loads(first)
        assert data["total"] == 11
        assert data["elapsed_seconds"] is None

    def test_tsv(self, capsys):
        """Test the bucket table."""
        assert main(["scan", "--max-n", "3", "--format", "tsv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "bucket\tcount"
        assert lines[-2:] == ["budget_exceeded\t0", "invalid_lines\t0"]
        assert "forward_violation_isolated\t0" in lines

    def test_file_budget_exit_code(self, tmp_path, cycle5, capsys):
        """Test budget failures in a scan exit 2 but still print the report."""
        path = tmp_path / "c5.g6"
        path.write_text(encode_graph6(cycle5) + "\n")
        assert main(["scan", "--file", str(path), "--budget", "2", "--format", "json"]) == EXIT_BUDGET
        data = json.loads(capsys.readouterr().out)
        assert data["universe"]["source"] == f"file:{path}"
        assert data["budget_exceeded"] == [encode_graph6(cycle5)]

    def test_invalid_stdin_line_exit_code(self, monkeypatch, capsys):
        """Test a malformed line is reported, the rest is scanned and the exit code is 1."""
        monkeypatch.setattr("sys.stdin", io.StringIO("@\n!!\nC~\n"))
        assert main(["scan", "--stdin", "--format", "json", "--deterministic"]) == EXIT_USAGE
        data = json.loads(capsys.readouterr().out)
        assert (data["examined"], data["total"]) == (3, 2)
        assert data["invalid_lines"] == ["!!"]

    def test_alpha3_connected(self, capsys):
        """Test the alpha = 3 scan flag sets its filters."""
        assert main(["scan", "--max-n", "5", "--alpha3-connected", "--format", "json", "--deterministic"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["universe"]["connected_only"] is True
        assert data["universe"]["filters"]["alpha"] == 3

    def test_text(self, capsys):
        """Test the text summary."""
        assert main(["scan", "--n", "3", "--connected"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "examined: 2  kept: 2" in out
        assert "elapsed:" in out


class TestVerifyCommand:
    """Test verify exit codes with the suite stubbed."""

    def _stub(self, passed: bool):
        report = VerificationReport(passed=passed, checks=[CheckResult(name="oracles", passed=passed, detail="d")])
        stub = patch("annihilator.cli.commands.VerificationService")
        service_class = stub.start()
        service_class.return_value.run.return_value = report
        return stub, service_class

    def test_pass(self):
        """Test a passing suite exits 0 and forwards --quick."""
        stub, service_class = self._stub(True)
        try:
            result = run(parse_args(["verify", "--quick"]))
        finally:
            stub.stop()
        assert result.exit_code == EXIT_OK
        assert "overall" in result.output
        service_class.return_value.run.assert_called_once_with(quick=True)

    def test_failure(self):
        """Test a failing suite exits 3."""
        stub, _ = self._stub(False)
        try:
            result = run(parse_args(["verify", "--format", "json"]))
        finally:
            stub.stop()
        assert result.exit_code == EXIT_VERIFICATION_FAILED
        assert json.loads(result.output)["passed"] is False
