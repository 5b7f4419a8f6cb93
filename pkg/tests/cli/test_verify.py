"""Tests for the self-verification report."""

import importlib
import math

import pytest

from mimo_capacity.cli import CheckOutcome, VerifyReport, run_verify

verify_module = importlib.import_module("mimo_capacity.cli.verify")


@pytest.fixture
def quick_suites(monkeypatch):
    suites = tuple((name, fn) for name, fn in verify_module.SUITES if name in ("specfun", "hypfun"))
    monkeypatch.setattr(verify_module, "SUITES", suites)
    return suites


class TestRendering:
    """Tests for report text."""

    def test_check_line(self):
        """A check should render status, measurement and limit."""
        check = CheckOutcome("specfun", "gamma", 1.5e-12, 1e-8, True)
        assert check.render() == "PASS specfun/gamma: measured=1.500e-12 limit=1.000e-08"
        failed = CheckOutcome("capacity", "mc", 4.0, 3.0, False, "closed=1")
        assert failed.render() == "FAIL capacity/mc: measured=4.000e+00 limit=3.000e+00 closed=1"

    def test_report(self):
        """The report should end with a pass/fail summary."""
        report = VerifyReport(
            "quick",
            7,
            1000,
            (CheckOutcome("a", "x", 0.0, 1.0, True), CheckOutcome("b", "y", 2.0, 1.0, False)),
        )
        assert not report.passed
        assert [c.suite for c in report.failures] == ["b"]
        lines = report.render().splitlines()
        assert lines[0] == "verify depth=quick seed=7 mc_samples=1000"
        assert lines[-1] == "summary: 1 passed, 1 failed"


class TestRunVerify:
    """Tests for run_verify()."""

    def test_rejects_unknown_depth(self):
        """Only quick and full are valid depths."""
        with pytest.raises(ValueError):
            run_verify("deep")

    def test_crashing_suite_is_reported(self, monkeypatch):
        """An exception inside a suite should become one failed line."""

        def boom(ctx):
            raise RuntimeError("bad input")

        monkeypatch.setattr(verify_module, "SUITES", (("boom", boom),))
        report = run_verify("quick", seed=0)
        (check,) = report.checks
        assert check.name == "suite crashed"
        assert not check.passed
        assert math.isinf(check.measured)
        assert check.detail == "RuntimeError: bad input"

    def test_default_samples_by_depth(self, monkeypatch):
        """mc_samples should default by depth."""
        monkeypatch.setattr(verify_module, "SUITES", ())
        assert run_verify("quick").mc_samples == 100_000
        assert run_verify("full", mc_samples=5000).mc_samples == 5000

    def test_deterministic(self, quick_suites):
        """The same seed should give the same report text."""
        first = run_verify("quick", seed=5)
        assert first.passed, first.render()
        assert first.render() == run_verify("quick", seed=5).render()
        assert {c.suite for c in first.checks} == {"specfun", "hypfun"}

    @pytest.mark.slow
    def test_quick_run(self):
        """A quick run should complete every suite without crashing."""
        report = run_verify("quick", seed=0, mc_samples=20_000)
        assert not [c for c in report.checks if c.name == "suite crashed"]
        analytic = [c for c in report.checks if c.suite in ("specfun", "hypfun", "eigpdf")]
        assert all(c.passed for c in analytic), report.render()
