"""Tests for Validation values."""

import pytest

from mimo_capacity.outcome import Invalid, Issue, Valid, Validation


class TestValidationCreation:
    """Tests for creating Validation instances."""

    def test_valid(self):
        """valid() should hold the value."""
        assert Validation.valid(6).unwrap() == 6

    def test_invalid_from_single_issue(self):
        """invalid() should accept a single Issue."""
        result = Validation.invalid(Issue("nr", "missing"))
        assert result.is_invalid()
        assert result.unwrap_errors() == [Issue("nr", "missing")]

    def test_invalid_from_list(self):
        """invalid() should accept a list of issues."""
        issues = [Issue("nr", "missing"), Issue("sigma2", "must be positive")]
        assert Validation.invalid(issues).unwrap_errors() == issues


class TestValidationCollect:
    """Tests for accumulating issues."""

    def test_collect_all_valid(self):
        """collect() should gather the values in order."""
        assert Validation.collect([Valid(1), Valid(2)]) == Valid([1, 2])

    def test_collect_accumulates_every_issue(self):
        """collect() should report the issues of every Invalid."""
        result = Validation.collect(
            [Valid(1), Invalid([Issue("a", "x")]), Invalid([Issue("b", "y"), Issue("c", "z")])]
        )
        assert [i.field for i in result.unwrap_errors()] == ["a", "b", "c"]

    def test_collect_empty(self):
        """collect() of nothing should be Valid([])."""
        assert Validation.collect([]) == Valid([])


class TestValidationTransform:
    """Tests for map and unwrapping."""

    def test_map(self):
        """map() should transform Valid and keep Invalid."""
        assert Valid(3).map(lambda v: v * 2) == Valid(6)
        invalid = Invalid([Issue("nr", "missing")])
        assert invalid.map(lambda v: v * 2).unwrap_errors() == invalid.unwrap_errors()

    def test_unwrap_invalid_lists_issues(self):
        """unwrap() on Invalid should name every issue."""
        with pytest.raises(ValueError, match="nr: missing; sigma2: bad"):
            Invalid([Issue("nr", "missing"), Issue("sigma2", "bad")]).unwrap()

    def test_unwrap_errors_on_valid_raises(self):
        """unwrap_errors() on Valid should raise ValueError."""
        with pytest.raises(ValueError):
            Valid(1).unwrap_errors()


class TestIssue:
    """Tests for Issue records."""

    def test_str(self):
        """str() should read 'field: message'."""
        assert str(Issue("user.1.nt", "must be >= 1")) == "user.1.nt: must be >= 1"

    def test_repr(self):
        """repr() should wrap the text form."""
        assert repr(Issue("sigma2", "must be positive")) == "Issue(sigma2: must be positive)"
