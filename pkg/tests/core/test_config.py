"""Tests for NumericsConfig."""

import dataclasses

import pytest

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig


class TestDefaults:
    """Tests for default tolerances."""

    def test_default_values(self):
        """Defaults should match the documented thresholds."""
        cfg = NumericsConfig()
        assert cfg.merge_tolerance == 1e-9
        assert cfg.gap_warning == 1e-6
        assert cfg.cancellation_ratio == 1e6
        assert cfg.series_truncation == 2000
        assert cfg.determinant_spread == 1e12
        assert cfg.fallback_samples == 100_000
        assert cfg.workers == 1
        assert cfg.cross_check is False
        assert cfg.conditioning_limit == 1e6
        assert (cfg.extended_digits, cfg.max_extended_digits) == (30, 1000)

    def test_frozen(self):
        """The config should be immutable."""
        with pytest.raises(dataclasses.FrozenInstanceError):
            DEFAULT_NUMERICS.workers = 4  # type: ignore[misc]

    def test_hashable(self):
        """Equal configs should hash equally (used as a cache key)."""
        assert hash(NumericsConfig()) == hash(DEFAULT_NUMERICS)


class TestOverrides:
    """Tests for with_overrides."""

    def test_string_values_are_parsed(self):
        """Strings should be converted to each field's type."""
        cfg = NumericsConfig.with_overrides(
            {"merge_tolerance": "1e-8", "workers": "4", "cross_check": "yes"}
        ).unwrap()
        assert cfg.merge_tolerance == 1e-8
        assert cfg.workers == 4
        assert cfg.cross_check is True

    def test_typed_values(self):
        """Typed values should pass through."""
        assert NumericsConfig.with_overrides({"fallback_seed": 7}).unwrap().fallback_seed == 7

    def test_base_is_respected(self):
        """Overrides should apply on top of the given base."""
        base = NumericsConfig(workers=3)
        cfg = NumericsConfig.with_overrides({"gap_warning": 1e-3}, base).unwrap()
        assert cfg.workers == 3
        assert cfg.gap_warning == 1e-3

    def test_every_problem_is_reported(self):
        """Unknown keys, bad values and range violations should all be listed."""
        result = NumericsConfig.with_overrides(
            {"bogus": 1, "workers": "0", "series_truncation": "2.5", "merge_tolerance": "-1"}
        )
        fields = sorted(i.field for i in result.unwrap_errors())
        assert fields == ["bogus", "merge_tolerance", "series_truncation", "workers"]

    def test_extended_precision_keys(self):
        """Precision keys should parse as integers and reject zero."""
        cfg = NumericsConfig.with_overrides({"max_extended_digits": "400", "conditioning_limit": "1e9"}).unwrap()
        assert cfg.max_extended_digits == 400
        assert cfg.conditioning_limit == 1e9
        assert NumericsConfig.with_overrides({"extended_digits": "0"}).is_invalid()

    def test_bad_boolean(self):
        """Unrecognised booleans should be rejected."""
        assert NumericsConfig.with_overrides({"cross_check": "maybe"}).is_invalid()

    def test_zero_allowed_where_nonnegative(self):
        """merge_tolerance = 0 disables merging and is allowed."""
        assert NumericsConfig.with_overrides({"merge_tolerance": "0"}).unwrap().merge_tolerance == 0.0
