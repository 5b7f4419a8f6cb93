"""Numerical tolerances and thresholds.

Every threshold that changes a numerical decision lives here so a run can be
reproduced from its configuration alone.

Example:
    >>> cfg = NumericsConfig.with_overrides({"merge_tolerance": "1e-8"}).unwrap()
    >>> cfg.merge_tolerance
    1e-08
"""

from __future__ import annotations

import dataclasses
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from typing import Any

from mimo_capacity.outcome import Issue, Validation


@dataclass(frozen=True, slots=True)
class NumericsConfig:
    """Tolerances shared by the closed forms, oracles and fallbacks.

    Attributes:
        merge_tolerance: Relative gap below which eigenvalues are merged
        gap_warning: Relative w-gap below which hypergeometric evaluation warns
        cancellation_ratio: Intermediate/result magnitude ratio that sends the
            incomplete-gamma recurrence to quadrature
        series_truncation: Maximum number of terms of a scalar pFq series
        series_tolerance: Relative size of the last term that stops a series
        determinant_spread: Max/min ratio of the per-k determinants of the
            capacity closed form above which a Monte Carlo fallback is attached
        fallback_samples: Sample count of that fallback
        fallback_seed: Seed of that fallback
        conditioning_limit: Hadamard-deficit ratio of a capacity determinant above
            which it is recomputed in extended precision
        extended_digits: Decimal digits added on top of the digits the
            deficit says were lost, for the first extended evaluation
        max_extended_digits: Working precision at which extended evaluation
            gives up and leaves the value to the Monte Carlo fallback
        consistency_tolerance: Relative slack for sign/positivity assertions
        quad_epsabs: Absolute tolerance handed to scipy quadrature
        quad_epsrel: Relative tolerance handed to scipy quadrature
        quad_limit: Subinterval limit handed to scipy quadrature
        cross_check: Cross-check closed-form moment integrals against quadrature
        workers: Thread count for sweep evaluation
    """

    merge_tolerance: float = 1e-9
    gap_warning: float = 1e-6
    cancellation_ratio: float = 1e6
    series_truncation: int = 2000
    series_tolerance: float = 1e-17
    determinant_spread: float = 1e12
    fallback_samples: int = 100_000
    fallback_seed: int = 0
    conditioning_limit: float = 1e6
    extended_digits: int = 30
    max_extended_digits: int = 1000
    consistency_tolerance: float = 1e-9
    quad_epsabs: float = 1e-13
    quad_epsrel: float = 1e-11
    quad_limit: int = 200
    cross_check: bool = False
    workers: int = 1

    @staticmethod
    def with_overrides(
        overrides: Mapping[str, Any], base: NumericsConfig | None = None
    ) -> Validation[NumericsConfig]:
        """Apply string or typed overrides, reporting every bad entry.

        Args:
            overrides: Field name to value (strings are parsed)
            base: Configuration to start from (defaults to DEFAULT_NUMERICS)

        Returns:
            Valid(new config) or Invalid(list of issues)

        Example:
            >>> NumericsConfig.with_overrides({"workers": "0", "bogus": 1}).is_invalid()
            True
        """
        start = base or DEFAULT_NUMERICS
        fields = {f.name: f for f in dataclasses.fields(NumericsConfig)}
        checked: list[Validation[tuple[str, Any]]] = []
        for key, raw in overrides.items():
            if key not in fields:
                checked.append(Validation.invalid(Issue(key, "unknown tolerance key")))
                continue
            checked.append(_parse_field(key, type(getattr(start, key)), raw))
        return Validation.collect(checked).map(
            lambda pairs: dataclasses.replace(start, **dict(pairs))
        )


def _parse_bool(raw: Any) -> bool:
    if isinstance(raw, bool):
        return raw
    text = str(raw).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


def _parse_int(raw: Any) -> int:
    value = float(raw)
    if not value.is_integer():
        raise ValueError(f"not an integer: {raw!r}")
    return int(value)


_PARSERS: dict[type, Callable[[Any], Any]] = {bool: _parse_bool, int: _parse_int, float: float}

_POSITIVE = frozenset(
    {
        "gap_warning",
        "cancellation_ratio",
        "series_truncation",
        "series_tolerance",
        "determinant_spread",
        "fallback_samples",
        "conditioning_limit",
        "extended_digits",
        "max_extended_digits",
        "consistency_tolerance",
        "quad_epsrel",
        "quad_limit",
        "workers",
    }
)


def _parse_field(key: str, kind: type, raw: Any) -> Validation[tuple[str, Any]]:
    try:
        value = _PARSERS[kind](raw)
    except (TypeError, ValueError):
        return Validation.invalid(Issue(key, f"expected {kind.__name__}, got {raw!r}"))
    if key in _POSITIVE and not value > 0:
        return Validation.invalid(Issue(key, "must be positive"))
    if kind is not bool and value < 0:
        return Validation.invalid(Issue(key, "must be nonnegative"))
    return Validation.valid((key, value))


DEFAULT_NUMERICS = NumericsConfig()


__all__ = ["NumericsConfig", "DEFAULT_NUMERICS"]
