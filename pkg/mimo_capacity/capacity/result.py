"""Result records of capacity evaluations."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from typing_extensions import override

from mimo_capacity.core.errors import DomainError

LN2 = math.log(2.0)


def nats_to_bits(value: float) -> float:
    return value / LN2


@dataclass(frozen=True, slots=True)
class MonteCarloEstimate:
    """Sample mean of an oracle run.

    Attributes:
        mean: Sample mean (nats)
        stderr: Standard error of the mean (nats)
        samples: Number of samples
        seed: Generator key
    """

    mean: float
    stderr: float
    samples: int
    seed: int

    @property
    def mean_bits(self) -> float:
        return nats_to_bits(self.mean)

    @property
    def stderr_bits(self) -> float:
        return nats_to_bits(self.stderr)

    def deviation(self, value: float) -> float:
        """``|value - mean|`` in standard errors (inf when stderr is 0 and they differ)."""
        diff = abs(value - self.mean)
        if self.stderr == 0:
            return 0.0 if diff == 0 else math.inf
        return diff / self.stderr

    def agrees_with(self, value: float, sigmas: float = 3.0, slack: float = 0.0) -> bool:
        """Whether ``value`` lies within ``sigmas`` standard errors plus ``slack``."""
        return abs(value - self.mean) <= sigmas * self.stderr + slack


@dataclass(frozen=True, slots=True)
class Diagnostics:
    """Numerical side information of one evaluation.

    Attributes:
        warnings: Human-readable conditioning warnings
        n_min: Number of summed determinants
        log_term_magnitudes: ``log|K det R^(k)|`` for every k
        fallback: Monte Carlo value attached when the closed form is ill-conditioned
        extended_digits: Working precision of the determinants when double
            precision was not enough, else None
    """

    warnings: tuple[str, ...] = ()
    n_min: int = 0
    log_term_magnitudes: tuple[float, ...] = ()
    fallback: MonteCarloEstimate | None = None
    extended_digits: int | None = None

    def merged(self, other: Diagnostics) -> Diagnostics:
        """Combine the warnings of two evaluations (the first keeps its terms)."""
        digits = [d for d in (self.extended_digits, other.extended_digits) if d is not None]
        return replace(
            self,
            warnings=self.warnings + other.warnings,
            fallback=self.fallback or other.fallback,
            extended_digits=max(digits, default=None),
        )

    @property
    def term_spread(self) -> float:
        """``max / min`` of the per-k term magnitudes."""
        finite = [v for v in self.log_term_magnitudes if math.isfinite(v)]
        if len(finite) < len(self.log_term_magnitudes):
            return math.inf
        if not finite:
            return 1.0
        return math.exp(max(finite) - min(finite))


@dataclass(frozen=True, slots=True)
class CapacityResult:
    """Ergodic mutual information.

    Attributes:
        value_nats: Value in nats per channel use
        diagnostics: How the value was obtained
    """

    value_nats: float
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    def __post_init__(self) -> None:
        if not (self.value_nats >= 0 and math.isfinite(self.value_nats)):
            raise DomainError(f"mutual information must be finite and >= 0, got {self.value_nats}")

    @property
    def value_bits(self) -> float:
        """Value in bits/s/Hz."""
        return nats_to_bits(self.value_nats)

    @property
    def warnings(self) -> tuple[str, ...]:
        return self.diagnostics.warnings

    def scaled(self, factor: float) -> CapacityResult:
        return CapacityResult(self.value_nats * factor, self.diagnostics)

    @override
    def __repr__(self) -> str:
        return f"CapacityResult({self.value_bits:.6f} bits, warnings={len(self.warnings)})"


__all__ = ["LN2", "nats_to_bits", "MonteCarloEstimate", "Diagnostics", "CapacityResult"]
