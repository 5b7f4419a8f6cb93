"""Mutual information of a link with co-channel interferers.

With ``Psi`` the interferer spectrum and ``Psi~`` the spectrum of all users:

    C_MU = C_SU(Psi~, NR) - C_SU(Psi, NR)
"""

from __future__ import annotations

import logging
from dataclasses import replace

from mimo_capacity.capacity.closed_form import capacity_su
from mimo_capacity.capacity.montecarlo import monte_carlo_mu
from mimo_capacity.capacity.result import CapacityResult
from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import ConsistencyError
from mimo_capacity.covariance.scenario import NetworkScenario, build_interference_matrices

logger = logging.getLogger(__name__)


def capacity_mu(
    scenario: NetworkScenario, config: NumericsConfig = DEFAULT_NUMERICS
) -> CapacityResult:
    """Ergodic mutual information of the desired user under interference.

    Without interferers this is ``capacity_su`` of the desired link.
    When either term carries a conditioning warning the result gets a Monte
    Carlo estimate of C_MU itself as its fallback.

    Raises:
        ConsistencyError: The difference is negative beyond rounding and
            neither term carried a conditioning warning

    Example:
        >>> from mimo_capacity.covariance import NetworkScenario
        >>> round(capacity_mu(NetworkScenario.single_user(1, 1, 1.0)).value_nats, 6)
        0.596347
    """
    psi, psi_tilde = build_interference_matrices(scenario, config)
    total = capacity_su(psi_tilde, scenario.nr, config)
    if psi.is_empty():
        return total
    interference = capacity_su(psi, scenario.nr, config)
    diag = total.diagnostics.merged(interference.diagnostics)
    value = total.value_nats - interference.value_nats
    if value < 0:
        scale = max(total.value_nats, interference.value_nats, 1.0)
        if -value > config.consistency_tolerance * scale:
            if not diag.warnings:
                raise ConsistencyError(
                    f"negative multiuser mutual information {value:.6g} for {scenario.describe()}",
                    {"total": total.value_nats, "interference": interference.value_nats},
                )
            message = f"difference {value:.3g} nats clamped to 0 after conditioning warnings"
            logger.warning("%s (%s)", message, scenario.describe())
            diag = replace(diag, warnings=diag.warnings + (message,))
        value = 0.0
    if diag.warnings:
        # Per-term fallbacks estimate C_SU, not the difference.
        fallback = monte_carlo_mu(scenario, config.fallback_samples, config.fallback_seed, config)
        diag = replace(diag, fallback=fallback)
    return CapacityResult(value, diag)


def capacity_gaussian_approx(
    scenario: NetworkScenario, config: NumericsConfig = DEFAULT_NUMERICS
) -> CapacityResult:
    """Treat the interference as extra white noise.

    The desired link is evaluated alone with noise ``sigma2 + sum P_i``, so
    its per-antenna SNR is the SINR of the scenario.
    """
    alone = scenario.desired_only(noise=scenario.sigma2 + scenario.interference_power)
    _, psi_tilde = build_interference_matrices(alone, config)
    return capacity_su(psi_tilde, scenario.nr, config)


__all__ = ["capacity_mu", "capacity_gaussian_approx"]
