"""Ergodic mutual information: closed forms, bounds, sweeps and Monte Carlo oracles."""

from mimo_capacity.capacity.closed_form import (
    capacity_matrices,
    capacity_su,
    capacity_terms,
    extended_determinants,
    jensen_upper_bound,
    relay_upper_bound,
)
from mimo_capacity.capacity.identity import ScalarFunction, det_integral_identity, element_matrices
from mimo_capacity.capacity.links import LinkCase, receive_side, transmit_side
from mimo_capacity.capacity.montecarlo import monte_carlo_jensen, monte_carlo_mu, monte_carlo_su
from mimo_capacity.capacity.multiuser import capacity_gaussian_approx, capacity_mu
from mimo_capacity.capacity.result import (
    LN2,
    CapacityResult,
    Diagnostics,
    MonteCarloEstimate,
    nats_to_bits,
)
from mimo_capacity.capacity.sweep import (
    AXES,
    PointFailure,
    PointResult,
    ScenarioSweep,
    SweepAxis,
    SweepPoint,
    apply_axis,
    check_grid,
    evaluate_point,
    sweep,
    symmetric_network,
    symmetric_network_ordered,
)

__all__ = [
    # Results
    "LN2",
    "nats_to_bits",
    "CapacityResult",
    "Diagnostics",
    "MonteCarloEstimate",
    # Closed forms
    "capacity_matrices",
    "capacity_terms",
    "extended_determinants",
    "capacity_su",
    "relay_upper_bound",
    "jensen_upper_bound",
    "capacity_mu",
    "capacity_gaussian_approx",
    "ScalarFunction",
    "element_matrices",
    "det_integral_identity",
    # Links
    "LinkCase",
    "transmit_side",
    "receive_side",
    # Oracles
    "monte_carlo_su",
    "monte_carlo_mu",
    "monte_carlo_jensen",
    # Sweeps
    "SweepAxis",
    "AXES",
    "SweepPoint",
    "PointFailure",
    "PointResult",
    "ScenarioSweep",
    "check_grid",
    "apply_axis",
    "evaluate_point",
    "sweep",
    "symmetric_network",
    "symmetric_network_ordered",
]
