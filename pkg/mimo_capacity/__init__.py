"""
mimo-capacity: exact ergodic mutual information of correlated MIMO links

Closed forms for Rayleigh-fading links whose one-sided correlation has
eigenvalues of arbitrary multiplicity, composed into co-channel interference
and relay-network figures, with Monte Carlo oracles for every result.

Features:
- Covariance spectra and interference scenarios (CovarianceSpec, NetworkScenario)
- Special functions in signed-log form (incomplete gamma, moments, scalar pFq)
- Hypergeometric functions of two matrix arguments with coincident eigenvalues
- Joint eigenvalue density of H Phi H^H, normalization and sampling
- Single-user, multiuser, Gaussian-approximation and relay capacities
"""

__version__ = "0.1.0"
__license__ = "MIT"

# Re-export capacity
from mimo_capacity.capacity import (
    CapacityResult,
    Diagnostics,
    LinkCase,
    MonteCarloEstimate,
    PointFailure,
    ScenarioSweep,
    SweepPoint,
    capacity_gaussian_approx,
    capacity_mu,
    capacity_su,
    det_integral_identity,
    jensen_upper_bound,
    monte_carlo_jensen,
    monte_carlo_mu,
    monte_carlo_su,
    nats_to_bits,
    receive_side,
    relay_upper_bound,
    sweep,
    symmetric_network,
    transmit_side,
)

# Re-export core
from mimo_capacity.core import (
    DEFAULT_NUMERICS,
    ConsistencyError,
    ConvergenceError,
    DomainError,
    MimoCapacityError,
    NumericsConfig,
    configure_logging,
)

# Re-export covariance
from mimo_capacity.covariance import (
    CovarianceSpec,
    MultiplicityIndex,
    NetworkScenario,
    UserLink,
    build_interference_matrices,
    canonicalize,
    from_groups,
    index_maps,
)

# Re-export eigpdf
from mimo_capacity.eigpdf import (
    EigenPdf,
    joint_pdf,
    normalization_check,
    sample_eigenvalues,
)

# Re-export hypfun
from mimo_capacity.hypfun import EigenArgument, hyp0F0, hyp1F0, hyp_pFq

# Re-export outcome
from mimo_capacity.outcome import Error, Invalid, Issue, Ok, Result, Valid, Validation

# Re-export specfun
from mimo_capacity.specfun import (
    SignedLogValue,
    log_moment_integral,
    power_moment_integral,
    upper_incomplete_gamma,
)

__all__ = [
    # Capacity
    "CapacityResult",
    "Diagnostics",
    "MonteCarloEstimate",
    "LinkCase",
    "SweepPoint",
    "PointFailure",
    "ScenarioSweep",
    "capacity_su",
    "capacity_mu",
    "capacity_gaussian_approx",
    "relay_upper_bound",
    "jensen_upper_bound",
    "det_integral_identity",
    "transmit_side",
    "receive_side",
    "sweep",
    "symmetric_network",
    "monte_carlo_su",
    "monte_carlo_mu",
    "monte_carlo_jensen",
    "nats_to_bits",
    # Core
    "NumericsConfig",
    "DEFAULT_NUMERICS",
    "MimoCapacityError",
    "DomainError",
    "ConvergenceError",
    "ConsistencyError",
    "configure_logging",
    # Covariance
    "CovarianceSpec",
    "canonicalize",
    "from_groups",
    "MultiplicityIndex",
    "index_maps",
    "UserLink",
    "NetworkScenario",
    "build_interference_matrices",
    # Eigenvalue density
    "EigenPdf",
    "joint_pdf",
    "normalization_check",
    "sample_eigenvalues",
    # Hypergeometric functions
    "EigenArgument",
    "hyp0F0",
    "hyp1F0",
    "hyp_pFq",
    # Outcome
    "Issue",
    "Result",
    "Ok",
    "Error",
    "Validation",
    "Valid",
    "Invalid",
    # Special functions
    "SignedLogValue",
    "upper_incomplete_gamma",
    "power_moment_integral",
    "log_moment_integral",
]
