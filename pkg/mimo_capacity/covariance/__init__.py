"""Eigenvalue/multiplicity descriptions of correlation and interference matrices."""

from mimo_capacity.covariance.indexing import MultiplicityIndex, index_maps, multiplicity_index
from mimo_capacity.covariance.scenario import (
    NetworkScenario,
    UserLink,
    build_interference_matrices,
    db_to_linear,
    linear_to_db,
)
from mimo_capacity.covariance.spec import CovarianceSpec, canonicalize, from_groups

__all__ = [
    "CovarianceSpec",
    "canonicalize",
    "from_groups",
    "MultiplicityIndex",
    "index_maps",
    "multiplicity_index",
    "UserLink",
    "NetworkScenario",
    "build_interference_matrices",
    "db_to_linear",
    "linear_to_db",
]
