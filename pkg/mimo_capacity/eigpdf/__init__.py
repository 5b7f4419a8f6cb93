"""Joint eigenvalue density of Gaussian quadratic forms, with sampling oracles."""

from mimo_capacity.eigpdf.density import (
    EigenPdf,
    distinct_joint_pdf,
    g_tilde,
    joint_pdf,
    joint_pdf_unchecked,
    log_joint_pdf,
    normalization_constant,
    vandermonde,
)
from mimo_capacity.eigpdf.normalization import (
    largest_eigenvalue_bin_mass,
    largest_eigenvalue_density,
    normalization_check,
    ordered_domain_integral,
)
from mimo_capacity.eigpdf.sampling import (
    SHARD_SIZE,
    HistogramBin,
    ShardWork,
    complex_gaussian,
    eigenvalue_histogram,
    iter_eigenvalue_shards,
    map_shards,
    sample_eigenvalues,
    shard_generator,
)

__all__ = [
    "EigenPdf",
    "normalization_constant",
    "g_tilde",
    "vandermonde",
    "joint_pdf",
    "log_joint_pdf",
    "joint_pdf_unchecked",
    "distinct_joint_pdf",
    "ordered_domain_integral",
    "normalization_check",
    "largest_eigenvalue_density",
    "largest_eigenvalue_bin_mass",
    "SHARD_SIZE",
    "shard_generator",
    "complex_gaussian",
    "map_shards",
    "ShardWork",
    "iter_eigenvalue_shards",
    "sample_eigenvalues",
    "HistogramBin",
    "eigenvalue_histogram",
]
