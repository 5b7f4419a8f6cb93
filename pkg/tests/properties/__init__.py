"""Property-based tests for mimo-capacity.

Uses Hypothesis to check invariants of eigenvalue grouping, signed-log
arithmetic and hypergeometric symmetry.
"""

__all__ = []
