"""Tests for covariance."""
