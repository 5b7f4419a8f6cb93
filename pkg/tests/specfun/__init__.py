"""Tests for specfun."""
