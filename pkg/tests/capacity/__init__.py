"""Tests for capacity."""
