"""Tests for hypfun."""
