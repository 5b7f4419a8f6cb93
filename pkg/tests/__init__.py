"""Tests for the mimo-capacity package."""
