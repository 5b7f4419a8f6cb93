"""Tests for outcome."""
