"""Tests for eigpdf."""
