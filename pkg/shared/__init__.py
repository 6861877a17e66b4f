"""Shared constants and helpers used across app modules."""
