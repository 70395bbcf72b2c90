"""Scenarios, the check pipeline and report models."""
