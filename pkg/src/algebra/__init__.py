"""Finite groups, G-sets and crossed G-sets."""
