"""Comonads, coalgebras and coefficient structures over G-sets."""
