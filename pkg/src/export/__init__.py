"""Tabular and Markdown views of check reports."""
