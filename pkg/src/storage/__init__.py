"""Storage for check reports."""
