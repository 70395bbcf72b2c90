"""CrossedCheck source package."""
