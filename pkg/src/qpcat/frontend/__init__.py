"""Input format, CLI and reports."""
