"""Data contracts for report tables."""
