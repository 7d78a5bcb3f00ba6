"""Report rendering for the command-line interface."""

from hicksdual.reports.render import Report, outcome_report, render, render_json, render_text

__all__ = ["Report", "outcome_report", "render", "render_json", "render_text"]
