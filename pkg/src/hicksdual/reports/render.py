# Description: Command reports rendered as markdown text or sorted-key JSON.
"""Report rendering.

Notes:
- A report is a title, ordered scalar fields, optional lists of records and optional tables.
- Rationals always leave as "p/q" strings and bundles as "q1,q2" strings, in both formats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import pandas as pd

from hicksdual.core.numbers import format_bundle, format_rational
from hicksdual.equilibrium.outcomes import (
    AllocationsExhausted,
    CEOutcome,
    Found,
    NotFound,
    SearchExhausted,
)
from hicksdual.structure.lp import FarkasCertificate


@dataclass
class Report:
    title: str
    fields: dict[str, Any] = field(default_factory=dict)
    records: dict[str, list[dict[str, Any]]] = field(default_factory=dict)
    tables: dict[str, pd.DataFrame] = field(default_factory=dict)


def format_price(p: tuple[Fraction, ...]) -> str:
    return ",".join(format_rational(q) for q in p)


def format_allocation(alloc: tuple[tuple[int, ...], ...]) -> str:
    return ";".join(format_bundle(x) for x in alloc)


def to_jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, pd.DataFrame):
        return [to_jsonable(r) for r in value.to_dict(orient="records")]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    if pd.isna(value):
        return None
    return value.item() if hasattr(value, "item") else str(value)


def certificate_records(cert: FarkasCertificate) -> list[dict[str, Any]]:
    names = cert.system.variables
    return [
        {
            "multiplier": format_rational(lam),
            "constraint": c.describe(names),
            "label": c.label,
        }
        for lam, c in cert.support()
    ]


def outcome_report(title: str, outcome: CEOutcome) -> Report:
    report = Report(title)
    if isinstance(outcome, Found):
        report.fields.update(
            {
                "status": "found",
                "price": format_price(outcome.price),
                "allocation": format_allocation(outcome.allocation),
                "money": [format_rational(m) for m in outcome.money],
            }
        )
        return report
    assert isinstance(outcome, NotFound)
    cert = outcome.certificate
    report.fields["status"] = "not_found" if outcome.is_proof else "exhausted"
    if outcome.allocation is not None:
        report.fields["allocation"] = format_allocation(outcome.allocation)
    if isinstance(cert, FarkasCertificate):
        report.fields["certificate"] = "farkas"
        report.fields["combined_bound"] = format_rational(cert.combined_bound())
        report.records["multipliers"] = certificate_records(cert)
    elif isinstance(cert, AllocationsExhausted):
        report.fields["certificate"] = "allocations_exhausted"
        report.fields["allocations_refuted"] = cert.allocations
    elif isinstance(cert, SearchExhausted):
        report.fields["details"] = cert.details
        report.fields["iterations"] = cert.iterations
    return report


def _cell(value: Any) -> str:
    value = to_jsonable(value)
    if value is None:
        return "n/a"
    if isinstance(value, list):
        return "; ".join(str(v) for v in value)
    return str(value)


def _markdown_table(rows: list[dict[str, Any]]) -> list[str]:
    if not rows:
        return ["(none)"]
    headers = list(rows[0])
    lines = ["| " + " | ".join(headers) + " |", "| " + " | ".join(["---"] * len(headers)) + " |"]
    lines += ["| " + " | ".join(_cell(r.get(h)) for h in headers) + " |" for r in rows]
    return lines


def render_text(report: Report) -> str:
    lines = [f"# {report.title}", ""]
    for key, value in report.fields.items():
        lines.append(f"**{key}:** {_cell(value)}")
    for name, rows in report.records.items():
        lines += ["", f"## {name}", ""] + _markdown_table(rows)
    for name, table in report.tables.items():
        lines += ["", f"## {name}", ""] + _markdown_table(table.to_dict(orient="records"))
    lines.append("")
    return "\n".join(lines)


def render_json(report: Report) -> str:
    payload = {
        "title": report.title,
        **to_jsonable(report.fields),
        **{name: to_jsonable(rows) for name, rows in report.records.items()},
        **{name: to_jsonable(table) for name, table in report.tables.items()},
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    return render_text(report)
