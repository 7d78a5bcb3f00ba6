"""CLI behaviour on the bundled example documents.

Notes:
- Commands run in-process through ``main(argv)``; documents come from ``fixtures``.
- Exit codes: 0 computed, 1 property fails or no equilibrium, 2 input error, 3 exhausted.
"""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from hicksdual.cli import main


def _json(capsys: pytest.CaptureFixture[str]) -> dict:
    return json.loads(capsys.readouterr().out)


def test_solve_tu_reports_the_certificate(docs: Path, capsys) -> None:
    capsys.readouterr()
    code = main(["solve", "tu", str(docs / "ex44a.json"), "--format", "json"])
    assert code == 1
    payload = _json(capsys)
    assert payload["status"] == "not_found"
    assert [m["multiplier"] for m in payload["multipliers"]] == ["1/2"] * 3


def test_solve_income_finds_the_equilibrium(docs: Path, capsys) -> None:
    capsys.readouterr()
    assert main(["solve", "income", str(docs / "ex44b.json"), "--format", "json"]) == 0
    payload = _json(capsys)
    assert payload["allocation"] == "1,0;0,1"
    assert payload["verified"] is True


def test_solve_income_on_the_five_good_fixture(docs: Path, capsys) -> None:
    capsys.readouterr()
    assert main(["solve", "income", str(docs / "ex53.json"), "--format", "json"]) == 0
    assert _json(capsys)["verified"] is True


def test_solve_without_fallback_exhausts(docs: Path, solver_yaml: Path) -> None:
    text = solver_yaml.read_text(encoding="utf-8").replace(
        "exhaustive_fallback: true", "exhaustive_fallback: false"
    )
    custom = docs / "solver.yaml"
    custom.write_text(text, encoding="utf-8")
    code = main(
        ["solve", "income", str(docs / "ex44a.json"), "--config", str(custom), "--max-iter", "3"]
    )
    assert code == 3


def test_verify_ce(docs: Path) -> None:
    doc = str(docs / "ex44b.json")
    assert main(["verify-ce", doc, "--price", "3,2", "--alloc", "1,0;0,1"]) == 0
    assert main(["verify-ce", doc, "--price", "2,2", "--alloc", "1,0;0,1"]) == 1


def test_demand_commands(docs: Path, capsys) -> None:
    doc = str(docs / "ex44b.json")
    capsys.readouterr()
    args = ["demand", "marshallian", doc, "--agent", "j", "--price", "2,2"]
    assert main([*args, "--format", "json"]) == 0
    assert _json(capsys)["demand"] == ["1,1"]
    args = ["demand", "hicksian", doc, "--agent", "j", "--price", "2,2", "--level", "5/11"]
    assert main([*args, "--format", "json"]) == 0
    assert _json(capsys)["demand"] == ["1,0"]


def test_check_demand_type_and_unimodularity(docs: Path, capsys) -> None:
    capsys.readouterr()
    assert main(["check", "demand-type", str(docs / "ex52.json"), "--format", "json"]) == 0
    row = _json(capsys)["agents"][0]
    assert row["vectors"] == ["1,0", "1,-1", "0,1"]
    assert row["uniquely_demanded"] == ["0,0", "0,3", "1,3", "3,0", "3,1"]
    assert main(["check", "unimodular", "--vectors", "1,-1;1,1", "--format", "json"]) == 1
    assert _json(capsys)["minor_gcd"] == 2
    assert main(["check", "unimodular", str(docs / "ex53.json")]) == 0


def test_check_substitutes(docs: Path) -> None:
    assert main(["check", "substitutes", str(docs / "ex44a.json"), "--agent", "k"]) == 0
    assert main(["check", "substitutes", str(docs / "ex44a.json")]) == 1


def test_pareto_check(docs: Path) -> None:
    assert main(["pareto", "check", str(docs / "ex44b.json")]) == 1
    assert main(["pareto", "support", str(docs / "ex44b.json")]) == 1


def test_counterexample_is_written(docs: Path, tmp_path: Path) -> None:
    out = tmp_path / "cx.json"
    code = main(["counterexample", "unimodular", "--vectors", "1,-1;1,1", "--out", str(out)])
    assert code == 0
    assert main(["solve", "tu", str(out)]) == 1


def test_input_errors_exit_2(docs: Path, tmp_path: Path, capsys) -> None:
    bad = tmp_path / "bad.json"
    bad.write_text('{"goods": [', encoding="utf-8")
    assert main(["solve", "tu", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err
    assert main(["solve", "tu", str(tmp_path / "missing.json")]) == 2
    args = ["demand", "quasilinear", str(docs / "ex44a.json"), "--agent", "zed", "--price", "1,1"]
    assert main(args) == 2
    assert main(["solve", "tu", str(docs / "ex44b.json")]) == 2
