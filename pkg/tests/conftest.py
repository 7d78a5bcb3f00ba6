from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


@pytest.fixture()
def solver_yaml() -> Path:
    """The shipped solver configuration."""
    return ROOT / "config" / "solver.yaml"


@pytest.fixture()
def docs(tmp_path: Path) -> Path:
    """The example documents, written by the ``fixtures`` command."""
    from hicksdual.cli import main

    out = tmp_path / "fixtures"
    assert main(["fixtures", "--outdir", str(out)]) == 0
    return out
