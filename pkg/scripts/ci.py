"""
Purpose:
    Run the same formatting, linting, and test commands that CI executes so local
    runs of hicksdual mirror GitHub Actions.
Inputs:
    None (uses the current working directory and the active Python interpreter).
Outputs (path + format):
    None; emits command output to stdout/stderr and exits with a process status code.
How to run:
    python scripts/ci.py
    python scripts/ci.py --cov    # tests with a coverage summary for src/hicksdual

Single Source of Truth:
- This script is the canonical CI command used by GitHub Actions.
- It runs formatting check, lint, and tests in a fixed, deterministic order.
"""

from __future__ import annotations

import argparse
import shutil
import subprocess
import sys


def run(cmd: list[str]) -> None:
    print(f"\n$ {' '.join(cmd)}")
    subprocess.run(cmd, check=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Run hicksdual quality gates.")
    parser.add_argument("--cov", action="store_true", help="Report coverage (pytest-cov).")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    python = sys.executable

    if shutil.which("ruff") is None:
        print("WARNING: ruff not found on PATH; attempting `python -m ruff` instead.")

    tests = [python, "-m", "pytest"]
    if args.cov:
        tests += ["--cov=hicksdual", "--cov-report=term-missing"]

    # Format, lint, then tests.
    commands = [
        [python, "-m", "ruff", "format", "--check", "."],
        [python, "-m", "ruff", "check", "."],
        tests,
    ]
    for cmd in commands:
        try:
            run(cmd)
        except subprocess.CalledProcessError as exc:
            print(f"\nFAILED: {' '.join(cmd)} (exit {exc.returncode})")
            return exc.returncode

    print("\nOK: CI checks passed.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
