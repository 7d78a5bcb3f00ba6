"""hicksdual package.

Notes:
- Keep top-level imports minimal to avoid import-time side effects.
- Solvers live under `hicksdual.equilibrium`; the command line under `hicksdual.cli`.
"""

from __future__ import annotations

__all__ = ["__version__"]

__version__ = "0.1.0"
