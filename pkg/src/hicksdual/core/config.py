# Description: Typed solver configuration model and YAML loader.
"""Solver configuration.

Notes:
- ``config/solver.yaml`` is the version-controlled source of truth for search limits,
  enumeration caps and probe sizes; CLI flags override individual values.
- Rationals are written as "p/q" strings so the YAML never goes through floats.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Any

import yaml

from hicksdual.core.numbers import as_rational


@dataclass(frozen=True)
class IncomeSearchConfig:
    """Bisection search over utility levels for economies with income effects."""

    max_iter: int = 200
    epsilon: Fraction = Fraction(1, 2**32)
    exhaustive_fallback: bool = True


@dataclass(frozen=True)
class EnumerationConfig:
    max_allocations: int = 10**7


@dataclass(frozen=True)
class ProbeConfig:
    levels_per_agent: int = 5
    endowment_samples: int = 5
    seed: int = 42


@dataclass(frozen=True)
class GrossConfig:
    """Sampling grid for the gross-substitutes refutation check."""

    money_levels: int = 5
    price_step: Fraction = Fraction(1)
    deltas: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(1), Fraction(2))


@dataclass(frozen=True)
class SolverConfig:
    income_search: IncomeSearchConfig
    enumeration: EnumerationConfig
    probe: ProbeConfig
    gross: GrossConfig

    def with_overrides(
        self,
        max_iter: int | None = None,
        epsilon: Fraction | None = None,
        seed: int | None = None,
    ) -> SolverConfig:
        income = self.income_search
        if max_iter is not None:
            income = replace(income, max_iter=max_iter)
        if epsilon is not None:
            income = replace(income, epsilon=epsilon)
        probe = self.probe if seed is None else replace(self.probe, seed=seed)
        return replace(self, income_search=income, probe=probe)


def default_config() -> SolverConfig:
    return SolverConfig(
        income_search=IncomeSearchConfig(),
        enumeration=EnumerationConfig(),
        probe=ProbeConfig(),
        gross=GrossConfig(),
    )


def _get(d: dict[str, Any], key: str) -> Any:
    if key not in d:
        raise KeyError(f"Missing required config key: {key}")
    return d[key]


def _positive_int(value: Any, key: str) -> int:
    out = int(value)
    if out < 1:
        raise ValueError(f"{key} must be at least 1")
    return out


def load_config(path: str | Path) -> SolverConfig:
    """Load the solver configuration from YAML, failing fast on missing keys."""
    data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise TypeError("Solver config must be a YAML mapping")

    income = _get(data, "income_search")
    enumeration = _get(data, "enumeration")
    probe = _get(data, "probe")
    gross = _get(data, "gross")

    epsilon = as_rational(str(_get(income, "epsilon")))
    if epsilon <= 0:
        raise ValueError("income_search.epsilon must be positive")

    return SolverConfig(
        income_search=IncomeSearchConfig(
            max_iter=_positive_int(_get(income, "max_iter"), "income_search.max_iter"),
            epsilon=epsilon,
            exhaustive_fallback=bool(_get(income, "exhaustive_fallback")),
        ),
        enumeration=EnumerationConfig(
            max_allocations=_positive_int(
                _get(enumeration, "max_allocations"), "enumeration.max_allocations"
            ),
        ),
        probe=ProbeConfig(
            levels_per_agent=_positive_int(
                _get(probe, "levels_per_agent"), "probe.levels_per_agent"
            ),
            endowment_samples=int(_get(probe, "endowment_samples")),
            seed=int(_get(probe, "seed")),
        ),
        gross=GrossConfig(
            money_levels=_positive_int(_get(gross, "money_levels"), "gross.money_levels"),
            price_step=as_rational(str(_get(gross, "price_step"))),
            deltas=tuple(as_rational(str(d)) for d in _get(gross, "deltas")),
        ),
    )
