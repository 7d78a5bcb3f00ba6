# Description: Side-by-side existence probe of Hicksian and Marshallian equilibrium.
"""Duality probe.

Notes:
- The Hicksian side solves the TU economy at every profile of a per-agent level grid.
- The Marshallian side solves sampled endowment allocations and, for every failing Hicksian
  profile, the efficient profile at those levels used as endowment; the latter must have
  no equilibrium, and that is confirmed by the exact decision.
- A row is ``exact`` when its outcome is a verified equilibrium or a proof of nonexistence.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
import pandas as pd

from hicksdual.contracts.probe import HICKSIAN_PROBE_SCHEMA, MARSHALLIAN_PROBE_SCHEMA
from hicksdual.core.allocations import DEFAULT_MAX_ALLOCATIONS, Allocation
from hicksdual.core.config import IncomeSearchConfig, ProbeConfig
from hicksdual.core.models import (
    Agent,
    Economy,
    EndowmentAllocation,
    Quasilinear,
    Quasilog,
    UtilityLevel,
    validate_economy,
)
from hicksdual.core.numbers import format_bundle, format_rational
from hicksdual.data.generators import random_endowment
from hicksdual.equilibrium.income import decide_marshallian_ce, solve_income_ce
from hicksdual.equilibrium.outcomes import CEOutcome, Found
from hicksdual.equilibrium.pareto import pareto_profile_at
from hicksdual.equilibrium.tu import solve_tu_ce
from hicksdual.hicksian.economy import build_hicksian_economy

logger = logging.getLogger(__name__)


def level_grid(agent: Agent, count: int) -> list[Fraction]:
    """``count`` levels: 0, 1, ... for quasilinear, 1/2, 1, 2, ... for quasilog, and evenly
    spaced indices over the tabulated grid."""
    model = agent.utility
    if isinstance(model, Quasilinear):
        return [Fraction(k) for k in range(count)]
    if isinstance(model, Quasilog):
        return [Fraction(2**k, 2) for k in range(count)]
    top = model.top_index
    if top == 0 or count == 1:
        return [Fraction(0)]
    return sorted({Fraction(top * k, count - 1) for k in range(count)})


def _levels(levels: Sequence[UtilityLevel]) -> str:
    return ";".join(format_rational(u) for u in levels)


def _price(outcome: CEOutcome) -> str | None:
    if isinstance(outcome, Found):
        return ",".join(format_rational(q) for q in outcome.price)
    return None


def _allocation(alloc: Allocation | None) -> str | None:
    if alloc is None:
        return None
    return ";".join(format_bundle(x) for x in alloc)


def _endowment(endow: EndowmentAllocation) -> str:
    return ";".join(
        f"{format_rational(c.money)}|{format_bundle(c.goods)}" for c in endow.endowments
    )


def _outcome(outcome: CEOutcome) -> str:
    if isinstance(outcome, Found):
        return "found"
    return "not_found" if outcome.is_proof else "exhausted"


@dataclass(frozen=True)
class DualityReport:
    hicksian: pd.DataFrame
    marshallian: pd.DataFrame

    @property
    def hicksian_all_found(self) -> bool:
        return bool((self.hicksian["outcome"] == "found").all())

    @property
    def marshallian_all_found(self) -> bool:
        return bool((self.marshallian["outcome"] == "found").all())

    @property
    def consistent(self) -> bool:
        """No exact row contradicts the equivalence of both existence questions."""
        exact = self.marshallian[self.marshallian["exact"]]
        if self.hicksian_all_found:
            return bool((exact["outcome"] == "found").all())
        witnesses = exact[exact["source"] == "witness"]
        return bool((witnesses["outcome"] == "not_found").all())

    def summary(self) -> dict[str, object]:
        return {
            "hicksian_profiles": int(len(self.hicksian)),
            "hicksian_all_found": self.hicksian_all_found,
            "marshallian_rows": int(len(self.marshallian)),
            "marshallian_all_found": self.marshallian_all_found,
            "consistent": self.consistent,
        }


def duality_probe(
    e: Economy,
    config: ProbeConfig | None = None,
    search: IncomeSearchConfig | None = None,
    level_grids: Sequence[Sequence[UtilityLevel]] | None = None,
    endowments: Sequence[EndowmentAllocation] | None = None,
    max_allocations: int = DEFAULT_MAX_ALLOCATIONS,
) -> DualityReport:
    cfg = config or ProbeConfig()
    validate_economy(e)
    grids = level_grids or [level_grid(a, cfg.levels_per_agent) for a in e.agents]

    hicksian_rows = []
    failing: list[tuple[Fraction, ...]] = []
    for profile in itertools.product(*grids):
        h = build_hicksian_economy(e, profile)
        outcome = solve_tu_ce(h, max_allocations)
        if not isinstance(outcome, Found):
            failing.append(tuple(profile))
        hicksian_rows.append(
            {
                "levels": _levels(profile),
                "outcome": _outcome(outcome),
                "price": _price(outcome),
                "allocation": _allocation(outcome.allocation),
            }
        )
    logger.debug("%d Hicksian profiles, %d without equilibrium", len(hicksian_rows), len(failing))

    if endowments is None:
        rng = np.random.default_rng(cfg.seed)
        endowments = [
            random_endowment(rng, e, max_allocations=max_allocations)
            for _ in range(cfg.endowment_samples)
        ]
    marshallian_rows = []
    for endow in endowments:
        outcome = solve_income_ce(e, endow, search, max_allocations)
        marshallian_rows.append(
            {
                "source": "sampled",
                "levels": None,
                "endowment": _endowment(endow),
                "outcome": _outcome(outcome),
                "exact": isinstance(outcome, Found) or outcome.is_proof,
                "price": _price(outcome),
                "allocation": _allocation(outcome.allocation),
            }
        )
    for profile in failing:
        _, endow = pareto_profile_at(e, profile, max_allocations)
        outcome = decide_marshallian_ce(e, endow, max_allocations)
        if isinstance(outcome, Found):
            logger.warning("efficient profile at levels %s is an equilibrium", profile)
        marshallian_rows.append(
            {
                "source": "witness",
                "levels": _levels(profile),
                "endowment": _endowment(endow),
                "outcome": _outcome(outcome),
                "exact": isinstance(outcome, Found) or outcome.is_proof,
                "price": _price(outcome),
                "allocation": _allocation(outcome.allocation),
            }
        )

    report = DualityReport(
        HICKSIAN_PROBE_SCHEMA.validate(
            pd.DataFrame(hicksian_rows, columns=list(HICKSIAN_PROBE_SCHEMA.columns))
        ),
        MARSHALLIAN_PROBE_SCHEMA.validate(
            pd.DataFrame(marshallian_rows, columns=list(MARSHALLIAN_PROBE_SCHEMA.columns))
        ),
    )
    if not report.consistent:
        logger.warning("duality probe found an inconsistency: %s", report.summary())
    return report
