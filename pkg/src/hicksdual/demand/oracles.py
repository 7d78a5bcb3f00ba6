# Description: Quasilinear, Marshallian and Hicksian demand with indirect utility and expenditure.
"""Demand oracles.

Notes:
- Every oracle returns the full set of maximisers as a frozenset; nothing breaks ties.
- Marshallian budgets are strict: a bundle is affordable only if the money left over is
  strictly above the agent's money floor.
- Hicksian demand is the quasilinear demand of the Hicksian valuation, which is how the
  expenditure-minimisation problem is solved here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from hicksdual.core.errors import DimensionMismatch
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    UtilityLevel,
    Valuation,
    check_consumption,
    money_floor,
    utility_key,
)
from hicksdual.core.numbers import Bundle, PriceVector, dot, sub
from hicksdual.hicksian.valuations import hicksian_valuation

DemandSet = frozenset[Bundle]


def _check_price(p: Sequence[Fraction], n: int) -> None:
    if len(p) != n:
        raise DimensionMismatch(f"price vector has {len(p)} entries, expected {n}")


def _argmax(scores: dict[Bundle, Fraction]) -> DemandSet:
    best = max(scores.values())
    return frozenset(x for x, s in scores.items() if s == best)


def quasilinear_demand(v: Valuation, p: PriceVector) -> DemandSet:
    """All maximisers of ``V(x) - p.x``."""
    _check_price(p, v.dimension)
    return _argmax({x: value - dot(p, x) for x, value in v.values.items()})


def budget_money(p: PriceVector, endow: ConsumptionBundle, x: Bundle) -> Fraction:
    """Money left after trading the endowment for ``x`` at prices ``p``."""
    return endow.money - dot(p, sub(x, endow.goods))


def affordable(agent: Agent, p: PriceVector, endow: ConsumptionBundle, x: Bundle) -> bool:
    floor = money_floor(agent)
    return floor is None or budget_money(p, endow, x) > floor


def _marshallian_keys(
    agent: Agent, p: PriceVector, endow: ConsumptionBundle
) -> dict[Bundle, Fraction]:
    _check_price(p, agent.dimension)
    check_consumption(agent, endow)
    keys: dict[Bundle, Fraction] = {}
    for x in agent.feasible_set:
        if affordable(agent, p, endow, x):
            keys[x] = utility_key(agent, ConsumptionBundle(budget_money(p, endow, x), x))
    return keys


def marshallian_demand(agent: Agent, p: PriceVector, endow: ConsumptionBundle) -> DemandSet:
    return _argmax(_marshallian_keys(agent, p, endow))


def indirect_utility(agent: Agent, p: PriceVector, endow: ConsumptionBundle) -> UtilityLevel:
    """Highest level reachable from ``endow`` at ``p`` (``w`` for quasilog agents)."""
    return max(_marshallian_keys(agent, p, endow).values())


def hicksian_demand(agent: Agent, p: PriceVector, u: UtilityLevel) -> DemandSet:
    return quasilinear_demand(hicksian_valuation(agent, u), p)


def expenditure(agent: Agent, p: PriceVector, u: UtilityLevel) -> Fraction:
    """``min_x s(x, u) + p.x``."""
    v = hicksian_valuation(agent, u)
    _check_price(p, v.dimension)
    return min(-value + dot(p, x) for x, value in v.values.items())


def verify_demand_duality(agent: Agent, p: PriceVector, endow: ConsumptionBundle) -> bool:
    """Marshallian demand equals Hicksian demand at the indirect utility, and the
    expenditure there equals the value of the endowment."""
    u = indirect_utility(agent, p, endow)
    if marshallian_demand(agent, p, endow) != hicksian_demand(agent, p, u):
        return False
    return expenditure(agent, p, u) == endow.money + dot(p, endow.goods)


def satisfies_compensated_law(
    agent: Agent, u: UtilityLevel, p: PriceVector, q: PriceVector
) -> bool:
    """``(q - p).(y - x) <= 0`` for all ``x`` in ``D_H(p, u)`` and ``y`` in ``D_H(q, u)``."""
    dp = [b - a for a, b in zip(p, q)]
    return all(
        dot(dp, sub(y, x)) <= 0
        for x in hicksian_demand(agent, p, u)
        for y in hicksian_demand(agent, q, u)
    )
