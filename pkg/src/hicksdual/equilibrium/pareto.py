# Description: Pareto efficiency of consumption profiles and supporting equilibrium prices.
"""Pareto efficiency.

Notes:
- A profile ``(m^j, x^j)`` is efficient iff, at the levels it reaches, no goods allocation of
  the same aggregate reaches them all with less total money.
- An efficient profile is supported when it is itself a Marshallian equilibrium from the
  endowment equal to the profile; that holds iff the Hicksian economy at its levels has an
  equilibrium.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

from hicksdual.core.allocations import DEFAULT_MAX_ALLOCATIONS, enumerate_allocations
from hicksdual.core.errors import DimensionMismatch, NotParetoEfficient
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    EndowmentAllocation,
    UtilityLevel,
    compensation,
    level_of,
    money_floor,
)
from hicksdual.core.numbers import Bundle, PriceVector, add, zeros
from hicksdual.equilibrium.income import verify_ce
from hicksdual.equilibrium.tu import SupportResult, supporting_prices, welfare_max_allocations
from hicksdual.hicksian.economy import HicksianEconomy, build_hicksian_economy

logger = logging.getLogger(__name__)


def _profile_economy(e: Economy, profile: EndowmentAllocation) -> Economy:
    if len(profile) != len(e.agents):
        raise DimensionMismatch(f"{len(profile)} consumption bundles for {len(e.agents)} agents")
    total = zeros(e.n_goods)
    for c in profile.endowments:
        total = add(total, c.goods)
    return Economy(e.goods, e.agents, total)


def _money_needed(agent: Agent, x: Bundle, u: UtilityLevel) -> Fraction:
    """Least money holding ``x`` at level ``u``; at the floor any feasible money does better."""
    s = compensation(agent, x, u)
    floor = money_floor(agent)
    return s if floor is None else max(s, floor)


def is_pareto_efficient(
    e: Economy,
    profile: EndowmentAllocation,
    max_allocations: int = DEFAULT_MAX_ALLOCATIONS,
) -> bool:
    ep = _profile_economy(e, profile)
    levels = [level_of(a, c) for a, c in zip(ep.agents, profile.endowments)]
    budget = sum(profile.money, Fraction(0))
    for alloc in enumerate_allocations(ep.feasible_sets, ep.total_endowment, max_allocations):
        needed = sum(
            (_money_needed(a, x, u) for a, x, u in zip(ep.agents, alloc, levels)),
            Fraction(0),
        )
        if needed < budget:
            logger.debug("profile improved upon by %s", alloc)
            return False
    return True


def support_pareto(
    e: Economy,
    profile: EndowmentAllocation,
    max_allocations: int = DEFAULT_MAX_ALLOCATIONS,
) -> PriceVector | None:
    """A price making ``profile`` an equilibrium from itself; None if none exists."""
    if not is_pareto_efficient(e, profile, max_allocations):
        raise NotParetoEfficient("the profile is not Pareto efficient")
    ep = _profile_economy(e, profile)
    levels = [level_of(a, c) for a, c in zip(ep.agents, profile.endowments)]
    h = build_hicksian_economy(ep, levels)
    result = supporting_prices(h, profile.goods)
    if not isinstance(result, SupportResult):
        logger.info("efficient profile is not supported at levels %s", levels)
        return None
    if not verify_ce(ep, profile, result.price, profile.goods):
        raise AssertionError(f"supporting price {result.price} is not an equilibrium price")
    return result.price


def pareto_profile_at(
    e: Economy,
    levels: Sequence[UtilityLevel],
    max_allocations: int = DEFAULT_MAX_ALLOCATIONS,
) -> tuple[HicksianEconomy, EndowmentAllocation]:
    """Welfare-maximising allocation of the Hicksian economy at ``levels``, each agent paid
    exactly its compensation; the profile is efficient and reaches ``levels``."""
    h = build_hicksian_economy(e, levels)
    alloc = welfare_max_allocations(h, max_allocations)[0]
    profile = EndowmentAllocation(
        tuple(
            ConsumptionBundle(compensation(a, x, u), x)
            for a, x, u in zip(e.agents, alloc, h.levels)
        )
    )
    return h, profile
