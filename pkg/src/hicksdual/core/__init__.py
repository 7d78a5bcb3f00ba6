"""Exact numbers, bundles, valuations, utility models and economies."""

from hicksdual.core.allocations import Allocation, enumerate_allocations
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    EndowmentAllocation,
    Quasilinear,
    Quasilog,
    TabulatedFamily,
    UtilityLevel,
    UtilityModel,
    Valuation,
    check_level,
    compensation,
    endowment_allocations,
    level_of,
    money_floor,
    utility_key,
    validate_economy,
    validate_endowment,
)

__all__ = [
    "Agent",
    "Allocation",
    "ConsumptionBundle",
    "Economy",
    "EndowmentAllocation",
    "Quasilinear",
    "Quasilog",
    "TabulatedFamily",
    "UtilityLevel",
    "UtilityModel",
    "Valuation",
    "check_level",
    "compensation",
    "endowment_allocations",
    "enumerate_allocations",
    "level_of",
    "money_floor",
    "utility_key",
    "validate_economy",
    "validate_endowment",
]
