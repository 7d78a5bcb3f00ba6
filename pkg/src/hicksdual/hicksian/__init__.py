"""Hicksian valuations, Hicksian economies and tabulated valuation families."""

from hicksdual.hicksian.economy import (
    HicksianEconomy,
    TUEconomy,
    build_hicksian_economy,
    tu_economy_from,
)
from hicksdual.hicksian.valuations import (
    family_from_grid,
    hicksian_valuation,
    level_shift,
    structural_valuations,
    tabulate,
)

__all__ = [
    "HicksianEconomy",
    "TUEconomy",
    "build_hicksian_economy",
    "family_from_grid",
    "hicksian_valuation",
    "level_shift",
    "structural_valuations",
    "tabulate",
    "tu_economy_from",
]
