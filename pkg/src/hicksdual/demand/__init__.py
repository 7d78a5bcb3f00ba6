"""Demand oracles."""

from hicksdual.demand.oracles import (
    DemandSet,
    affordable,
    budget_money,
    expenditure,
    hicksian_demand,
    indirect_utility,
    marshallian_demand,
    quasilinear_demand,
    satisfies_compensated_law,
    verify_demand_duality,
)

__all__ = [
    "DemandSet",
    "affordable",
    "budget_money",
    "expenditure",
    "hicksian_demand",
    "indirect_utility",
    "marshallian_demand",
    "quasilinear_demand",
    "satisfies_compensated_law",
    "verify_demand_duality",
]
