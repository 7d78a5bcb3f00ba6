"""Competitive equilibrium: TU and income-effect solvers, Pareto support, probes and
counterexample constructors."""

from hicksdual.equilibrium.counterexamples import (
    Counterexample,
    counterexample_substitutes,
    counterexample_unimodular,
)
from hicksdual.equilibrium.income import (
    IncomeSearchState,
    NetExpenditureBox,
    decide_marshallian_ce,
    initial_search_state,
    net_expenditure_box,
    solve_income_ce,
    verify_ce,
)
from hicksdual.equilibrium.outcomes import (
    AllocationsExhausted,
    CEOutcome,
    Found,
    NotFound,
    SearchExhausted,
)
from hicksdual.equilibrium.pareto import is_pareto_efficient, pareto_profile_at, support_pareto
from hicksdual.equilibrium.probe import DualityReport, duality_probe, level_grid
from hicksdual.equilibrium.tu import (
    aggregate_demand,
    complete_pseudo_equilibrium,
    is_pseudo_equilibrium,
    solve_tu_ce,
    supporting_prices,
    welfare_max_allocations,
)

__all__ = [
    "AllocationsExhausted",
    "CEOutcome",
    "Counterexample",
    "DualityReport",
    "Found",
    "IncomeSearchState",
    "NetExpenditureBox",
    "NotFound",
    "SearchExhausted",
    "aggregate_demand",
    "complete_pseudo_equilibrium",
    "counterexample_substitutes",
    "counterexample_unimodular",
    "decide_marshallian_ce",
    "duality_probe",
    "initial_search_state",
    "is_pareto_efficient",
    "is_pseudo_equilibrium",
    "level_grid",
    "net_expenditure_box",
    "pareto_profile_at",
    "solve_income_ce",
    "solve_tu_ce",
    "support_pareto",
    "supporting_prices",
    "verify_ce",
    "welfare_max_allocations",
]
