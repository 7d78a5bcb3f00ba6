from hicksdual.data.generators import (
    random_endowment,
    random_housing_economy,
    random_quasilinear_economy,
    random_quasilog_agent,
    random_quasilog_economy,
    random_unit_bounded_valuation,
)

__all__ = [
    "random_endowment",
    "random_housing_economy",
    "random_quasilinear_economy",
    "random_quasilog_agent",
    "random_quasilog_economy",
    "random_unit_bounded_valuation",
]
