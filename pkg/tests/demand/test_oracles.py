from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from hicksdual.core.errors import DimensionMismatch
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Quasilinear,
    Quasilog,
    Valuation,
    money_floor,
    utility_key,
)
from hicksdual.data.generators import random_quasilinear_agent, random_quasilog_agent
from hicksdual.core.numbers import parse_price
from hicksdual.demand.oracles import (
    affordable,
    expenditure,
    hicksian_demand,
    indirect_utility,
    marshallian_demand,
    quasilinear_demand,
    satisfies_compensated_law,
    verify_demand_duality,
)
from hicksdual.documents.fixtures import EX44_VK, EX44B_VJ
from hicksdual.hicksian.valuations import tabulate

J = Agent("j", Quasilog(Valuation(EX44B_VJ)))
K = Agent("k", Quasilinear(Valuation(EX44_VK)))
J_ENDOW = ConsumptionBundle(3, (0, 1))


def test_quasilinear_demand_keeps_ties() -> None:
    assert quasilinear_demand(Valuation(EX44_VK), parse_price("3,2")) == {(1, 0), (0, 1)}
    assert quasilinear_demand(Valuation(EX44_VK), parse_price("5,5")) == {(0, 0)}


def test_marshallian_demand_with_income_effects() -> None:
    assert marshallian_demand(J, parse_price("2,2"), J_ENDOW) == {(1, 1)}
    assert marshallian_demand(J, parse_price("4,2"), J_ENDOW) == {(0, 0)}
    assert marshallian_demand(J, parse_price("3,2"), J_ENDOW) == {(1, 0)}
    assert indirect_utility(J, parse_price("3,2"), J_ENDOW) == Fraction(1, 2)


def test_budget_is_strict_above_the_money_floor() -> None:
    # (1,1) costs exactly the whole wealth 3 + 2 at prices (3, 2)
    assert not affordable(J, parse_price("3,2"), J_ENDOW, (1, 1))
    assert affordable(K, parse_price("9,9"), ConsumptionBundle(0, (0, 0)), (1, 0))


def test_hicksian_demand_at_fixed_level() -> None:
    w = Fraction(5, 11)
    assert hicksian_demand(J, parse_price("2,2"), w) == {(1, 0)}
    assert hicksian_demand(J, parse_price("4,2"), w) == {(0, 0)}
    assert expenditure(J, parse_price("4,2"), w) == 5


def test_demand_duality_holds_at_the_indirect_utility() -> None:
    for text in ("3,2", "2,2", "4,2", "1/2,7"):
        p = parse_price(text)
        assert verify_demand_duality(J, p, J_ENDOW)
        assert verify_demand_duality(K, p, ConsumptionBundle(3, (1, 0)))


def test_compensated_law_of_demand() -> None:
    assert satisfies_compensated_law(J, Fraction(5, 11), parse_price("2,2"), parse_price("4,2"))
    assert satisfies_compensated_law(K, Fraction(0), parse_price("1,1"), parse_price("5,3"))


def test_price_dimension_is_checked() -> None:
    with pytest.raises(DimensionMismatch):
        quasilinear_demand(Valuation(EX44_VK), (Fraction(1),))


def _random_agents(rng: np.random.Generator, k: int) -> list[Agent]:
    j = random_quasilog_agent(rng, f"j{k}", 2)
    grid = [Fraction(1, 2), Fraction(1), Fraction(2)]
    return [random_quasilinear_agent(rng, f"q{k}", 2), j, Agent(f"t{k}", tabulate(j, grid))]


def _random_price(rng: np.random.Generator) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(q), 2) for q in rng.integers(-2, 11, size=2))


def test_compensated_law_on_random_agents() -> None:
    rng = np.random.default_rng(12)
    for k in range(30):
        for agent in _random_agents(rng, k):
            u = Fraction(int(rng.integers(1, 9)), 4)
            p, q = _random_price(rng), _random_price(rng)
            assert satisfies_compensated_law(agent, u, p, q), (agent, u, p, q)


def test_utility_key_strictly_increases_in_money() -> None:
    rng = np.random.default_rng(13)
    for k in range(30):
        for agent in _random_agents(rng, k):
            floor = money_floor(agent) or Fraction(0)
            x = agent.feasible_set[int(rng.integers(len(agent.feasible_set)))]
            picks = rng.choice(40, size=2, replace=False) + 1
            m1, m2 = sorted(Fraction(int(q), 3) for q in picks)
            low = utility_key(agent, ConsumptionBundle(floor + m1, x))
            high = utility_key(agent, ConsumptionBundle(floor + m2, x))
            assert low < high, (agent, x, m1, m2)


def test_demand_duality_on_random_agents() -> None:
    rng = np.random.default_rng(14)
    for k in range(20):
        for agent in _random_agents(rng, k):
            floor = money_floor(agent) or Fraction(0)
            x = agent.feasible_set[0]
            endow = ConsumptionBundle(floor + Fraction(int(rng.integers(1, 21)), 2), x)
            assert verify_demand_duality(agent, _random_price(rng), endow)
