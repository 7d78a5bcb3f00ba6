# Description: Seeded random agents, economies and endowment allocations for probes and tests.
"""Random instances.

Notes:
- Every generator takes a ``numpy.random.Generator`` so callers control reproducibility
  (``np.random.default_rng(seed)``); values are small integers turned into Fractions.
- Feasible sets are subsets of ``{0..max_units}^n``; the total endowment of a generated
  economy is the sum of one feasible bundle per agent, so an endowment allocation exists.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from hicksdual.core.allocations import DEFAULT_MAX_ALLOCATIONS
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    EndowmentAllocation,
    Quasilinear,
    Quasilog,
    Valuation,
    endowment_allocations,
    money_floor,
)
from hicksdual.core.numbers import Bundle, add, unit_vector, zeros


def _pick(rng: np.random.Generator, pool: list[Bundle], size: int) -> list[Bundle]:
    size = max(1, min(size, len(pool)))
    idx = rng.choice(len(pool), size=size, replace=False)
    return sorted(pool[int(i)] for i in idx)


def random_feasible_set(
    rng: np.random.Generator, n_goods: int, max_units: int = 1, max_bundles: int = 4
) -> list[Bundle]:
    pool = list(itertools.product(range(max_units + 1), repeat=n_goods))
    return _pick(rng, pool, int(rng.integers(1, max_bundles + 1)))


def random_valuation(
    rng: np.random.Generator,
    bundles: list[Bundle],
    low: int = 0,
    high: int = 10,
) -> Valuation:
    return Valuation({x: Fraction(int(rng.integers(low, high + 1))) for x in bundles})


def random_quasilinear_agent(
    rng: np.random.Generator, name: str, n_goods: int, max_units: int = 1, max_bundles: int = 4
) -> Agent:
    X = random_feasible_set(rng, n_goods, max_units, max_bundles)
    return Agent(name, Quasilinear(random_valuation(rng, X)))


def random_quasilog_agent(
    rng: np.random.Generator, name: str, n_goods: int, max_units: int = 1, max_bundles: int = 4
) -> Agent:
    """Quasivaluation values in ``[-12, -1]`` with denominators up to 2."""
    X = random_feasible_set(rng, n_goods, max_units, max_bundles)
    values = {x: -Fraction(int(rng.integers(2, 25)), 2) for x in X}
    return Agent(name, Quasilog(Valuation(values)))


def unit_demand_bundles(n_goods: int) -> list[Bundle]:
    """``{0} U {e^i}``: at most one good."""
    return [zeros(n_goods)] + [unit_vector(n_goods, i) for i in range(n_goods)]


def random_housing_agent(
    rng: np.random.Generator, name: str, n_goods: int, quasilog: bool = True
) -> Agent:
    pool = unit_demand_bundles(n_goods)
    X = _pick(rng, pool, int(rng.integers(1, len(pool) + 1)))
    if quasilog:
        v = Valuation({x: -Fraction(int(rng.integers(1, 13))) for x in X})
        return Agent(name, Quasilog(v))
    return Agent(name, Quasilinear(random_valuation(rng, X)))


def random_unit_bounded_valuation(
    rng: np.random.Generator, n_goods: int, max_bundles: int | None = None
) -> Valuation:
    """Random values on a random subset of ``{0,1}^n``."""
    pool = list(itertools.product((0, 1), repeat=n_goods))
    size = len(pool) if max_bundles is None else max_bundles
    X = _pick(rng, pool, int(rng.integers(2, max(2, size) + 1)))
    return random_valuation(rng, X)


def _economy(rng: np.random.Generator, agents: list[Agent]) -> Economy:
    n = agents[0].dimension
    total = zeros(n)
    for a in agents:
        X = a.feasible_set
        total = add(total, X[int(rng.integers(len(X)))])
    return Economy(tuple(f"g{i + 1}" for i in range(n)), tuple(agents), total)


def random_quasilog_economy(
    rng: np.random.Generator,
    max_agents: int = 3,
    n_goods: int = 2,
    max_bundles: int = 4,
) -> Economy:
    J = int(rng.integers(1, max_agents + 1))
    agents = [
        random_quasilog_agent(rng, f"a{j + 1}", n_goods, max_bundles=max_bundles)
        for j in range(J)
    ]
    return _economy(rng, agents)


def random_quasilinear_economy(
    rng: np.random.Generator,
    max_agents: int = 3,
    n_goods: int = 2,
    max_units: int = 1,
    max_bundles: int = 4,
) -> Economy:
    J = int(rng.integers(1, max_agents + 1))
    agents = [
        random_quasilinear_agent(rng, f"a{j + 1}", n_goods, max_units, max_bundles)
        for j in range(J)
    ]
    return _economy(rng, agents)


def random_housing_economy(
    rng: np.random.Generator, max_agents: int = 3, n_houses: int = 3, quasilog: bool = True
) -> Economy:
    J = int(rng.integers(1, max_agents + 1))
    agents = [random_housing_agent(rng, f"a{j + 1}", n_houses, quasilog) for j in range(J)]
    return _economy(rng, agents)


def random_endowment(
    rng: np.random.Generator,
    e: Economy,
    max_money: int = 10,
    max_allocations: int = DEFAULT_MAX_ALLOCATIONS,
) -> EndowmentAllocation:
    """A uniformly chosen goods allocation of ``y`` and money strictly above each floor."""
    allocations = list(endowment_allocations(e, max_allocations))
    goods = allocations[int(rng.integers(len(allocations)))]
    endowments = []
    for agent, w in zip(e.agents, goods):
        floor = money_floor(agent) or Fraction(0)
        money = floor + Fraction(int(rng.integers(1, 2 * max_money + 1)), 2)
        endowments.append(ConsumptionBundle(money, w))
    return EndowmentAllocation(tuple(endowments))
