# Description: Valuations, utility models with money, agents and economies.
"""Preference and economy model.

Notes:
- A utility level is a single Fraction whose meaning depends on the agent's model:
  the utility ``u`` itself for quasilinear agents, ``w = e^u`` for quasilogarithmic agents,
  and a (possibly fractional) grid index for tabulated Hicksian families.
- ``utility_key`` returns exactly that level, so comparing keys compares utilities and
  ``compensation(agent, c.goods, utility_key(agent, c)) == c.money`` holds exactly.
- Everything here is immutable; economies can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterator, Mapping, Union

from hicksdual.core.allocations import (
    DEFAULT_MAX_ALLOCATIONS,
    Allocation,
    enumerate_allocations,
    first_allocation,
)
from hicksdual.core.errors import (
    DimensionMismatch,
    EmptyFeasibleSet,
    InfeasibleBundle,
    InfeasibleConsumption,
    InvalidValuation,
    LevelOutOfRange,
    MismatchedDomains,
    NoEndowmentAllocation,
    NotStrictlyDecreasing,
)
from hicksdual.core.numbers import Bundle, RationalLike, as_bundle, as_rational


@dataclass(frozen=True, eq=False)
class Valuation:
    """Finite map from integer bundles to exact values.

    The feasible set is exactly the key set. Keys are stored sorted so iteration order is
    deterministic everywhere downstream.
    """

    values: Mapping[Bundle, Fraction]

    def __post_init__(self) -> None:
        raw = dict(self.values)
        if not raw:
            raise EmptyFeasibleSet("a valuation needs a nonempty feasible set")
        normalized: dict[Bundle, Fraction] = {}
        dimension: int | None = None
        for key, value in raw.items():
            x = as_bundle(key)
            if dimension is None:
                dimension = len(x)
            elif len(x) != dimension:
                raise InvalidValuation(
                    f"bundle {x} has {len(x)} goods, expected {dimension}"
                )
            if x in normalized:
                raise InvalidValuation(f"bundle {x} listed twice")
            normalized[x] = as_rational(value)
        object.__setattr__(self, "values", MappingProxyType(dict(sorted(normalized.items()))))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Valuation):
            return NotImplemented
        return dict(self.values) == dict(other.values)

    def __hash__(self) -> int:
        return hash(tuple(self.values.items()))

    def __call__(self, x: Bundle) -> Fraction:
        try:
            return self.values[tuple(x)]
        except KeyError:
            raise InfeasibleBundle(f"bundle {tuple(x)} is not feasible") from None

    def __contains__(self, x: object) -> bool:
        return isinstance(x, tuple) and x in self.values

    def __iter__(self) -> Iterator[Bundle]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def feasible_set(self) -> tuple[Bundle, ...]:
        return tuple(self.values)

    @property
    def dimension(self) -> int:
        return len(next(iter(self.values)))

    def map(self, fn: Callable[[Bundle, Fraction], Fraction]) -> Valuation:
        return Valuation({x: fn(x, v) for x, v in self.values.items()})

    def scaled(self, factor: RationalLike) -> Valuation:
        f = as_rational(factor)
        return self.map(lambda _x, v: f * v)

    def shifted(self, delta: RationalLike) -> Valuation:
        d = as_rational(delta)
        return self.map(lambda _x, v: v + d)


@dataclass(frozen=True)
class Quasilinear:
    valuation: Valuation

    @property
    def money_floor(self) -> Fraction | None:
        return None

    @property
    def feasible_set(self) -> tuple[Bundle, ...]:
        return self.valuation.feasible_set


@dataclass(frozen=True)
class Quasilog:
    """``U(m, x) = log m - log(-v(x))`` with a strictly negative quasivaluation ``v``."""

    quasivaluation: Valuation

    def __post_init__(self) -> None:
        bad = [x for x, v in self.quasivaluation.values.items() if v >= 0]
        if bad:
            raise InvalidValuation(
                f"quasivaluation must be strictly negative; nonnegative at {bad[0]}"
            )

    @property
    def money_floor(self) -> Fraction | None:
        return Fraction(0)

    @property
    def feasible_set(self) -> tuple[Bundle, ...]:
        return self.quasivaluation.feasible_set


@dataclass(frozen=True)
class TabulatedFamily:
    """Hicksian valuations tabulated on a strictly increasing grid of utility levels.

    Levels of a tabulated agent are grid indices; index ``i`` stands for ``levels[i]``.
    Between grid points compensations are interpolated linearly in the index; beyond the
    grid they continue along the end segment (slope 1 for a one-level grid).
    """

    levels: tuple[Fraction, ...]
    valuations: tuple[Valuation, ...]
    money_floor: Fraction | None = None

    def __post_init__(self) -> None:
        levels = tuple(as_rational(u) for u in self.levels)
        valuations = tuple(self.valuations)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "valuations", valuations)
        if self.money_floor is not None:
            object.__setattr__(self, "money_floor", as_rational(self.money_floor))
        if not levels:
            raise InvalidValuation("a tabulated family needs at least one level")
        if len(levels) != len(valuations):
            raise InvalidValuation(
                f"{len(levels)} levels but {len(valuations)} valuations"
            )
        if any(b <= a for a, b in zip(levels, levels[1:])):
            raise InvalidValuation("levels must be strictly increasing")
        domain = valuations[0].feasible_set
        for i, v in enumerate(valuations[1:], start=1):
            if v.feasible_set != domain:
                raise MismatchedDomains(
                    f"valuation at level index {i} has a different feasible set"
                )
        for i, (lo, hi) in enumerate(zip(valuations, valuations[1:])):
            for x in domain:
                if hi(x) >= lo(x):
                    raise NotStrictlyDecreasing(
                        f"valuation does not strictly decrease from level index {i} "
                        f"to {i + 1} at bundle {x}"
                    )
        if self.money_floor is not None:
            for i, v in enumerate(valuations):
                for x in domain:
                    if -v(x) <= self.money_floor:
                        raise InvalidValuation(
                            f"compensation {-v(x)} at level index {i}, bundle {x} "
                            f"is not above the money floor {self.money_floor}"
                        )

    @property
    def feasible_set(self) -> tuple[Bundle, ...]:
        return self.valuations[0].feasible_set

    @property
    def top_index(self) -> int:
        return len(self.levels) - 1

    def grid_compensation(self, x: Bundle, i: int) -> Fraction:
        return -self.valuations[i](x)


UtilityModel = Union[Quasilinear, Quasilog, TabulatedFamily]
UtilityLevel = Fraction


@dataclass(frozen=True)
class Agent:
    name: str
    utility: UtilityModel

    @property
    def feasible_set(self) -> tuple[Bundle, ...]:
        return self.utility.feasible_set

    @property
    def dimension(self) -> int:
        return len(self.feasible_set[0])


@dataclass(frozen=True)
class ConsumptionBundle:
    money: Fraction
    goods: Bundle

    def __post_init__(self) -> None:
        object.__setattr__(self, "money", as_rational(self.money))
        object.__setattr__(self, "goods", as_bundle(self.goods))


@dataclass(frozen=True)
class Economy:
    goods: tuple[str, ...]
    agents: tuple[Agent, ...]
    total_endowment: Bundle

    def __post_init__(self) -> None:
        object.__setattr__(self, "goods", tuple(self.goods))
        object.__setattr__(self, "agents", tuple(self.agents))
        object.__setattr__(self, "total_endowment", as_bundle(self.total_endowment))

    @property
    def n_goods(self) -> int:
        return len(self.goods)

    @property
    def feasible_sets(self) -> list[tuple[Bundle, ...]]:
        return [a.feasible_set for a in self.agents]

    def agent_index(self, name: str) -> int:
        for j, a in enumerate(self.agents):
            if a.name == name:
                return j
        raise KeyError(f"Unknown agent: {name}")


@dataclass(frozen=True)
class EndowmentAllocation:
    endowments: tuple[ConsumptionBundle, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "endowments", tuple(self.endowments))

    @property
    def goods(self) -> tuple[Bundle, ...]:
        return tuple(c.goods for c in self.endowments)

    @property
    def money(self) -> tuple[Fraction, ...]:
        return tuple(c.money for c in self.endowments)

    def __len__(self) -> int:
        return len(self.endowments)

    def __getitem__(self, j: int) -> ConsumptionBundle:
        return self.endowments[j]


def money_floor(agent: Agent) -> Fraction | None:
    """The agent's money floor; ``None`` stands for minus infinity."""
    return agent.utility.money_floor


def check_consumption(agent: Agent, c: ConsumptionBundle) -> None:
    if c.goods not in agent.feasible_set:
        raise InfeasibleBundle(f"{agent.name}: bundle {c.goods} is not feasible")
    floor = money_floor(agent)
    if floor is not None and c.money <= floor:
        raise InfeasibleConsumption(
            f"{agent.name}: money {c.money} is not above the floor {floor}"
        )


def _tabulated_key(model: TabulatedFamily, x: Bundle, money: Fraction) -> Fraction:
    s = [model.grid_compensation(x, i) for i in range(len(model.levels))]
    if len(s) == 1:
        return money - s[0]
    if money <= s[0]:
        return (money - s[0]) / (s[1] - s[0])
    if money >= s[-1]:
        return model.top_index + (money - s[-1]) / (s[-1] - s[-2])
    for k in range(len(s) - 1):
        if s[k] <= money <= s[k + 1]:
            return k + (money - s[k]) / (s[k + 1] - s[k])
    raise AssertionError("unreachable: compensations are strictly increasing")


def utility_key(agent: Agent, c: ConsumptionBundle) -> Fraction:
    """Exact ordering key of ``U(c)``; equal to the utility level reached by ``c``."""
    check_consumption(agent, c)
    model = agent.utility
    if isinstance(model, Quasilinear):
        return c.money + model.valuation(c.goods)
    if isinstance(model, Quasilog):
        return c.money / -model.quasivaluation(c.goods)
    return _tabulated_key(model, c.goods, c.money)


def level_of(agent: Agent, c: ConsumptionBundle) -> UtilityLevel:
    return utility_key(agent, c)


def check_level(agent: Agent, u: UtilityLevel) -> Fraction:
    level = as_rational(u)
    model = agent.utility
    if isinstance(model, Quasilog) and level <= 0:
        raise LevelOutOfRange(f"{agent.name}: quasilog level w={level} must be positive")
    return level


def compensation(agent: Agent, x: Bundle, u: UtilityLevel) -> Fraction:
    """Money ``s`` with ``U(s, x) = u``; the Hicksian valuation is ``-s``.

    A tabulated compensation at or below the money floor means ``x`` cannot be held at ``u``.
    """
    level = check_level(agent, u)
    model = agent.utility
    x = tuple(x)
    if isinstance(model, Quasilinear):
        return level - model.valuation(x)
    if isinstance(model, Quasilog):
        return level * -model.quasivaluation(x)
    if model.top_index == 0:
        return model.grid_compensation(x, 0) + level
    k = min(max(math.floor(level), 0), model.top_index - 1)
    lo = model.grid_compensation(x, k)
    hi = model.grid_compensation(x, k + 1)
    return lo + (level - k) * (hi - lo)


def validate_economy(e: Economy) -> None:
    """Raise unless the economy is well formed and admits an endowment allocation."""
    n = e.n_goods
    if len(e.total_endowment) != n:
        raise DimensionMismatch(
            f"total endowment has {len(e.total_endowment)} goods, expected {n}"
        )
    if not e.agents:
        raise NoEndowmentAllocation("an economy needs at least one agent")
    names = [a.name for a in e.agents]
    if len(set(names)) != len(names):
        raise InvalidValuation(f"agent names must be unique: {names}")
    for a in e.agents:
        if not a.feasible_set:
            raise EmptyFeasibleSet(f"{a.name}: empty feasible set")
        if a.dimension != n:
            raise DimensionMismatch(
                f"{a.name}: bundles have {a.dimension} goods, expected {n}"
            )
    if first_allocation(e.feasible_sets, e.total_endowment) is None:
        raise NoEndowmentAllocation(
            f"total endowment {e.total_endowment} is not a sum of feasible bundles"
        )


def validate_endowment(e: Economy, endow: EndowmentAllocation) -> None:
    if len(endow) != len(e.agents):
        raise DimensionMismatch(
            f"{len(endow)} endowments for {len(e.agents)} agents"
        )
    total = [0] * e.n_goods
    for agent, c in zip(e.agents, endow.endowments):
        if len(c.goods) != e.n_goods:
            raise DimensionMismatch(f"{agent.name}: endowment has wrong dimension")
        check_consumption(agent, c)
        total = [t + q for t, q in zip(total, c.goods)]
    if tuple(total) != e.total_endowment:
        raise NoEndowmentAllocation(
            f"endowments sum to {tuple(total)}, not {e.total_endowment}"
        )


def endowment_allocations(
    e: Economy, max_allocations: int = DEFAULT_MAX_ALLOCATIONS
) -> Iterator[Allocation]:
    """Goods allocations of ``e`` summing to its total endowment, lexicographically."""
    return enumerate_allocations(e.feasible_sets, e.total_endowment, max_allocations)
