# Description: Substitutes, net/gross/strong substitutes and unit unpacking.
"""Substitutes checks.

Notes:
- A unit-bounded valuation is a substitutes valuation iff every two-bundle demand region
  has an edge ``y - x`` with at most one positive and at most one negative entry.
- Net substitutability is substitutability of every Hicksian valuation; it is decided
  exactly for quasilinear and quasilog agents and at grid levels for tabulated families.
- Gross substitutability quantifies over a continuum of money endowments and price rises,
  so it is only ever refuted: a grid is sampled and, on top of it, boundary cases are built
  from every two-bundle Hicksian demand region whose edge has two same-signed entries.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from hicksdual.core.errors import InfeasibleBundle, NegativeQuantities, NotUnitBounded
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Quasilinear,
    Quasilog,
    UtilityLevel,
    Valuation,
    money_floor,
)
from hicksdual.core.numbers import Bundle, PriceVector, dot, sub
from hicksdual.demand.oracles import marshallian_demand
from hicksdual.hicksian.valuations import structural_valuations
from hicksdual.structure.lp import LinearSystem, le, solve_lp
from hicksdual.structure.regions import demand_at, pair_price, tie_row

logger = logging.getLogger(__name__)


def edge_is_substitutes(d: Sequence[int]) -> bool:
    return sum(1 for q in d if q > 0) <= 1 and sum(1 for q in d if q < 0) <= 1


def check_unit_bounded(v: Valuation) -> None:
    for x in v.feasible_set:
        if any(q not in (0, 1) for q in x):
            raise NotUnitBounded(f"bundle {x} is not a 0/1 vector")


@dataclass(frozen=True)
class TwoBundleRegion:
    """Price ``price`` demands exactly ``{lower, upper}``; ``slack`` is the margin over the rest."""

    lower: Bundle
    upper: Bundle
    price: PriceVector
    slack: Fraction

    @property
    def edge(self) -> Bundle:
        return sub(self.upper, self.lower)


def two_bundle_regions(v: Valuation) -> list[TwoBundleRegion]:
    regions = []
    for x, y in itertools.combinations(v.feasible_set, 2):
        result = pair_price(v, x, y)
        if not result.strictly_feasible or result.point is None or result.slack is None:
            continue
        if demand_at(v, result.point) != {x, y}:
            raise AssertionError(f"pair witness {result.point} does not demand {{{x}, {y}}}")
        regions.append(TwoBundleRegion(x, y, result.point, result.slack))
    return regions


def substitutes_violation(v: Valuation) -> TwoBundleRegion | None:
    """A two-bundle demand region whose edge breaks the substitutes condition, if any."""
    check_unit_bounded(v)
    for region in two_bundle_regions(v):
        if not edge_is_substitutes(region.edge):
            logger.debug("substitutes violated at %s: edge %s", region.price, region.edge)
            return region
    return None


def is_substitutes(v: Valuation) -> bool:
    return substitutes_violation(v) is None


def is_net_substitutes(agent: Agent, level_probe: Iterable[UtilityLevel] = ()) -> bool:
    return all(is_substitutes(v) for v in structural_valuations(agent, level_probe))


def unit_maxima(v: Valuation) -> tuple[int, ...]:
    for x in v.feasible_set:
        if any(q < 0 for q in x):
            raise NegativeQuantities(f"bundle {x} has a negative quantity")
    return tuple(max(x[i] for x in v.feasible_set) for i in range(v.dimension))


def unit_profile(x: Bundle, maxima: Sequence[int]) -> Bundle:
    """Canonical unpacked image of ``x``: the first ``x_i`` units of each good."""
    out: list[int] = []
    for q, m in zip(x, maxima):
        out += [1] * q + [0] * (m - q)
    return tuple(out)


def unpack_units(v: Valuation) -> Valuation:
    """Treat every unit of every good as a separate good; values are symmetric in copies."""
    maxima = unit_maxima(v)
    values: dict[Bundle, Fraction] = {}
    for x, value in v.values.items():
        per_good = [
            [
                tuple(1 if k in chosen else 0 for k in range(m))
                for chosen in itertools.combinations(range(m), q)
            ]
            for q, m in zip(x, maxima)
        ]
        for parts in itertools.product(*per_good):
            values[tuple(q for part in parts for q in part)] = value
    return Valuation(values)


def is_strong_substitutes(v: Valuation) -> bool:
    return is_substitutes(unpack_units(v))


def is_strong_net_substitutes(agent: Agent, level_probe: Iterable[UtilityLevel] = ()) -> bool:
    return all(is_strong_substitutes(v) for v in structural_valuations(agent, level_probe))


@dataclass(frozen=True)
class GrossCase:
    """Money endowment, base price, the good whose price rises, and by how much."""

    money: Fraction
    price: PriceVector
    good: int
    delta: Fraction

    def raised_price(self) -> PriceVector:
        return tuple(
            q + self.delta if i == self.good else q for i, q in enumerate(self.price)
        )


@dataclass(frozen=True)
class GrossViolation:
    case: GrossCase
    before: Bundle
    after: Bundle


def money_grid(agent: Agent, count: int) -> list[Fraction]:
    """``count`` money endowments above the floor, doubling from 1/2."""
    base = money_floor(agent) or Fraction(0)
    return [base + Fraction(2**k, 2) for k in range(count)]


def price_grid(n: int, step: Fraction, count: int = 3) -> list[PriceVector]:
    return [
        tuple(step * k for k in ks) for ks in itertools.product(range(count), repeat=n)
    ]


def grid_cases(
    n: int,
    money: Iterable[Fraction],
    prices: Iterable[PriceVector],
    deltas: Iterable[Fraction],
) -> Iterator[GrossCase]:
    prices = list(prices)
    deltas = list(deltas)
    for m in money:
        for p in prices:
            for i in range(n):
                for d in deltas:
                    yield GrossCase(m, tuple(p), i, d)


def _level_valuations(agent: Agent) -> list[Valuation]:
    model = agent.utility
    if isinstance(model, Quasilinear):
        return [model.valuation]
    if isinstance(model, Quasilog):
        return [model.quasivaluation]
    return list(model.valuations)


def _richest_price(
    v: Valuation,
    region: TwoBundleRegion,
    hi: Bundle,
    goods_endow: Bundle,
    floor: Fraction | None,
) -> PriceVector | None:
    """Price inside the region (half its slack away from the rest) that leaves the most
    money ``-v(hi) + p.(hi - w)``, capped one unit above the floor.

    When every price in the region leaves more than that, the one leaving the least is used.
    """
    lo = region.upper if hi == region.lower else region.lower
    margin = region.slack / 2
    rows = [tie_row(v, hi, lo)]
    rows += [
        le(sub(hi, z), v(hi) - v(z) - margin)
        for z in v.feasible_set
        if z not in (hi, lo)
    ]
    if floor is None:
        return region.price
    direction = sub(hi, goods_endow)
    capped = rows + [le(direction, v(hi) + floor + 1)]
    result = solve_lp(LinearSystem(v.dimension, tuple(capped)), direction)
    if result.status == "infeasible":
        result = solve_lp(LinearSystem(v.dimension, tuple(rows)), direction, maximize=False)
    return result.point if result.is_optimal else None


def _separating_step(
    agent: Agent,
    endow: ConsumptionBundle,
    price: PriceVector,
    good: int,
    hi: Bundle,
    lo: Bundle,
    start: Fraction,
) -> Fraction:
    mu = start
    for _ in range(32):
        below = tuple(q - mu if i == good else q for i, q in enumerate(price))
        above = tuple(q + mu if i == good else q for i, q in enumerate(price))
        if marshallian_demand(agent, below, endow) == {hi} and marshallian_demand(
            agent, above, endow
        ) == {lo}:
            return mu
        mu /= 2
    return mu


def gross_probe_cases(agent: Agent, goods_endow: Bundle) -> list[GrossCase]:
    """Boundary cases of the demand complex for the gross-substitutes check.

    For a two-bundle Hicksian region ``{hi, lo}`` whose edge drops two goods, the money
    endowment that makes both bundles exactly reach the region's level puts the agent on a
    Marshallian tie; nudging the price of one dropped good across the tie switches demand
    from ``hi`` to ``lo`` and lowers demand for the other dropped good.
    """
    floor = money_floor(agent)
    cases: list[GrossCase] = []
    for v in _level_valuations(agent):
        for region in two_bundle_regions(v):
            d = region.edge
            if sum(1 for q in d if q < 0) >= 2:
                hi, lo = region.lower, region.upper
            elif sum(1 for q in d if q > 0) >= 2:
                hi, lo = region.upper, region.lower
            else:
                continue
            p_hat = _richest_price(v, region, hi, goods_endow, floor)
            if p_hat is None:
                continue
            m0 = -v(hi) + dot(p_hat, sub(hi, goods_endow))
            if floor is not None and m0 <= floor:
                continue
            endow = ConsumptionBundle(m0, goods_endow)
            for i in range(len(hi)):
                if hi[i] <= lo[i]:
                    continue
                mu = _separating_step(agent, endow, p_hat, i, hi, lo, region.slack / 4)
                start = tuple(q - mu if k == i else q for k, q in enumerate(p_hat))
                cases.append(GrossCase(m0, start, i, 2 * mu))
    logger.debug("%d boundary gross-substitutes cases", len(cases))
    return cases


def gross_case_violation(
    agent: Agent, goods_endow: Bundle, case: GrossCase
) -> GrossViolation | None:
    floor = money_floor(agent)
    if floor is not None and case.money <= floor:
        return None
    endow = ConsumptionBundle(case.money, goods_endow)
    before = marshallian_demand(agent, case.price, endow)
    after = marshallian_demand(agent, case.raised_price(), endow)
    if len(before) != 1 or len(after) != 1:
        return None
    (x,) = before
    (y,) = after
    if any(y[k] < x[k] for k in range(len(x)) if k != case.good):
        return GrossViolation(case, x, y)
    return None


def gross_substitutes_violation(
    agent: Agent,
    goods_endow: Bundle,
    money: Iterable[Fraction],
    prices: Iterable[PriceVector],
    deltas: Iterable[Fraction],
    include_boundary: bool = True,
) -> GrossViolation | None:
    goods_endow = tuple(goods_endow)
    if goods_endow not in agent.feasible_set:
        raise InfeasibleBundle(f"{agent.name}: goods endowment {goods_endow} is not feasible")
    cases: Iterable[GrossCase] = grid_cases(agent.dimension, money, prices, deltas)
    if include_boundary:
        cases = itertools.chain(gross_probe_cases(agent, goods_endow), cases)
    for case in cases:
        violation = gross_case_violation(agent, goods_endow, case)
        if violation is not None:
            return violation
    return None


def is_gross_substitutes_at(
    agent: Agent,
    goods_endow: Bundle,
    money: Iterable[Fraction],
    prices: Iterable[PriceVector],
    deltas: Iterable[Fraction],
    include_boundary: bool = True,
) -> bool:
    """No gross-complementarity found on the sample (a refutation-only check)."""
    violation = gross_substitutes_violation(
        agent, goods_endow, money, prices, deltas, include_boundary
    )
    if violation is None:
        logger.info("gross substitutes for %s holds on the sample only", agent.name)
    return violation is None
