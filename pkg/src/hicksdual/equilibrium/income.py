# Description: Equilibrium with income effects: verification, search and exact decision.
"""Income-effect equilibrium.

Notes:
- ``x^j`` is Marshallian-demanded at ``p`` iff, at the level ``u^j`` it reaches, it is
  Hicksian-demanded and exhausts the budget: ``s^j(x^j, u^j) + p.(x^j - w^j) = m^j``.
  Compensations are affine in the level (per grid segment for tabulated families), so for a
  fixed goods allocation these conditions form one linear program in prices and levels.
- ``solve_income_ce`` adjusts levels inside ``[u_min, u_max]`` using the sign of each
  agent's net expenditure over the Hicksian supporting prices, trying the joint program
  restricted to the current brackets at every step. When the brackets stall it falls back to
  the exact decision over all goods allocations (unless disabled in the config).
- Every Found outcome has passed ``verify_ce``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from hicksdual.core.allocations import DEFAULT_MAX_ALLOCATIONS, Allocation
from hicksdual.core.config import IncomeSearchConfig
from hicksdual.core.errors import DimensionMismatch, EnumerationLimitExceeded
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    EndowmentAllocation,
    Quasilinear,
    Quasilog,
    TabulatedFamily,
    UtilityLevel,
    compensation,
    endowment_allocations,
    level_of,
    money_floor,
    validate_economy,
    validate_endowment,
)
from hicksdual.core.numbers import Bundle, PriceVector, sub, zeros
from hicksdual.demand.oracles import budget_money, marshallian_demand
from hicksdual.equilibrium.outcomes import (
    AllocationsExhausted,
    CEOutcome,
    Found,
    NotFound,
    SearchExhausted,
)
from hicksdual.equilibrium.tu import supporting_system, welfare_max_allocations
from hicksdual.hicksian.economy import build_hicksian_economy
from hicksdual.structure.lp import Constraint, LinearSystem, eq, find_point, le, lt, solve_lp

logger = logging.getLogger(__name__)


def verify_ce(
    e: Economy, endow: EndowmentAllocation, p: PriceVector, alloc: Allocation
) -> bool:
    """Markets clear and every agent's bundle is in its Marshallian demand."""
    if len(p) != e.n_goods:
        raise DimensionMismatch(f"price vector has {len(p)} entries, expected {e.n_goods}")
    if len(alloc) != len(e.agents) or len(endow) != len(e.agents):
        raise DimensionMismatch(f"expected one bundle and endowment per agent ({len(e.agents)})")
    total = zeros(e.n_goods)
    for x in alloc:
        if len(x) != e.n_goods:
            raise DimensionMismatch(f"bundle {x} has {len(x)} goods, expected {e.n_goods}")
        total = tuple(a + b for a, b in zip(total, x))
    if total != e.total_endowment:
        return False
    return all(
        tuple(x) in marshallian_demand(agent, p, c)
        for agent, c, x in zip(e.agents, endow.endowments, alloc)
    )


@dataclass(frozen=True)
class LevelSegment:
    """``s(x, t) = slope[x] * t + intercept[x]`` for levels ``t`` in ``[lower, upper]``."""

    slope: Mapping[Bundle, Fraction]
    intercept: Mapping[Bundle, Fraction]
    lower: Fraction | None = None
    upper: Fraction | None = None


def level_segments(
    agent: Agent, lower: Fraction | None = None, upper: Fraction | None = None
) -> list[LevelSegment]:
    """Pieces on which the agent's compensation is affine in the level, cut to a bracket."""
    model = agent.utility
    X = agent.feasible_set
    if isinstance(model, Quasilinear):
        return [
            LevelSegment(
                {x: Fraction(1) for x in X}, {x: -model.valuation(x) for x in X}, lower, upper
            )
        ]
    if isinstance(model, Quasilog):
        return [
            LevelSegment(
                {x: -model.quasivaluation(x) for x in X}, {x: Fraction(0) for x in X}, lower, upper
            )
        ]
    assert isinstance(model, TabulatedFamily)
    top = model.top_index
    if top == 0:
        one = {x: Fraction(1) for x in X}
        pieces = [(one, {x: model.grid_compensation(x, 0) for x in X}, None, None)]
    else:
        pieces = []
        for k in range(-1, top + 1):
            g = min(max(k, 0), top - 1)
            slope = {
                x: model.grid_compensation(x, g + 1) - model.grid_compensation(x, g) for x in X
            }
            intercept = {x: model.grid_compensation(x, g) - g * slope[x] for x in X}
            lo = None if k < 0 else Fraction(k)
            hi = None if k >= top else Fraction(max(k + 1, 0))
            pieces.append((slope, intercept, lo, hi))
    out = []
    for slope, intercept, lo, hi in pieces:
        for seg in _floor_split(slope, intercept, lo, hi, model.money_floor):
            a = _bound(max, seg.lower, lower)
            b = _bound(min, seg.upper, upper)
            if a is not None and b is not None and a > b:
                continue
            out.append(LevelSegment(seg.slope, seg.intercept, a, b))
    return out


def _bound(
    pick: Callable[[Fraction, Fraction], Fraction], a: Fraction | None, b: Fraction | None
) -> Fraction | None:
    if a is None:
        return b
    if b is None:
        return a
    return pick(a, b)


def _floor_split(
    slope: Mapping[Bundle, Fraction],
    intercept: Mapping[Bundle, Fraction],
    lower: Fraction | None,
    upper: Fraction | None,
    floor: Fraction | None,
) -> list[LevelSegment]:
    """Cut a piece where some compensation crosses the money floor.

    A bundle whose compensation is at or below the floor is reachable above the level with
    any feasible money, so it competes at the floor itself (slope 0, intercept ``floor``).
    The piece where every bundle sits at the floor is dropped.
    """
    if floor is None:
        return [LevelSegment(slope, intercept, lower, upper)]
    # slopes are positive, so each bundle crosses the floor at most once
    crossing = {x: (floor - intercept[x]) / slope[x] for x in slope}
    cuts = sorted(
        {
            t
            for t in crossing.values()
            if (lower is None or t > lower) and (upper is None or t < upper)
        }
    )
    bounds = [lower, *cuts, upper]
    out = []
    for a, b in zip(bounds, bounds[1:]):
        at_floor = {x for x, t in crossing.items() if b is not None and t >= b}
        if len(at_floor) == len(slope):
            continue
        out.append(
            LevelSegment(
                {x: Fraction(0) if x in at_floor else slope[x] for x in slope},
                {x: floor if x in at_floor else intercept[x] for x in slope},
                a,
                b,
            )
        )
    return out


def joint_system(
    e: Economy,
    endow: EndowmentAllocation,
    alloc: Allocation,
    segments: Sequence[LevelSegment],
) -> LinearSystem:
    """Prices ``p`` and levels ``t`` making ``alloc`` a Marshallian equilibrium."""
    n, J = e.n_goods, len(e.agents)

    def coefficients(price_part: Sequence[int], j: int, level_part: Fraction) -> list[Fraction]:
        out = [Fraction(q) for q in price_part] + [Fraction(0)] * J
        out[n + j] = level_part
        return out

    rows: list[Constraint] = []
    for j, (agent, c, x, seg) in enumerate(zip(e.agents, endow.endowments, alloc, segments)):
        rows.append(
            eq(
                coefficients(sub(x, c.goods), j, seg.slope[x]),
                c.money - seg.intercept[x],
                f"{agent.name}: budget",
            )
        )
        for y in agent.feasible_set:
            if y != x:
                rows.append(
                    le(
                        coefficients(sub(x, y), j, seg.slope[x] - seg.slope[y]),
                        seg.intercept[y] - seg.intercept[x],
                        f"{agent.name}: {x} over {y}",
                    )
                )
        floor = money_floor(agent)
        if floor is not None:
            rows.append(
                lt(
                    coefficients(zeros(n), j, -seg.slope[x]),
                    seg.intercept[x] - floor,
                    f"{agent.name}: money above floor",
                )
            )
        if seg.lower is not None:
            rows.append(le(coefficients(zeros(n), j, Fraction(-1)), -seg.lower))
        if seg.upper is not None:
            rows.append(le(coefficients(zeros(n), j, Fraction(1)), seg.upper))
    names = tuple(f"p{i + 1}" for i in range(n)) + tuple(f"u[{a.name}]" for a in e.agents)
    return LinearSystem(n + J, tuple(rows), names)


def _found(e: Economy, endow: EndowmentAllocation, p: PriceVector, alloc: Allocation) -> Found:
    money = tuple(budget_money(p, c, x) for c, x in zip(endow.endowments, alloc))
    return Found(p, alloc, money)


def _joint_candidate(
    e: Economy,
    endow: EndowmentAllocation,
    alloc: Allocation,
    segment_lists: Sequence[Sequence[LevelSegment]],
) -> Found | None:
    for segments in itertools.product(*segment_lists):
        point = find_point(joint_system(e, endow, alloc, segments))
        if point is None:
            continue
        p = point[: e.n_goods]
        if verify_ce(e, endow, p, alloc):
            return _found(e, endow, p, alloc)
        logger.warning("joint program point %s failed verification for %s", p, alloc)
    return None


def decide_marshallian_ce(
    e: Economy,
    endow: EndowmentAllocation,
    max_allocations: int = DEFAULT_MAX_ALLOCATIONS,
) -> CEOutcome:
    """Exact: Found for the first goods allocation that some price supports, else a
    refutation of every allocation."""
    validate_economy(e)
    validate_endowment(e, endow)
    segment_lists = [level_segments(a) for a in e.agents]
    count = 0
    for alloc in endowment_allocations(e, max_allocations):
        count += 1
        found = _joint_candidate(e, endow, alloc, segment_lists)
        if found is not None:
            logger.info("Marshallian equilibrium at %s with %s", found.price, alloc)
            return found
    logger.info("no Marshallian equilibrium: %d allocations refuted", count)
    return NotFound(AllocationsExhausted(count))


@dataclass(frozen=True)
class NetExpenditureBox:
    """Range of each agent's net expenditure over the Hicksian supporting prices;
    ``None`` marks an unbounded end."""

    allocation: Allocation
    bounds: tuple[tuple[Fraction | None, Fraction | None], ...]

    def sign(self, j: int) -> int:
        lo, hi = self.bounds[j]
        if lo is not None and lo > 0:
            return 1
        if hi is not None and hi < 0:
            return -1
        return 0


def net_expenditure_box(
    e: Economy,
    endow: EndowmentAllocation,
    levels: Sequence[UtilityLevel],
    max_allocations: int = DEFAULT_MAX_ALLOCATIONS,
) -> NetExpenditureBox | None:
    """None when the Hicksian economy at ``levels`` has no equilibrium."""
    h = build_hicksian_economy(e, levels)
    alloc = welfare_max_allocations(h, max_allocations)[0]
    system = supporting_system(h, alloc)
    if find_point(system) is None:
        return None
    bounds = []
    for agent, c, x, u in zip(e.agents, endow.endowments, alloc, h.levels):
        base = compensation(agent, x, u) - c.money
        direction = sub(x, c.goods)
        low = solve_lp(system, direction, maximize=False)
        high = solve_lp(system, direction)
        bounds.append(
            (
                base + low.value if low.is_optimal and low.value is not None else None,
                base + high.value if high.is_optimal and high.value is not None else None,
            )
        )
    return NetExpenditureBox(alloc, tuple(bounds))


@dataclass
class IncomeSearchState:
    """Level brackets of the search; ``slack`` holds ``K^j`` and ``total_slack`` is ``K``."""

    lower: list[Fraction]
    upper: list[Fraction]
    levels: list[Fraction]
    slack: tuple[Fraction, ...]
    total_slack: Fraction
    iteration: int = 0
    history: list[NetExpenditureBox] = field(default_factory=list)


def initial_search_state(e: Economy, endow: EndowmentAllocation) -> IncomeSearchState:
    lows = [level_of(a, c) for a, c in zip(e.agents, endow.endowments)]
    slack = tuple(
        max(Fraction(0), c.money - min(compensation(a, x, u) for x in a.feasible_set))
        for a, c, u in zip(e.agents, endow.endowments, lows)
    )
    total = 1 + sum(slack, Fraction(0))
    highs = [
        max(level_of(a, ConsumptionBundle(c.money + total, x)) for x in a.feasible_set)
        for a, c in zip(e.agents, endow.endowments)
    ]
    return IncomeSearchState(list(lows), highs, list(lows), slack, total)


def _next_level(agent: Agent, lo: Fraction, hi: Fraction, rising: bool) -> Fraction:
    if isinstance(agent.utility, Quasilog) and lo > 0 and hi >= 4 * lo:
        return 2 * lo if rising else hi / 2
    return (lo + hi) / 2


def solve_income_ce(
    e: Economy,
    endow: EndowmentAllocation,
    config: IncomeSearchConfig | None = None,
    max_allocations: int = DEFAULT_MAX_ALLOCATIONS,
) -> CEOutcome:
    cfg = config or IncomeSearchConfig()
    validate_economy(e)
    validate_endowment(e, endow)
    state = initial_search_state(e, endow)
    reason = f"no verified equilibrium after {cfg.max_iter} iterations"
    try:
        for it in range(cfg.max_iter):
            state.iteration = it + 1
            h = build_hicksian_economy(e, state.levels)
            alloc = welfare_max_allocations(h, max_allocations)[0]
            segment_lists = [
                level_segments(a, lo, hi) for a, lo, hi in zip(e.agents, state.lower, state.upper)
            ]
            found = _joint_candidate(e, endow, alloc, segment_lists)
            if found is not None:
                logger.info("income equilibrium at %s after %d iterations", found.price, it + 1)
                return found
            box = net_expenditure_box(e, endow, state.levels, max_allocations)
            if box is None:
                reason = f"Hicksian economy at levels {state.levels} has no equilibrium"
                break
            state.history.append(box)
            moved = False
            for j, agent in enumerate(e.agents):
                sign = box.sign(j)
                if sign == 0:
                    continue
                if sign > 0:
                    state.upper[j] = state.levels[j]
                else:
                    state.lower[j] = state.levels[j]
                if state.upper[j] - state.lower[j] <= cfg.epsilon:
                    continue
                new = _next_level(agent, state.lower[j], state.upper[j], rising=sign < 0)
                if new != state.levels[j]:
                    state.levels[j] = new
                    moved = True
            logger.debug("iteration %d: levels %s, box %s", it + 1, state.levels, box.bounds)
            if not moved:
                reason = f"level brackets stalled after {it + 1} iterations"
                break
        if not cfg.exhaustive_fallback:
            logger.warning("income search exhausted: %s", reason)
            return NotFound(SearchExhausted(reason, state.iteration))
        return decide_marshallian_ce(e, endow, max_allocations)
    except EnumerationLimitExceeded as exc:
        logger.warning("income search exhausted: %s", exc)
        return NotFound(SearchExhausted(str(exc), state.iteration))
