# Description: Hicksian valuations and tabulated families of them.
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from hicksdual.core.models import (
    Agent,
    Quasilinear,
    Quasilog,
    TabulatedFamily,
    UtilityLevel,
    UtilityModel,
    Valuation,
    check_level,
    compensation,
)
from hicksdual.core.numbers import RationalLike, as_rational


def hicksian_valuation(agent: Agent, u: UtilityLevel) -> Valuation:
    """``V_H(x, u) = -s(x, u)``: minus the money that reaches level ``u`` with bundle ``x``."""
    level = check_level(agent, u)
    model = agent.utility
    if isinstance(model, Quasilinear):
        return model.valuation.shifted(-level)
    if isinstance(model, Quasilog):
        return model.quasivaluation.scaled(level)
    if level.denominator == 1 and 0 <= level <= model.top_index:
        return model.valuations[int(level)]
    return Valuation({x: -compensation(agent, x, level) for x in model.feasible_set})


def family_from_grid(
    levels: Sequence[RationalLike],
    valuations: Sequence[Valuation],
    money_floor: RationalLike | None = None,
) -> UtilityModel:
    """Utility model whose Hicksian valuation at grid index ``i`` is ``valuations[i]``.

    Only strict pointwise decrease in the level and a shared domain are checked; continuity
    and the limit behaviour of a continuum family cannot be certified on a finite grid.
    """
    floor = None if money_floor is None else as_rational(money_floor)
    return TabulatedFamily(
        levels=tuple(as_rational(u) for u in levels),
        valuations=tuple(valuations),
        money_floor=floor,
    )


def tabulate(agent: Agent, levels: Sequence[RationalLike]) -> TabulatedFamily:
    """Sample an agent's Hicksian valuations on a grid of its own levels."""
    grid = tuple(as_rational(u) for u in levels)
    model = family_from_grid(
        grid,
        [hicksian_valuation(agent, u) for u in grid],
        agent.utility.money_floor,
    )
    assert isinstance(model, TabulatedFamily)
    return model


def level_shift(agent: Agent, u: UtilityLevel, u2: UtilityLevel) -> dict[tuple[int, ...], Fraction]:
    """Per-bundle difference ``V_H(x, u) - V_H(x, u2)``; constant iff no income effects."""
    a = hicksian_valuation(agent, u)
    b = hicksian_valuation(agent, u2)
    return {x: a(x) - b(x) for x in a.feasible_set}


def structural_valuations(
    agent: Agent, level_probe: Iterable[UtilityLevel] = ()
) -> list[Valuation]:
    """Hicksian valuations that decide level-independent structural properties.

    One level decides for quasilinear and quasilog agents, whose Hicksian valuations at
    other levels are shifts or positive rescalings of the same valuation. Tabulated families
    are checked at every grid level plus any probed levels.
    """
    model = agent.utility
    if isinstance(model, TabulatedFamily):
        return list(model.valuations) + [hicksian_valuation(agent, u) for u in level_probe]
    return [hicksian_valuation(agent, 1)]
