# Description: Price systems describing regions of the demand complex of a valuation.
"""Demand-region systems.

``x`` is demanded at ``p`` iff ``p.(x - y) <= V(x) - V(y)`` for every feasible ``y``; the
builders below assemble such rows (weak, strict or tied) into a ``LinearSystem`` over prices.
"""

from __future__ import annotations

from typing import Iterable

from hicksdual.core.models import Valuation
from hicksdual.core.numbers import Bundle, PriceVector, sub
from hicksdual.demand.oracles import DemandSet, quasilinear_demand
from hicksdual.structure.lp import (
    Constraint,
    LinearSystem,
    SlackResult,
    eq,
    le,
    lt,
    maximize_slack,
)


def dominance_row(v: Valuation, x: Bundle, y: Bundle, strict: bool = False) -> Constraint:
    """``x`` at least as good as ``y`` at ``p`` (strictly better if ``strict``)."""
    coefficients = sub(x, y)
    bound = v(x) - v(y)
    label = f"{x} over {y}"
    return lt(coefficients, bound, label) if strict else le(coefficients, bound, label)


def tie_row(v: Valuation, x: Bundle, y: Bundle) -> Constraint:
    return eq(sub(y, x), v(y) - v(x), f"{x} tied with {y}")


def region_system(
    v: Valuation,
    support: Iterable[Bundle],
    strict_over: Iterable[Bundle] = (),
    weak_over: Iterable[Bundle] = (),
) -> LinearSystem:
    """Prices at which every bundle of ``support`` is demanded (tied with each other),
    strictly beating ``strict_over`` and weakly beating ``weak_over``."""
    members = list(support)
    anchor = members[0]
    rows = [tie_row(v, anchor, y) for y in members[1:]]
    rows += [dominance_row(v, anchor, y, strict=True) for y in strict_over]
    rows += [dominance_row(v, anchor, y) for y in weak_over]
    return LinearSystem(v.dimension, tuple(rows))


def demanded_region(v: Valuation, x: Bundle) -> LinearSystem:
    """Closed region where ``x`` is demanded."""
    return region_system(v, [x], weak_over=[y for y in v.feasible_set if y != x])


def exposing_price(v: Valuation, x: Bundle) -> SlackResult:
    """Maximal slack by which ``x`` can beat every other bundle."""
    return maximize_slack(
        region_system(v, [x], strict_over=[y for y in v.feasible_set if y != x])
    )


def pair_price(v: Valuation, x: Bundle, y: Bundle) -> SlackResult:
    """Slack LP for prices with ``D(p) = {x, y}`` exactly."""
    others = [z for z in v.feasible_set if z not in (x, y)]
    return maximize_slack(region_system(v, [x, y], strict_over=others))


def demand_at(v: Valuation, p: PriceVector) -> DemandSet:
    return quasilinear_demand(v, p)
