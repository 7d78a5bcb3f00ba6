# Description: Competitive equilibrium in transferable-utility (and Hicksian) economies.
"""TU equilibrium.

Notes:
- A TU economy has a competitive equilibrium iff every welfare-maximising allocation is
  supported by some price, and the supporting prices are the same set for all of them; so
  one allocation (the lexicographically smallest) decides existence.
- Nonexistence is returned with exact Farkas multipliers over the supporting system.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from hicksdual.core.allocations import DEFAULT_MAX_ALLOCATIONS, Allocation, enumerate_allocations
from hicksdual.core.errors import NoEndowmentAllocation
from hicksdual.core.numbers import PriceVector, add, dot, sub
from hicksdual.demand.oracles import quasilinear_demand
from hicksdual.equilibrium.outcomes import CEOutcome, Found, NotFound
from hicksdual.hicksian.economy import TUEconomy
from hicksdual.structure.concavity import in_convex_hull
from hicksdual.structure.lp import (
    FarkasCertificate,
    LinearSystem,
    farkas_certificate,
    find_point,
    le,
)

logger = logging.getLogger(__name__)


def welfare(h: TUEconomy, alloc: Allocation) -> Fraction:
    return sum((v(x) for v, x in zip(h.valuations, alloc)), Fraction(0))


def welfare_max_allocations(
    h: TUEconomy, max_allocations: int = DEFAULT_MAX_ALLOCATIONS
) -> list[Allocation]:
    """All allocations summing to ``y`` with maximal total value, lexicographically."""
    best: Fraction | None = None
    out: list[Allocation] = []
    for alloc in enumerate_allocations(h.feasible_sets, h.total_endowment, max_allocations):
        w = welfare(h, alloc)
        if best is None or w > best:
            best, out = w, [alloc]
        elif w == best:
            out.append(alloc)
    if not out:
        raise NoEndowmentAllocation(
            f"total endowment {h.total_endowment} is not a sum of feasible bundles"
        )
    return out


def supporting_system(h: TUEconomy, alloc: Allocation) -> LinearSystem:
    """Prices at which every agent demands its part of ``alloc``."""
    rows = []
    for name, v, x in zip(h.names, h.valuations, alloc):
        for y in v.feasible_set:
            if y != x:
                rows.append(le(sub(x, y), v(x) - v(y), f"{name}: {x} over {y}"))
    return LinearSystem(h.n_goods, tuple(rows))


@dataclass(frozen=True)
class SupportResult:
    system: LinearSystem
    price: PriceVector


def supporting_prices(h: TUEconomy, alloc: Allocation) -> SupportResult | FarkasCertificate:
    system = supporting_system(h, alloc)
    point = find_point(system)
    if point is not None:
        for v, x in zip(h.valuations, alloc):
            if x not in quasilinear_demand(v, point):
                raise AssertionError(f"supporting price {point} does not support {x}")
        return SupportResult(system, point)
    cert = farkas_certificate(system)
    if cert is None:
        raise AssertionError("supporting system is neither feasible nor refuted")
    return cert


def solve_tu_ce(h: TUEconomy, max_allocations: int = DEFAULT_MAX_ALLOCATIONS) -> CEOutcome:
    alloc = welfare_max_allocations(h, max_allocations)[0]
    result = supporting_prices(h, alloc)
    if isinstance(result, FarkasCertificate):
        logger.info("no TU equilibrium: allocation %s is unsupported", alloc)
        return NotFound(result, alloc)
    p = result.price
    logger.info("TU equilibrium at %s", p)
    return Found(p, alloc, tuple(-dot(p, x) for x in alloc))


def aggregate_demand(h: TUEconomy, p: PriceVector) -> set[tuple[int, ...]]:
    demands = [sorted(quasilinear_demand(v, p)) for v in h.valuations]
    sums = set()
    for choice in itertools.product(*demands):
        total = tuple([0] * h.n_goods)
        for x in choice:
            total = add(total, x)
        sums.add(total)
    return sums


def is_pseudo_equilibrium(h: TUEconomy, p: PriceVector) -> bool:
    """``y`` lies in the convex hull of aggregate demand at ``p``."""
    return in_convex_hull(h.total_endowment, sorted(aggregate_demand(h, p)))


def complete_pseudo_equilibrium(h: TUEconomy, p: PriceVector) -> Allocation | None:
    """An allocation of demanded bundles summing to ``y``, if ``p`` is an equilibrium price."""
    demands = [sorted(quasilinear_demand(v, p)) for v in h.valuations]
    for alloc in enumerate_allocations(demands, h.total_endowment):
        return alloc
    return None
