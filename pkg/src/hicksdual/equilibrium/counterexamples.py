# Description: Two-agent TU economies without equilibrium, built from structural failures.
"""Counterexample constructors.

Notes:
- Both constructions produce a price at which the total endowment lies in the convex hull
  of aggregate demand but not in aggregate demand itself; with concave valuations that is
  enough to rule out any equilibrium, and the returned outcome is the exact Farkas proof.
- Agents are quasilinear with zero money, so the economies double as Marshallian ones.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Sequence

from hicksdual.core.errors import IsActuallySubstitutes, SubsetUnimodular
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    EndowmentAllocation,
    Quasilinear,
    Valuation,
)
from hicksdual.core.numbers import Bundle, PriceVector, sub, zeros
from hicksdual.equilibrium.outcomes import CEOutcome, NotFound
from hicksdual.equilibrium.tu import is_pseudo_equilibrium, solve_tu_ce
from hicksdual.hicksian.economy import tu_economy_from
from hicksdual.structure.demand_types import linear_on_domain
from hicksdual.structure.substitutes import check_unit_bounded, substitutes_violation
from hicksdual.structure.unimodular import annihilating_price, minor_gcd, parallelepiped_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Counterexample:
    """Economy, endowments, the pseudo-equilibrium price used by the construction, and the
    (NotFound) outcome of the TU solver."""

    economy: Economy
    endowment: EndowmentAllocation
    price: PriceVector
    outcome: CEOutcome


def _goods(n: int) -> tuple[str, ...]:
    return tuple(f"g{i + 1}" for i in range(n))


def _finish(
    agents: Sequence[Agent], total: Bundle, endowments: Sequence[Bundle], price: PriceVector
) -> Counterexample:
    economy = Economy(_goods(len(total)), tuple(agents), total)
    endow = EndowmentAllocation(tuple(ConsumptionBundle(0, w) for w in endowments))
    h = tu_economy_from(economy)
    if not is_pseudo_equilibrium(h, price):
        raise AssertionError(f"construction price {price} is not a pseudo-equilibrium price")
    outcome = solve_tu_ce(h)
    if not isinstance(outcome, NotFound):
        raise AssertionError(f"constructed economy has an equilibrium at {outcome.price}")
    return Counterexample(economy, endow, price, outcome)


def counterexample_substitutes(vj: Valuation) -> Counterexample:
    """Pair a unit-demand non-substitutes valuation with a substitutes one so that no
    equilibrium exists.

    Notes:
    - At the violating price agent ``j`` demands ``{x', x' + g}`` where ``g`` drops two goods
      ``i1, i2`` that ``x'`` holds.
    - Agent ``k`` takes bundles in ``{0,1}^n`` holding at most one of ``i1, i2`` with the
      linear valuation ``(p + e^i1 + e^i2).x``, so at ``p`` it demands exactly one of them;
      every good is endowed once.
    """
    check_unit_bounded(vj)
    region = substitutes_violation(vj)
    if region is None:
        raise IsActuallySubstitutes("the valuation satisfies the substitutes condition")
    g = region.edge
    if sum(1 for q in g if q < 0) >= 2:
        base = region.lower
    else:
        base = region.upper
        g = sub(region.lower, region.upper)
    i1, i2 = [i for i, q in enumerate(g) if q < 0][:2]
    n = vj.dimension
    p = region.price
    t = tuple(q + (1 if i in (i1, i2) else 0) for i, q in enumerate(p))
    Xk = [x for x in itertools.product((0, 1), repeat=n) if x[i1] + x[i2] <= 1]
    vk = linear_on_domain(Xk, t)
    total = tuple([1] * n)
    agents = (Agent("j", Quasilinear(vj)), Agent("k", Quasilinear(vk)))
    logger.info("substitutes counterexample from edge %s at %s", g, p)
    return _finish(agents, total, (base, sub(total, base)), p)


def counterexample_unimodular(subset: Sequence[Bundle], z: Bundle) -> Counterexample:
    """Two concave agents whose demand vectors come from ``subset`` and no equilibrium.

    Notes:
    - ``j`` is zero on the integer points of the parallelepiped spanned by ``subset``.
    - ``k`` chooses between ``0`` and the last vector ``d``, valued at ``s.d`` where ``s``
      annihilates the other vectors; ``z`` is the total endowment, held by ``j``.
    """
    subset = [tuple(int(q) for q in d) for d in subset]
    z = tuple(int(q) for q in z)
    if minor_gcd(subset) == 1:
        raise SubsetUnimodular("the subset is unimodular; no interior lattice point exists")
    if minor_gcd(subset) == 0:
        raise ValueError("the vectors must be linearly independent")
    Xj = parallelepiped_points(subset)
    if z not in Xj:
        raise ValueError(f"{z} is not a lattice point of the parallelepiped")
    n = len(z)
    s = annihilating_price(subset)
    d = subset[-1]
    vj = linear_on_domain(Xj, zeros(n))
    vk = linear_on_domain([zeros(n), d], s)
    agents = (Agent("j", Quasilinear(vj)), Agent("k", Quasilinear(vk)))
    logger.info("unimodularity counterexample from %s with z=%s", subset, z)
    return _finish(agents, z, (z, zeros(n)), s)
