# Description: Concavity of valuations and quasiconcavity of utility models.
from __future__ import annotations

import itertools
import logging
from typing import Iterable, Iterator, Sequence

from hicksdual.core.models import Agent, UtilityLevel, Valuation
from hicksdual.core.numbers import Bundle
from hicksdual.hicksian.valuations import structural_valuations
from hicksdual.structure.lp import LinearSystem, eq, find_point, le
from hicksdual.structure.regions import demanded_region

logger = logging.getLogger(__name__)


def bounding_box_points(X: Sequence[Bundle]) -> Iterator[Bundle]:
    lows = [min(x[i] for x in X) for i in range(len(X[0]))]
    highs = [max(x[i] for x in X) for i in range(len(X[0]))]
    return itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs)))


def in_convex_hull(z: Bundle, X: Sequence[Bundle]) -> bool:
    """Exact convex-combination test via a feasibility LP on the weights."""
    k = len(X)
    rows = [eq([x[i] for x in X], z[i]) for i in range(len(z))]
    rows.append(eq([1] * k, 1))
    rows += [le([-1 if q == r else 0 for q in range(k)], 0) for r in range(k)]
    return find_point(LinearSystem(k, tuple(rows))) is not None


def is_demanded_somewhere(v: Valuation, x: Bundle) -> bool:
    return find_point(demanded_region(v, x)) is not None


def concavity_violation(v: Valuation) -> Bundle | None:
    """An integer point of conv(X) that is infeasible or never demanded, if any."""
    X = v.feasible_set
    feasible = set(X)
    for z in bounding_box_points(X):
        if z in feasible:
            if not is_demanded_somewhere(v, z):
                return z
        elif in_convex_hull(z, X):
            return z
    return None


def is_concave(v: Valuation) -> bool:
    return concavity_violation(v) is None


def is_quasiconcave(agent: Agent, level_probe: Iterable[UtilityLevel] = ()) -> bool:
    """All Hicksian valuations concave (exact for quasilinear and quasilog agents,
    at grid levels and probed levels for tabulated families)."""
    return all(is_concave(v) for v in structural_valuations(agent, level_probe))
