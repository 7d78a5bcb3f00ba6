# Description: Demand-type vector sets, uniquely and adjacently demanded bundles.
"""Demand types.

Notes:
- A bundle is uniquely demanded when some price makes it the only maximiser; two uniquely
  demanded bundles are adjacent when some price demands both and no other uniquely
  demanded bundle.
- The minimal demand type collects the primitive directions of adjacent pairs. Every LP
  witness is re-checked by recomputing demand at the witness price.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from hicksdual.core.models import Valuation
from hicksdual.core.numbers import (
    Bundle,
    PriceVector,
    RationalLike,
    as_rational,
    content,
    dot,
    negate,
    primitive,
    sub,
)
from hicksdual.structure.lp import maximize_slack
from hicksdual.structure.regions import demand_at, exposing_price, region_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DemandTypeVectorSet:
    """Primitive integer vectors closed under negation."""

    vectors: frozenset[Bundle]

    def __post_init__(self) -> None:
        vectors = frozenset(tuple(int(q) for q in d) for d in self.vectors)
        object.__setattr__(self, "vectors", vectors)
        dims = {len(d) for d in vectors}
        if len(dims) > 1:
            raise ValueError(f"vectors of different lengths: {sorted(dims)}")
        for d in vectors:
            if content(d) != 1:
                raise ValueError(f"vector {d} is not primitive")
            if negate(d) not in vectors:
                raise ValueError(f"set is not closed under negation: {d}")

    def __iter__(self) -> Iterator[Bundle]:
        return iter(sorted(self.vectors))

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, d: object) -> bool:
        return d in self.vectors

    @property
    def dimension(self) -> int:
        return len(next(iter(self.vectors))) if self.vectors else 0

    def representatives(self) -> list[Bundle]:
        """One vector per +/- pair: the one whose first nonzero entry is positive."""
        reps = []
        for d in sorted(self.vectors, reverse=True):
            first = next(q for q in d if q != 0)
            if first > 0:
                reps.append(d)
        return reps

    def issubset(self, other: DemandTypeVectorSet) -> bool:
        return self.vectors <= other.vectors


def demand_type_vector_set(vectors: Iterable[Sequence[int]]) -> DemandTypeVectorSet:
    """Primitive reduction plus negation closure of arbitrary nonzero integer vectors."""
    closed: set[Bundle] = set()
    for d in vectors:
        g = primitive(d)
        closed.add(g)
        closed.add(negate(g))
    return DemandTypeVectorSet(frozenset(closed))


def strong_substitutes_vectors(n: int) -> DemandTypeVectorSet:
    """All nonzero vectors with at most one +1 and at most one -1 entry."""
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(tuple(e))
        for j in range(n):
            if j != i:
                d = [0] * n
                d[i], d[j] = 1, -1
                out.append(tuple(d))
    return demand_type_vector_set(out)


def uniquely_demanded(v: Valuation) -> frozenset[Bundle]:
    return frozenset(x for x in v.feasible_set if exposing_price(v, x).strictly_feasible)


def adjacency_price(
    v: Valuation, x: Bundle, y: Bundle, unique: frozenset[Bundle]
) -> PriceVector | None:
    """A price demanding ``x`` and ``y`` and no other uniquely demanded bundle."""
    strict = [z for z in unique if z not in (x, y)]
    weak = [z for z in v.feasible_set if z not in unique and z not in (x, y)]
    result = maximize_slack(region_system(v, [x, y], strict_over=strict, weak_over=weak))
    if not result.strictly_feasible or result.point is None:
        return None
    demanded = demand_at(v, result.point)
    if not {x, y} <= demanded or demanded & unique != {x, y}:
        raise AssertionError(f"adjacency witness {result.point} does not expose {x}, {y}")
    return result.point


def adjacent_pairs(v: Valuation) -> list[tuple[Bundle, Bundle, PriceVector]]:
    unique = uniquely_demanded(v)
    pairs = []
    for x, y in itertools.combinations(sorted(unique), 2):
        p = adjacency_price(v, x, y, unique)
        if p is not None:
            pairs.append((x, y, p))
    logger.debug("%d uniquely demanded bundles, %d adjacent pairs", len(unique), len(pairs))
    return pairs


def minimal_demand_type(v: Valuation) -> DemandTypeVectorSet:
    return demand_type_vector_set(sub(y, x) for x, y, _ in adjacent_pairs(v))


def is_of_demand_type(v: Valuation, D: DemandTypeVectorSet) -> bool:
    return minimal_demand_type(v).issubset(D)


def linear_on_domain(X: Iterable[Sequence[int]], t: Sequence[RationalLike]) -> Valuation:
    """``V(x) = t.x`` on ``X``."""
    weights = [as_rational(c) for c in t]
    return Valuation({tuple(x): dot(weights, x) for x in X})
