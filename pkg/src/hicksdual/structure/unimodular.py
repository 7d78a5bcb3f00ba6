# Description: Unimodularity of demand-type vector sets and the lattice-point oracle.
"""Unimodularity.

Notes:
- A linearly independent set of integer vectors extends to a determinant +/-1 integer basis
  iff the gcd of its maximal minors is 1; minors are exact sympy integer determinants.
- Sign flips change neither independence nor minors, so only one representative per
  +/- pair is examined.
- The cross-check oracle looks for an integer point ``sum a_l d_l`` with every ``a_l`` in
  (0, 1); such a point exists for some independent subset iff the set is not unimodular.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np
from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM

from hicksdual.core.numbers import Bundle, primitive, sub
from hicksdual.structure.demand_types import DemandTypeVectorSet, demand_type_vector_set
from hicksdual.structure.lp import LinearSystem, eq, le, solve_lp

logger = logging.getLogger(__name__)


def _rank(vectors: Sequence[Bundle]) -> int:
    return DM([list(d) for d in vectors], ZZ).rank()


def minor_gcd(vectors: Sequence[Bundle]) -> int:
    """gcd of the maximal minors of the matrix with these rows; 0 if they are dependent."""
    k = len(vectors)
    if k == 0:
        return 1
    n = len(vectors[0])
    if k > n or _rank(vectors) < k:
        return 0
    g = 0
    for cols in itertools.combinations(range(n), k):
        minor = DM([[d[c] for c in cols] for d in vectors], ZZ).det()
        g = gcd(g, int(minor))
        if g == 1:
            break
    return g


@dataclass(frozen=True)
class UnimodularityWitness:
    """An independent subset whose maximal minors share the factor ``minor_gcd``."""

    subset: tuple[Bundle, ...]
    minor_gcd: int


def _independent_subsets(D: DemandTypeVectorSet) -> Iterable[tuple[Bundle, ...]]:
    reps = D.representatives()
    for size in range(1, min(len(reps), D.dimension) + 1):
        for subset in itertools.combinations(reps, size):
            if _rank(subset) == size:
                yield subset


def unimodularity_witness(D: DemandTypeVectorSet) -> UnimodularityWitness | None:
    """Smallest independent subset with minor gcd above 1, or None if ``D`` is unimodular."""
    for subset in _independent_subsets(D):
        g = minor_gcd(subset)
        if g > 1:
            logger.debug("subset %s has minor gcd %d", subset, g)
            return UnimodularityWitness(subset, g)
    return None


def is_unimodular(D: DemandTypeVectorSet) -> bool:
    return unimodularity_witness(D) is None


def _parallelepiped_box(subset: Sequence[Bundle]) -> np.ndarray:
    n = len(subset[0])
    lows = [sum(min(d[i], 0) for d in subset) for i in range(n)]
    highs = [sum(max(d[i], 0) for d in subset) for i in range(n)]
    points = itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs)))
    return np.array(list(points), dtype=object).reshape(-1, n)


def _span_coefficients(subset: Sequence[Bundle]) -> tuple[np.ndarray, np.ndarray, int]:
    """Box points around the parallelepiped and ``det`` times their coefficients."""
    S = np.array([list(d) for d in subset], dtype=object).T  # n x k
    G = Matrix(S.T.dot(S).tolist())
    det = int(G.det())
    adj = np.array(G.adjugate().tolist(), dtype=object)
    N = adj.dot(S.T)  # det * (S^T S)^-1 S^T, integral
    Z = _parallelepiped_box(subset)
    numer = Z.dot(N.T)
    in_span = np.all(numer.dot(S.T) == det * Z, axis=1)
    return Z[in_span], numer[in_span], det


def parallelepiped_points(subset: Sequence[Bundle]) -> list[Bundle]:
    """Integer points ``sum a_l d_l`` with every ``a_l`` in [0, 1]."""
    if not subset or _rank(subset) < len(subset):
        raise ValueError("the vectors must be linearly independent")
    Z, numer, det = _span_coefficients(subset)
    inside = np.all((numer >= 0) & (numer <= det), axis=1)
    return sorted(tuple(int(q) for q in z) for z in Z[inside])


def interior_lattice_point(subset: Sequence[Bundle]) -> Bundle | None:
    """An integer point ``sum a_l d_l`` with all ``a_l`` strictly between 0 and 1."""
    if not subset or _rank(subset) < len(subset):
        return None
    Z, numer, det = _span_coefficients(subset)
    hits = np.nonzero(np.all((numer > 0) & (numer < det), axis=1))[0]
    if len(hits) == 0:
        return None
    return tuple(int(q) for q in Z[hits[0]])


def lattice_point_witness(D: DemandTypeVectorSet) -> tuple[tuple[Bundle, ...], Bundle] | None:
    """Smallest independent subset with an interior lattice point, and that point."""
    for subset in _independent_subsets(D):
        z = interior_lattice_point(subset)
        if z is not None:
            return subset, z
    return None


def is_unimodular_by_lattice_points(D: DemandTypeVectorSet) -> bool:
    return lattice_point_witness(D) is None


def annihilating_price(subset: Sequence[Bundle]) -> tuple[Fraction, ...]:
    """``s`` with ``s.d = 0`` for all but the last vector and ``s.d_last = 1``."""
    S = Matrix([list(d) for d in subset]).T
    e = Matrix([0] * (len(subset) - 1) + [1])
    s = S * (S.T * S).inv() * e
    return tuple(Fraction(int(q.p), int(q.q)) for q in s)


def _in_hull_off_segment(points: Sequence[Bundle], u: Bundle, v: Bundle) -> bool:
    """Some convex combination equal to the midpoint of ``[u, v]`` uses a point off it."""
    k = len(points)
    n = len(u)
    mid = [Fraction(a + b, 2) for a, b in zip(u, v)]
    direction = sub(v, u)

    def on_segment(x: Bundle) -> bool:
        w = sub(x, u)
        if any(
            w[i] * direction[j] != w[j] * direction[i]
            for i, j in itertools.combinations(range(n), 2)
        ):
            return False
        t = [Fraction(a, b) for a, b in zip(w, direction) if b != 0]
        return bool(t) and 0 <= t[0] <= 1

    rows = [eq([x[i] for x in points], mid[i]) for i in range(n)]
    rows.append(eq([1] * k, 1))
    rows += [le([-1 if q == r else 0 for q in range(k)], 0) for r in range(k)]
    off = [0 if on_segment(x) else 1 for x in points]
    result = solve_lp(LinearSystem(k, tuple(rows)), off)
    return result.is_optimal and result.value is not None and result.value > 0


def _is_vertex(points: Sequence[Bundle], x: Bundle) -> bool:
    others = [y for y in points if y != x]
    if not others:
        return True
    k = len(others)
    rows = [eq([y[i] for y in others], x[i]) for i in range(len(x))]
    rows.append(eq([1] * k, 1))
    rows += [le([-1 if q == r else 0 for q in range(k)], 0) for r in range(k)]
    return not solve_lp(LinearSystem(k, tuple(rows))).is_optimal


def demand_type_of_linear(X: Iterable[Sequence[int]]) -> DemandTypeVectorSet:
    """Edge directions of ``conv(X)``, computed from the hull directly."""
    points = sorted({tuple(int(q) for q in x) for x in X})
    vertices = [x for x in points if _is_vertex(points, x)]
    edges = [
        sub(v, u)
        for u, v in itertools.combinations(vertices, 2)
        if not _in_hull_off_segment(points, u, v)
    ]
    return demand_type_vector_set(primitive(d) for d in edges)

