# Description: Enumeration of goods allocations that sum to a target bundle.
from __future__ import annotations

import logging
from math import prod
from typing import Iterator, Sequence

from hicksdual.core.errors import EnumerationLimitExceeded
from hicksdual.core.numbers import Bundle, sub

logger = logging.getLogger(__name__)

DEFAULT_MAX_ALLOCATIONS = 10**7

Allocation = tuple[Bundle, ...]


def _suffix_sums(feasible_sets: Sequence[Sequence[Bundle]], n: int) -> list[set[Bundle]]:
    sums: list[set[Bundle]] = [set() for _ in range(len(feasible_sets) + 1)]
    sums[-1] = {(0,) * n}
    for k in range(len(feasible_sets) - 1, -1, -1):
        sums[k] = {
            tuple(a + b for a, b in zip(x, rest))
            for x in feasible_sets[k]
            for rest in sums[k + 1]
        }
    return sums


def enumerate_allocations(
    feasible_sets: Sequence[Sequence[Bundle]],
    target: Bundle,
    max_allocations: int = DEFAULT_MAX_ALLOCATIONS,
) -> Iterator[Allocation]:
    """Yield every ``(x^1, ..., x^J)`` with ``x^j`` in the j-th set and ``sum x^j = target``.

    Allocations come out in lexicographic order of the sorted feasible sets, so the first
    one yielded is the lexicographically smallest.
    """
    if not feasible_sets:
        if all(q == 0 for q in target):
            yield ()
        return
    size = prod(len(s) for s in feasible_sets)
    if size > max_allocations:
        raise EnumerationLimitExceeded(
            f"{size} candidate allocations exceed the enumeration cap {max_allocations}"
        )
    ordered = [sorted(s) for s in feasible_sets]
    reachable = _suffix_sums(ordered, len(target))
    if target not in reachable[0]:
        return
    logger.debug("enumerating allocations over %d agents (%d candidates)", len(ordered), size)

    def walk(k: int, remaining: Bundle, chosen: list[Bundle]) -> Iterator[Allocation]:
        if k == len(ordered):
            yield tuple(chosen)
            return
        for x in ordered[k]:
            rest = sub(remaining, x)
            if rest in reachable[k + 1]:
                chosen.append(x)
                yield from walk(k + 1, rest, chosen)
                chosen.pop()

    yield from walk(0, tuple(target), [])


def first_allocation(
    feasible_sets: Sequence[Sequence[Bundle]], target: Bundle
) -> Allocation | None:
    for alloc in enumerate_allocations(feasible_sets, target, max_allocations=10**18):
        return alloc
    return None
