# Description: Worked example economies, built in code and written out as documents.
"""Example economies.

Notes:
- ex34: a housing market; every agent wants at most one house and one agent owns a house
  they may sell.
- ex44a: two quasilinear agents, goods complementary for ``j``; no equilibrium.
- ex44b: ``j`` becomes quasilogarithmic; equilibrium at price (3, 2).
- ex52: one agent on a truncated box whose demand type is +/-{(1,0), (0,1), (1,-1)}.
- ex53: a five-good unimodular demand type that is not the strong-substitutes one; a
  quasilogarithmic agent linear on the unit cube and a quasilinear agent linear on the
  parallelepiped of the five mixed vectors together span it.
"""

from __future__ import annotations

import itertools
from pathlib import Path
from typing import Callable

from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    EndowmentAllocation,
    Quasilinear,
    Quasilog,
    Valuation,
)
from hicksdual.core.numbers import unit_vector, zeros
from hicksdual.documents.codec import EconomyDocument, write_document
from hicksdual.structure.demand_types import linear_on_domain
from hicksdual.structure.unimodular import parallelepiped_points

EX44_VK = {(0, 0): 0, (1, 0): 4, (0, 1): 3}
EX44A_VJ = {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 5}
EX44B_VJ = {(0, 0): -11, (0, 1): -7, (1, 0): -4, (1, 1): -1}

EX53_VECTORS = (
    (1, -1, 1, 0, 0),
    (0, 1, -1, 1, 0),
    (0, 0, 1, -1, 1),
    (1, 0, 0, 1, -1),
    (-1, 1, 0, 0, 1),
)


def _endow(*pairs: tuple[int | str, tuple[int, ...]]) -> EndowmentAllocation:
    return EndowmentAllocation(tuple(ConsumptionBundle(m, x) for m, x in pairs))


def ex34() -> EconomyDocument:
    houses = ("h1", "h2", "h3")
    e0, e1, e2, e3 = zeros(3), unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)
    martine = Agent("martine", Quasilog(Valuation({e0: -12, e1: -6, e2: -4, e3: -3})))
    ana = Agent("ana", Quasilog(Valuation({e0: -10, e2: -5})))
    ben = Agent("ben", Quasilinear(Valuation({e0: 0, e1: 2, e3: 4})))
    economy = Economy(houses, (martine, ana, ben), (1, 1, 1))
    return EconomyDocument(economy, _endow((2, e1), (3, e2), (1, e3)))


def ex44a() -> EconomyDocument:
    economy = Economy(
        ("g1", "g2"),
        (Agent("j", Quasilinear(Valuation(EX44A_VJ))), Agent("k", Quasilinear(Valuation(EX44_VK)))),
        (1, 1),
    )
    return EconomyDocument(economy, _endow((0, (0, 1)), (0, (1, 0))))


def ex44b() -> EconomyDocument:
    economy = Economy(
        ("g1", "g2"),
        (Agent("j", Quasilog(Valuation(EX44B_VJ))), Agent("k", Quasilinear(Valuation(EX44_VK)))),
        (1, 1),
    )
    return EconomyDocument(economy, _endow((3, (0, 1)), (3, (1, 0))))


def ex52_bundles() -> list[tuple[int, ...]]:
    return [
        x
        for x in itertools.product(range(4), repeat=2)
        if x not in {(2, 3), (3, 2), (3, 3)}
    ]


def ex52() -> EconomyDocument:
    v = Valuation({x: sum(x) for x in ex52_bundles()})
    return EconomyDocument(Economy(("g1", "g2"), (Agent("j", Quasilinear(v)),), (1, 1)))


def ex53_vectors() -> tuple[tuple[int, ...], ...]:
    """Representatives of the five-good set; the set itself is closed under negation."""
    return tuple(unit_vector(5, i) for i in range(5)) + EX53_VECTORS


def ex53_domains() -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """The unit cube and the parallelepiped spanned by the five mixed vectors; both are
    lattice-point free apart from their vertices."""
    cube = parallelepiped_points([unit_vector(5, i) for i in range(5)])
    return cube, parallelepiped_points(EX53_VECTORS)


def ex53() -> EconomyDocument:
    cube, twisted = ex53_domains()
    linear = linear_on_domain(cube, (1, 2, 3, 4, 5))
    box = Agent("box", Quasilog(Valuation({x: v - 20 for x, v in linear.values.items()})))
    twist = Agent("twist", Quasilinear(linear_on_domain(twisted, (5, 4, 3, 2, 1))))
    economy = Economy(tuple(f"g{i + 1}" for i in range(5)), (box, twist), (1, 1, 1, 1, 1))
    endow = _endow((30, (1, 1, 1, 1, 1)), (10, zeros(5)))
    return EconomyDocument(economy, endow, demand_type=ex53_vectors())


FIXTURES: dict[str, Callable[[], EconomyDocument]] = {
    "ex34": ex34,
    "ex44a": ex44a,
    "ex44b": ex44b,
    "ex52": ex52,
    "ex53": ex53,
}


def write_fixtures(outdir: str | Path) -> list[Path]:
    out = Path(outdir)
    return [write_document(build(), out / f"{name}.json") for name, build in FIXTURES.items()]
