# Description: Competitive-equilibrium outcomes and the certificates behind NotFound.
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from hicksdual.core.allocations import Allocation
from hicksdual.core.numbers import PriceVector
from hicksdual.structure.lp import FarkasCertificate


@dataclass(frozen=True)
class Found:
    """Equilibrium price and goods allocation.

    ``money`` is each agent's money after trade; for TU economies, which carry no money
    endowments, it is the transfer ``-p.x^j``.
    """

    price: PriceVector
    allocation: Allocation
    money: tuple[Fraction, ...]


@dataclass(frozen=True)
class SearchExhausted:
    """The income-effect search stopped without a verified equilibrium; not a proof."""

    details: str
    iterations: int = 0


@dataclass(frozen=True)
class AllocationsExhausted:
    """Every goods allocation was refuted by its joint price-and-level program."""

    allocations: int


@dataclass(frozen=True)
class NotFound:
    certificate: FarkasCertificate | SearchExhausted | AllocationsExhausted
    allocation: Allocation | None = None

    @property
    def is_proof(self) -> bool:
        return not isinstance(self.certificate, SearchExhausted)


CEOutcome = Union[Found, NotFound]
