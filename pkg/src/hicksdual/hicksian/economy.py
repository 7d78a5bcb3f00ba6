# Description: Transferable-utility economies and Hicksian economies at fixed levels.
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from hicksdual.core.errors import DimensionMismatch, HicksDualError
from hicksdual.core.models import Economy, Quasilinear, UtilityLevel, Valuation, check_level
from hicksdual.core.numbers import Bundle, as_bundle
from hicksdual.hicksian.valuations import hicksian_valuation


@dataclass(frozen=True)
class TUEconomy:
    """Agents with quasilinear valuations over the same goods and a total endowment."""

    goods: tuple[str, ...]
    names: tuple[str, ...]
    valuations: tuple[Valuation, ...]
    total_endowment: Bundle

    def __post_init__(self) -> None:
        object.__setattr__(self, "goods", tuple(self.goods))
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "valuations", tuple(self.valuations))
        object.__setattr__(self, "total_endowment", as_bundle(self.total_endowment))
        if len(self.names) != len(self.valuations):
            raise DimensionMismatch("one name per valuation is required")
        for name, v in zip(self.names, self.valuations):
            if v.dimension != len(self.goods):
                raise DimensionMismatch(
                    f"{name}: valuation over {v.dimension} goods, expected {len(self.goods)}"
                )

    @property
    def feasible_sets(self) -> list[tuple[Bundle, ...]]:
        return [v.feasible_set for v in self.valuations]

    @property
    def n_goods(self) -> int:
        return len(self.goods)


@dataclass(frozen=True)
class HicksianEconomy(TUEconomy):
    """The TU economy whose agents carry ``V_H(., u^j)``; remembers the levels."""

    levels: tuple[Fraction, ...] = ()


def build_hicksian_economy(e: Economy, levels: Sequence[UtilityLevel]) -> HicksianEconomy:
    if len(levels) != len(e.agents):
        raise DimensionMismatch(f"{len(levels)} levels for {len(e.agents)} agents")
    checked = tuple(check_level(a, u) for a, u in zip(e.agents, levels))
    return HicksianEconomy(
        goods=e.goods,
        names=tuple(a.name for a in e.agents),
        valuations=tuple(hicksian_valuation(a, u) for a, u in zip(e.agents, checked)),
        total_endowment=e.total_endowment,
        levels=checked,
    )


def tu_economy_from(e: Economy) -> TUEconomy:
    """The valuations of an all-quasilinear economy, taken as a TU economy."""
    valuations = []
    for a in e.agents:
        if not isinstance(a.utility, Quasilinear):
            raise HicksDualError(
                f"{a.name} has income effects; build a Hicksian economy at fixed levels instead"
            )
        valuations.append(a.utility.valuation)
    return TUEconomy(
        goods=e.goods,
        names=tuple(a.name for a in e.agents),
        valuations=tuple(valuations),
        total_endowment=e.total_endowment,
    )
