from __future__ import annotations

from fractions import Fraction

import pytest

from hicksdual.core.errors import (
    InfeasibleConsumption,
    InvalidValuation,
    LevelOutOfRange,
    NoEndowmentAllocation,
    NotStrictlyDecreasing,
)
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    Quasilinear,
    Quasilog,
    TabulatedFamily,
    Valuation,
    compensation,
    endowment_allocations,
    utility_key,
    validate_economy,
)
from hicksdual.documents.fixtures import EX44_VK, EX44B_VJ


def _tabulated() -> Agent:
    low = Valuation({(0,): -2, (1,): -1})
    high = Valuation({(0,): -6, (1,): -3})
    return Agent("t", TabulatedFamily((Fraction(0), Fraction(1)), (low, high), Fraction(0)))


def test_valuation_keys_are_sorted_and_exact() -> None:
    v = Valuation({(1, 0): "3/2", (0, 0): 0})
    assert v.feasible_set == ((0, 0), (1, 0))
    assert v((1, 0)) == Fraction(3, 2)
    assert v.shifted(1)((0, 0)) == 1


def test_quasilog_rejects_nonnegative_quasivaluation() -> None:
    with pytest.raises(InvalidValuation):
        Quasilog(Valuation({(0,): -1, (1,): 0}))


def test_tabulated_family_must_strictly_decrease() -> None:
    flat = Valuation({(0,): -2})
    with pytest.raises(NotStrictlyDecreasing):
        TabulatedFamily((Fraction(0), Fraction(1)), (flat, flat))


def test_compensation_inverts_utility_key() -> None:
    j = Agent("j", Quasilog(Valuation(EX44B_VJ)))
    k = Agent("k", Quasilinear(Valuation(EX44_VK)))
    for agent, money in ((j, Fraction(3)), (k, Fraction(-2))):
        for x in agent.feasible_set:
            c = ConsumptionBundle(money, x)
            assert compensation(agent, x, utility_key(agent, c)) == money


def test_quasilog_level_is_money_over_quasivaluation() -> None:
    j = Agent("j", Quasilog(Valuation(EX44B_VJ)))
    assert utility_key(j, ConsumptionBundle(5, (0, 0))) == Fraction(5, 11)
    assert compensation(j, (1, 0), Fraction(5, 11)) == Fraction(20, 11)
    with pytest.raises(InfeasibleConsumption):
        utility_key(j, ConsumptionBundle(0, (0, 0)))
    with pytest.raises(LevelOutOfRange):
        compensation(j, (0, 0), 0)


def test_tabulated_levels_interpolate_between_grid_points() -> None:
    t = _tabulated()
    assert compensation(t, (0,), Fraction(1, 2)) == 4
    assert utility_key(t, ConsumptionBundle(2, (1,))) == Fraction(1, 2)
    for money in (Fraction(3, 2), Fraction(5), Fraction(20)):
        key = utility_key(t, ConsumptionBundle(money, (0,)))
        assert compensation(t, (0,), key) == money


def test_tabulated_levels_extend_along_the_end_segments() -> None:
    t = _tabulated()
    assert utility_key(t, ConsumptionBundle(Fraction(3, 2), (0,))) == Fraction(-1, 8)
    assert compensation(t, (0,), 2) == 10
    assert compensation(t, (1,), 2) == 5
    assert compensation(t, (0,), Fraction(-1, 4)) == 1


def test_economy_needs_a_feasible_endowment_allocation() -> None:
    k = Agent("k", Quasilinear(Valuation(EX44_VK)))
    validate_economy(Economy(("g1", "g2"), (k,), (1, 0)))
    with pytest.raises(NoEndowmentAllocation):
        validate_economy(Economy(("g1", "g2"), (k,), (1, 1)))


def test_endowment_allocations_are_lexicographic() -> None:
    j = Agent("j", Quasilinear(Valuation({(0, 0): 0, (1, 0): 1, (0, 1): 1, (1, 1): 1})))
    k = Agent("k", Quasilinear(Valuation(EX44_VK)))
    e = Economy(("g1", "g2"), (j, k), (1, 1))
    allocs = list(endowment_allocations(e))
    assert allocs == [((0, 1), (1, 0)), ((1, 0), (0, 1)), ((1, 1), (0, 0))]
