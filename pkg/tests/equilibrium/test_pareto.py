from __future__ import annotations

from fractions import Fraction

import pytest

from hicksdual.core.errors import NotParetoEfficient
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    EndowmentAllocation,
    Quasilinear,
    TabulatedFamily,
    Valuation,
    level_of,
)
from hicksdual.documents.fixtures import ex44a, ex44b
from hicksdual.equilibrium.income import decide_marshallian_ce, verify_ce
from hicksdual.equilibrium.outcomes import NotFound
from hicksdual.equilibrium.pareto import is_pareto_efficient, pareto_profile_at, support_pareto


def test_profile_at_levels_is_efficient_and_reaches_them() -> None:
    e = ex44b().economy
    levels = [Fraction(1, 2), Fraction(0)]
    h, profile = pareto_profile_at(e, levels)
    assert profile.goods == ((1, 0), (0, 1))
    assert profile.money == (Fraction(2), Fraction(-3))
    assert [level_of(a, c) for a, c in zip(e.agents, profile.endowments)] == levels
    assert h.levels == tuple(levels)
    assert is_pareto_efficient(e, profile)


def test_supported_profile_is_an_equilibrium_from_itself() -> None:
    e = ex44b().economy
    _, profile = pareto_profile_at(e, [Fraction(1, 2), Fraction(0)])
    p = support_pareto(e, profile)
    assert p is not None
    assert verify_ce(e, profile, p, profile.goods)


def test_endowment_of_the_quasilog_example_is_inefficient() -> None:
    doc = ex44b()
    assert doc.endowment is not None
    assert not is_pareto_efficient(doc.economy, doc.endowment)
    with pytest.raises(NotParetoEfficient):
        support_pareto(doc.economy, doc.endowment)


def test_unsupported_efficient_profile_has_no_equilibrium() -> None:
    e = ex44a().economy
    _, profile = pareto_profile_at(e, [0, 0])
    assert profile.goods == ((1, 1), (0, 0))
    assert is_pareto_efficient(e, profile)
    assert support_pareto(e, profile) is None
    outcome = decide_marshallian_ce(e, profile)
    assert isinstance(outcome, NotFound) and outcome.is_proof


def _tabulated_and_indifferent() -> Economy:
    low = Valuation({(0,): -1, (1,): Fraction(-1, 2)})
    high = Valuation({(0,): -2, (1,): Fraction(-3, 2)})
    t = Agent("t", TabulatedFamily((Fraction(0), Fraction(1)), (low, high)))
    k = Agent("k", Quasilinear(Valuation({(0,): 0, (1,): 0})))
    return Economy(("g",), (t, k), (1,))


def test_profile_beyond_the_grid_can_still_be_improved() -> None:
    e = _tabulated_and_indifferent()
    t, k = e.agents
    profile = EndowmentAllocation((ConsumptionBundle(10, (0,)), ConsumptionBundle(0, (1,))))
    assert level_of(t, profile[0]) == 9
    better = (ConsumptionBundle(Fraction(39, 4), (1,)), ConsumptionBundle(Fraction(1, 4), (0,)))
    assert level_of(t, better[0]) == Fraction(37, 4)
    assert level_of(k, better[1]) == Fraction(1, 4)
    assert not is_pareto_efficient(e, profile)
    with pytest.raises(NotParetoEfficient):
        support_pareto(e, profile)


def test_profile_beyond_the_grid_giving_the_good_to_t_is_efficient() -> None:
    e = _tabulated_and_indifferent()
    profile = EndowmentAllocation((ConsumptionBundle(10, (1,)), ConsumptionBundle(0, (0,))))
    assert is_pareto_efficient(e, profile)
