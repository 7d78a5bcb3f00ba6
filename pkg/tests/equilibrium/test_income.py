from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest

from hicksdual.core.config import IncomeSearchConfig
from hicksdual.core.errors import DimensionMismatch
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    EndowmentAllocation,
    Quasilinear,
    Quasilog,
    TabulatedFamily,
    Valuation,
    compensation,
    level_of,
)
from hicksdual.core.numbers import parse_price, sub
from hicksdual.data.generators import (
    random_endowment,
    random_housing_economy,
    random_quasilinear_economy,
    random_quasilog_agent,
    random_quasilog_economy,
)
from hicksdual.documents.fixtures import ex34, ex44a, ex44b, ex53, ex53_domains
from hicksdual.equilibrium.income import (
    decide_marshallian_ce,
    initial_search_state,
    joint_system,
    level_segments,
    net_expenditure_box,
    solve_income_ce,
    verify_ce,
)
from hicksdual.equilibrium.outcomes import AllocationsExhausted, Found, NotFound, SearchExhausted
from hicksdual.equilibrium.tu import solve_tu_ce
from hicksdual.hicksian.economy import tu_economy_from
from hicksdual.hicksian.valuations import tabulate
from hicksdual.structure.demand_types import linear_on_domain
from hicksdual.structure.lp import LinearSystem, find_point, ge, lt
from hicksdual.structure.substitutes import is_net_substitutes


def test_verify_ce_on_the_quasilog_example() -> None:
    doc = ex44b()
    assert doc.endowment is not None
    alloc = ((1, 0), (0, 1))
    assert verify_ce(doc.economy, doc.endowment, parse_price("3,2"), alloc)
    assert not verify_ce(doc.economy, doc.endowment, parse_price("2,2"), alloc)
    assert not verify_ce(doc.economy, doc.endowment, parse_price("3,2"), ((1, 1), (1, 0)))
    with pytest.raises(DimensionMismatch):
        verify_ce(doc.economy, doc.endowment, (Fraction(3),), alloc)


def test_income_effects_restore_equilibrium() -> None:
    doc = ex44b()
    assert doc.endowment is not None
    outcome = solve_income_ce(doc.economy, doc.endowment)
    assert isinstance(outcome, Found)
    # the equilibrium price is an interval; (3, 2) is one point of it
    assert outcome.allocation == ((1, 0), (0, 1))
    assert verify_ce(doc.economy, doc.endowment, outcome.price, outcome.allocation)
    assert outcome.money[0] > 0


def test_quasilinear_complements_are_refuted_exactly() -> None:
    doc = ex44a()
    assert doc.endowment is not None
    outcome = decide_marshallian_ce(doc.economy, doc.endowment)
    assert isinstance(outcome, NotFound)
    assert outcome.certificate == AllocationsExhausted(3)
    assert outcome.is_proof
    assert net_expenditure_box(doc.economy, doc.endowment, [0, 0]) is None


def test_search_without_fallback_is_not_a_proof() -> None:
    doc = ex44a()
    assert doc.endowment is not None
    outcome = solve_income_ce(
        doc.economy, doc.endowment, IncomeSearchConfig(max_iter=5, exhaustive_fallback=False)
    )
    assert isinstance(outcome, NotFound)
    assert isinstance(outcome.certificate, SearchExhausted)
    assert not outcome.is_proof


def test_enumeration_cap_ends_the_search() -> None:
    doc = ex44b()
    assert doc.endowment is not None
    outcome = solve_income_ce(doc.economy, doc.endowment, max_allocations=2)
    assert isinstance(outcome, NotFound)
    assert isinstance(outcome.certificate, SearchExhausted)


def test_housing_market_has_an_equilibrium() -> None:
    doc = ex34()
    assert doc.endowment is not None
    outcome = solve_income_ce(doc.economy, doc.endowment)
    assert isinstance(outcome, Found)
    assert verify_ce(doc.economy, doc.endowment, outcome.price, outcome.allocation)


def test_search_brackets_start_ordered() -> None:
    doc = ex44b()
    assert doc.endowment is not None
    state = initial_search_state(doc.economy, doc.endowment)
    assert state.levels == [Fraction(3, 7), Fraction(7)]
    assert all(lo <= hi for lo, hi in zip(state.lower, state.upper))
    assert state.total_slack > 1


def test_joint_system_names_prices_and_levels() -> None:
    doc = ex44b()
    assert doc.endowment is not None
    segments = [level_segments(a)[0] for a in doc.economy.agents]
    system = joint_system(doc.economy, doc.endowment, ((1, 0), (0, 1)), segments)
    assert system.variables == ("p1", "p2", "u[j]", "u[k]")
    # at (3, 2) agent j reaches w = 1/2 and k reaches 3 + 3 - 2 + 3 = 7
    point = (Fraction(3), Fraction(2), Fraction(1, 2), Fraction(7))
    assert system.is_satisfied(point)


def test_tabulated_segments_follow_the_grid() -> None:
    doc = ex44b()
    j = doc.economy.agents[0]
    t = Agent("t", tabulate(j, [Fraction(1, 4), Fraction(1, 2), Fraction(1)]))
    segments = level_segments(t)
    # below index -1 the extended grid would pay w <= 0, under the money floor
    assert [(s.lower, s.upper) for s in segments] == [(-1, 0), (0, 1), (1, 2), (2, None)]
    cut = level_segments(t, Fraction(3, 2), Fraction(7, 4))
    assert len(cut) == 1
    assert (cut[0].lower, cut[0].upper) == (Fraction(3, 2), Fraction(7, 4))


def test_substitutes_housing_markets_always_clear() -> None:
    rng = np.random.default_rng(2024)
    for _ in range(6):
        e = random_housing_economy(rng, max_agents=3, n_houses=2)
        endow = random_endowment(rng, e)
        outcome = solve_income_ce(e, endow)
        assert isinstance(outcome, Found)
        assert verify_ce(e, endow, outcome.price, outcome.allocation)


def test_quasilinear_existence_matches_tu_existence() -> None:
    rng = np.random.default_rng(5)
    for _ in range(8):
        e = random_quasilinear_economy(rng, max_agents=2, n_goods=2)
        endow = random_endowment(rng, e)
        marshallian = solve_income_ce(e, endow)
        tu = solve_tu_ce(tu_economy_from(e))
        assert isinstance(marshallian, Found) == isinstance(tu, Found)
        if isinstance(marshallian, NotFound):
            assert marshallian.is_proof


def _single_good_tabulated() -> tuple[Economy, EndowmentAllocation]:
    low = Valuation({(0,): -1, (1,): Fraction(-1, 2)})
    high = Valuation({(0,): -2, (1,): Fraction(-3, 2)})
    t = Agent("t", TabulatedFamily((Fraction(0), Fraction(1)), (low, high)))
    e = Economy(("g",), (t,), (1,))
    return e, EndowmentAllocation((ConsumptionBundle(10, (1,)),))


def test_equilibrium_above_the_tabulated_grid_is_found() -> None:
    e, endow = _single_good_tabulated()
    t = e.agents[0]
    assert level_of(t, endow[0]) == Fraction(19, 2)
    assert compensation(t, (1,), Fraction(19, 2)) == 10
    for outcome in (decide_marshallian_ce(e, endow), solve_income_ce(e, endow)):
        assert isinstance(outcome, Found)
        assert outcome.allocation == ((1,),)
        assert verify_ce(e, endow, outcome.price, outcome.allocation)


def _quasilog_equilibrium_exists(e: Economy, endow: EndowmentAllocation) -> bool:
    """Some goods allocation has prices under which every quasilog agent demands its bundle.

    ``U = m / a(x)`` with ``a = -v``; cross-multiplying the comparisons makes them linear in p.
    """
    for alloc in itertools.product(*(a.feasible_set for a in e.agents)):
        if tuple(sum(q) for q in zip(*alloc)) != e.total_endowment:
            continue
        rows = []
        for agent, c, x in zip(e.agents, endow.endowments, alloc):
            v = agent.utility.quasivaluation
            dx = sub(x, c.goods)
            rows.append(lt(dx, c.money))
            for z in agent.feasible_set:
                dz = sub(z, c.goods)
                coefficients = [-v(x) * b + v(z) * a for a, b in zip(dx, dz)]
                rows.append(ge(coefficients, c.money * (v(z) - v(x))))
        if find_point(LinearSystem(e.n_goods, tuple(rows))) is not None:
            return True
    return False


def test_housing_equilibria_match_an_assignment_oracle() -> None:
    rng = np.random.default_rng(808)
    for _ in range(8):
        e = random_housing_economy(rng, max_agents=3, n_houses=3)
        endow = random_endowment(rng, e)
        assert _quasilog_equilibrium_exists(e, endow)
        outcome = solve_income_ce(e, endow)
        assert isinstance(outcome, Found)
        assert verify_ce(e, endow, outcome.price, outcome.allocation)


def test_quasilog_existence_matches_an_assignment_oracle() -> None:
    rng = np.random.default_rng(99)
    verdicts = []
    for _ in range(12):
        e = random_quasilog_economy(rng, max_agents=2, n_goods=2)
        endow = random_endowment(rng, e)
        found = isinstance(solve_income_ce(e, endow), Found)
        assert found == _quasilog_equilibrium_exists(e, endow)
        verdicts.append(found)
    assert any(verdicts)


def test_random_strong_substitutes_economies_clear() -> None:
    rng = np.random.default_rng(61)
    for trial in range(6):
        agents: list[Agent] = []
        while len(agents) < 2:
            agent = random_quasilog_agent(rng, f"a{trial}_{len(agents)}", 2)
            if is_net_substitutes(agent):
                agents.append(agent)
        total = tuple(sum(q) for q in zip(*(a.feasible_set[-1] for a in agents)))
        e = Economy(("g1", "g2"), tuple(agents), total)
        endow = random_endowment(rng, e)
        outcome = solve_income_ce(e, endow)
        assert isinstance(outcome, Found)
        assert verify_ce(e, endow, outcome.price, outcome.allocation)


def test_mixed_unimodular_fixture_clears() -> None:
    doc = ex53()
    assert doc.endowment is not None
    outcome = solve_income_ce(doc.economy, doc.endowment)
    assert isinstance(outcome, Found)
    assert verify_ce(doc.economy, doc.endowment, outcome.price, outcome.allocation)


def test_random_economies_of_the_five_good_type_clear() -> None:
    rng = np.random.default_rng(53)
    cube, twisted = ex53_domains()
    for _ in range(3):
        t = [int(q) for q in rng.integers(1, 6, size=5)]
        s = [int(q) for q in rng.integers(-3, 4, size=5)]
        shifted = {x: v - 30 for x, v in linear_on_domain(cube, t).values.items()}
        box = Agent("box", Quasilog(Valuation(shifted)))
        twist = Agent("twist", Quasilinear(linear_on_domain(twisted, s)))
        y = tuple(int(q) for q in rng.integers(0, 2, size=5))
        e = Economy(tuple(f"g{i + 1}" for i in range(5)), (box, twist), y)
        endow = random_endowment(rng, e)
        outcome = solve_income_ce(e, endow)
        assert isinstance(outcome, Found)
        assert verify_ce(e, endow, outcome.price, outcome.allocation)
