"""Unit tests for seeded instance generators."""

from __future__ import annotations

import numpy as np

from hicksdual.core.models import Quasilog, validate_economy, validate_endowment
from hicksdual.data.generators import (
    random_endowment,
    random_housing_economy,
    random_quasilinear_economy,
    random_quasilog_economy,
    random_unit_bounded_valuation,
    unit_demand_bundles,
)


def test_generated_economies_are_valid() -> None:
    rng = np.random.default_rng(0)
    for build in (random_quasilinear_economy, random_quasilog_economy, random_housing_economy):
        for _ in range(5):
            e = build(rng)
            validate_economy(e)
            validate_endowment(e, random_endowment(rng, e))


def test_same_seed_same_instance() -> None:
    a = random_quasilog_economy(np.random.default_rng(9))
    b = random_quasilog_economy(np.random.default_rng(9))
    assert a == b


def test_quasilog_money_stays_above_the_floor() -> None:
    rng = np.random.default_rng(1)
    e = random_quasilog_economy(rng, max_agents=3)
    assert all(isinstance(a.utility, Quasilog) for a in e.agents)
    assert all(m > 0 for m in random_endowment(rng, e).money)


def test_housing_agents_want_at_most_one_house() -> None:
    rng = np.random.default_rng(4)
    e = random_housing_economy(rng, max_agents=3, n_houses=3)
    allowed = set(unit_demand_bundles(3))
    assert all(set(a.feasible_set) <= allowed for a in e.agents)


def test_unit_bounded_valuations() -> None:
    v = random_unit_bounded_valuation(np.random.default_rng(2), 3)
    assert len(v) >= 2
    assert all(q in (0, 1) for x in v.feasible_set for q in x)
