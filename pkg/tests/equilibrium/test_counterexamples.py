from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from hicksdual.core.errors import IsActuallySubstitutes, SubsetUnimodular
from hicksdual.core.models import Valuation
from hicksdual.data.generators import random_unit_bounded_valuation
from hicksdual.documents.fixtures import EX44_VK, EX44A_VJ
from hicksdual.equilibrium.counterexamples import (
    counterexample_substitutes,
    counterexample_unimodular,
)
from hicksdual.equilibrium.income import decide_marshallian_ce
from hicksdual.equilibrium.outcomes import NotFound
from hicksdual.equilibrium.tu import is_pseudo_equilibrium
from hicksdual.hicksian.economy import tu_economy_from
from hicksdual.structure.concavity import is_concave
from hicksdual.structure.lp import FarkasCertificate
from hicksdual.structure.substitutes import is_substitutes


def test_complements_yield_a_counterexample() -> None:
    cx = counterexample_substitutes(Valuation(EX44A_VJ))
    assert cx.economy.total_endowment == (1, 1)
    assert cx.endowment.goods == ((1, 1), (0, 0))
    k = cx.economy.agents[1].utility
    assert is_substitutes(k.valuation)
    assert isinstance(cx.outcome, NotFound)
    assert isinstance(cx.outcome.certificate, FarkasCertificate)
    assert is_pseudo_equilibrium(tu_economy_from(cx.economy), cx.price)
    marshallian = decide_marshallian_ce(cx.economy, cx.endowment)
    assert isinstance(marshallian, NotFound)


def test_substitutes_valuation_has_no_counterexample() -> None:
    with pytest.raises(IsActuallySubstitutes):
        counterexample_substitutes(Valuation(EX44_VK))


def test_non_unimodular_pair_yields_a_counterexample() -> None:
    cx = counterexample_unimodular([(1, 1), (1, -1)], (1, 0))
    j, k = cx.economy.agents
    assert set(j.feasible_set) == {(0, 0), (1, 1), (1, -1), (2, 0), (1, 0)}
    assert set(k.feasible_set) == {(0, 0), (1, -1)}
    assert cx.price == (Fraction(1, 2), Fraction(-1, 2))
    assert is_concave(j.utility.valuation) and is_concave(k.utility.valuation)
    assert isinstance(cx.outcome, NotFound) and cx.outcome.is_proof


def test_three_good_counterexample() -> None:
    cx = counterexample_unimodular([(1, 0, 0), (0, 1, 0), (1, 1, 2)], (1, 1, 1))
    assert cx.economy.total_endowment == (1, 1, 1)
    assert isinstance(cx.outcome, NotFound)


def test_unimodular_or_bad_input_is_rejected() -> None:
    with pytest.raises(SubsetUnimodular):
        counterexample_unimodular([(1, 0), (0, 1)], (1, 1))
    with pytest.raises(ValueError):
        counterexample_unimodular([(1, 1), (1, -1)], (5, 5))
    with pytest.raises(ValueError):
        counterexample_unimodular([(1, 1), (2, 2)], (1, 1))


def test_random_non_substitutes_valuations_yield_counterexamples() -> None:
    rng = np.random.default_rng(50)
    built = 0
    for _ in range(400):
        vj = random_unit_bounded_valuation(rng, int(rng.integers(2, 4)))
        if is_substitutes(vj):
            with pytest.raises(IsActuallySubstitutes):
                counterexample_substitutes(vj)
            continue
        cx = counterexample_substitutes(vj)
        assert isinstance(cx.outcome, NotFound) and cx.outcome.is_proof
        assert is_substitutes(cx.economy.agents[1].utility.valuation)
        assert is_pseudo_equilibrium(tu_economy_from(cx.economy), cx.price)
        built += 1
        if built == 50:
            break
    assert built == 50
