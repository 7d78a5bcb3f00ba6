from __future__ import annotations

import pytest

from hicksdual.core.models import Valuation
from hicksdual.core.numbers import unit_vector
from hicksdual.documents.fixtures import (
    EX44_VK,
    EX44A_VJ,
    EX53_VECTORS,
    ex52_bundles,
    ex53,
    ex53_vectors,
)
from hicksdual.hicksian.valuations import structural_valuations
from hicksdual.structure.concavity import is_quasiconcave
from hicksdual.structure.demand_types import (
    demand_type_vector_set,
    is_of_demand_type,
    linear_on_domain,
    minimal_demand_type,
    strong_substitutes_vectors,
    uniquely_demanded,
)
from hicksdual.structure.unimodular import demand_type_of_linear

EX52_TYPE = demand_type_vector_set([(1, 0), (0, 1), (1, -1)])


def test_vector_sets_are_primitive_and_symmetric() -> None:
    D = demand_type_vector_set([(2, -2), (0, 3)])
    assert set(D) == {(1, -1), (-1, 1), (0, 1), (0, -1)}
    assert D.representatives() == [(1, -1), (0, 1)]
    with pytest.raises(ValueError):
        demand_type_vector_set([(0, 0)])


def test_truncated_box_uniquely_demanded_bundles() -> None:
    v = linear_on_domain(ex52_bundles(), (1, 1))
    assert uniquely_demanded(v) == {(0, 0), (0, 3), (1, 3), (3, 0), (3, 1)}


def test_truncated_box_demand_type() -> None:
    v = linear_on_domain(ex52_bundles(), (1, 1))
    assert minimal_demand_type(v) == EX52_TYPE
    assert demand_type_of_linear(ex52_bundles()) == EX52_TYPE
    assert is_of_demand_type(v, strong_substitutes_vectors(2))


def test_complements_are_not_of_strong_substitutes_type() -> None:
    v = Valuation(EX44A_VJ)
    assert minimal_demand_type(v) == demand_type_vector_set([(1, 1), (1, 0), (0, 1)])
    assert not is_of_demand_type(v, strong_substitutes_vectors(2))


def test_unit_demand_type() -> None:
    assert minimal_demand_type(Valuation(EX44_VK)) == EX52_TYPE


def test_strong_substitutes_vectors_count() -> None:
    # n unit vectors and n(n-1) differences, each with its negation
    assert len(strong_substitutes_vectors(3)) == 2 * (3 + 3)


def test_mixed_fixture_agents_span_the_five_good_type() -> None:
    agents = ex53().economy.agents
    types = [minimal_demand_type(v) for a in agents for v in structural_valuations(a)]
    assert types == [
        demand_type_vector_set(unit_vector(5, i) for i in range(5)),
        demand_type_vector_set(EX53_VECTORS),
    ]
    assert demand_type_vector_set(d for t in types for d in t) == demand_type_vector_set(
        ex53_vectors()
    )
    assert all(is_quasiconcave(a) for a in agents)
