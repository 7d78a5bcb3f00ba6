from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from hicksdual.core.numbers import dot
from hicksdual.documents.fixtures import ex53_vectors
from hicksdual.structure.demand_types import demand_type_vector_set, strong_substitutes_vectors
from hicksdual.structure.unimodular import (
    annihilating_price,
    interior_lattice_point,
    is_unimodular,
    is_unimodular_by_lattice_points,
    lattice_point_witness,
    minor_gcd,
    parallelepiped_points,
    unimodularity_witness,
)


def test_minor_gcd() -> None:
    assert minor_gcd([(1, -1), (1, 1)]) == 2
    assert minor_gcd([(1, 0, 0), (0, 1, 0), (1, 1, 2)]) == 2
    assert minor_gcd([(1, 1, 2), (1, 0, 0)]) == 1
    assert minor_gcd([(1, 1), (2, 2)]) == 0


def test_two_good_non_unimodular_set() -> None:
    D = demand_type_vector_set([(1, -1), (1, 1)])
    witness = unimodularity_witness(D)
    assert witness is not None
    assert witness.minor_gcd == 2
    assert set(witness.subset) == {(1, -1), (1, 1)}
    assert lattice_point_witness(D) == (witness.subset, (1, 0))
    assert not is_unimodular_by_lattice_points(D)


def test_three_good_non_unimodular_set() -> None:
    D = demand_type_vector_set([(1, 0, 0), (0, 1, 0), (1, 1, 2)])
    assert not is_unimodular(D)
    found = lattice_point_witness(D)
    assert found is not None
    subset, z = found
    assert len(subset) == 3
    assert z == (1, 1, 1)


def test_unimodular_sets() -> None:
    for D in (strong_substitutes_vectors(3), demand_type_vector_set(ex53_vectors())):
        assert is_unimodular(D)
        assert is_unimodular_by_lattice_points(D)


def test_parallelepiped_of_a_basis_is_its_vertices() -> None:
    assert parallelepiped_points([(1, 0), (0, 1)]) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert (1, 0) in parallelepiped_points([(1, -1), (1, 1)])
    assert interior_lattice_point([(1, 0), (0, 1)]) is None
    with pytest.raises(ValueError):
        parallelepiped_points([(1, 1), (2, 2)])


def test_annihilating_price() -> None:
    subset = [(1, 0, 0), (0, 1, 0), (1, 1, 2)]
    s = annihilating_price(subset)
    assert [dot(s, d) for d in subset] == [0, 0, 1]
    assert s == (Fraction(0), Fraction(0), Fraction(1, 2))


def test_minor_gcd_agrees_with_lattice_points_on_random_sets() -> None:
    rng = np.random.default_rng(41)
    verdicts = []
    for _ in range(300):
        n = int(rng.integers(2, 5))
        vectors = [
            tuple(int(q) for q in rng.integers(-1, 2, size=n))
            for _ in range(int(rng.integers(1, 6)))
        ]
        vectors = [d for d in vectors if any(d)]
        if not vectors:
            continue
        D = demand_type_vector_set(vectors)
        verdict = is_unimodular(D)
        assert verdict == is_unimodular_by_lattice_points(D), vectors
        verdicts.append(verdict)
    assert any(verdicts) and not all(verdicts)
