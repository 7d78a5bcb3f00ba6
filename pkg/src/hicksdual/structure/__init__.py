"""Structural classification of valuations and utility models."""

from hicksdual.structure.concavity import is_concave, is_quasiconcave
from hicksdual.structure.demand_types import (
    DemandTypeVectorSet,
    adjacent_pairs,
    demand_type_vector_set,
    is_of_demand_type,
    linear_on_domain,
    minimal_demand_type,
    strong_substitutes_vectors,
    uniquely_demanded,
)
from hicksdual.structure.lp import (
    FarkasCertificate,
    LinearSystem,
    farkas_certificate,
    find_point,
    maximize_slack,
    solve_lp,
)
from hicksdual.structure.substitutes import (
    GrossCase,
    gross_probe_cases,
    gross_substitutes_violation,
    is_gross_substitutes_at,
    is_net_substitutes,
    is_strong_net_substitutes,
    is_strong_substitutes,
    is_substitutes,
    substitutes_violation,
    unpack_units,
)
from hicksdual.structure.unimodular import (
    demand_type_of_linear,
    annihilating_price,
    interior_lattice_point,
    is_unimodular,
    is_unimodular_by_lattice_points,
    lattice_point_witness,
    minor_gcd,
    parallelepiped_points,
    unimodularity_witness,
)

__all__ = [
    "DemandTypeVectorSet",
    "FarkasCertificate",
    "GrossCase",
    "LinearSystem",
    "adjacent_pairs",
    "annihilating_price",
    "demand_type_of_linear",
    "demand_type_vector_set",
    "farkas_certificate",
    "find_point",
    "gross_probe_cases",
    "gross_substitutes_violation",
    "interior_lattice_point",
    "is_concave",
    "is_gross_substitutes_at",
    "is_net_substitutes",
    "is_of_demand_type",
    "is_quasiconcave",
    "is_strong_net_substitutes",
    "is_strong_substitutes",
    "is_substitutes",
    "is_unimodular",
    "is_unimodular_by_lattice_points",
    "lattice_point_witness",
    "linear_on_domain",
    "maximize_slack",
    "minimal_demand_type",
    "minor_gcd",
    "parallelepiped_points",
    "solve_lp",
    "strong_substitutes_vectors",
    "substitutes_violation",
    "uniquely_demanded",
    "unimodularity_witness",
    "unpack_units",
]
