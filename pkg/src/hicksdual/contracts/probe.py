"""Pandera schemas for duality-probe report tables."""

from __future__ import annotations

import pandera as pa
from pandera import Check, Column, DataFrameSchema

OUTCOMES = ["found", "not_found", "exhausted"]

# Rationals, bundles and prices are kept as exact strings ("3/2", "1,0", "3,2");
# a null price/allocation means the row has no equilibrium to show.
HICKSIAN_PROBE_SCHEMA = DataFrameSchema(
    {
        "levels": Column(pa.String, nullable=False),
        "outcome": Column(pa.String, Check.isin(OUTCOMES), nullable=False),
        "price": Column(pa.String, nullable=True),
        "allocation": Column(pa.String, nullable=False),
    },
    coerce=True,
    strict=True,
)

MARSHALLIAN_PROBE_SCHEMA = DataFrameSchema(
    {
        "source": Column(pa.String, Check.isin(["sampled", "witness"]), nullable=False),
        "levels": Column(pa.String, nullable=True),
        "endowment": Column(pa.String, nullable=False),
        "outcome": Column(pa.String, Check.isin(OUTCOMES), nullable=False),
        "exact": Column(pa.Bool, nullable=False),
        "price": Column(pa.String, nullable=True),
        "allocation": Column(pa.String, nullable=True),
    },
    coerce=True,
    strict=True,
)
