# Description: Exact rational numbers, bundles and price vectors.
"""Exact numeric layer.

Notes:
- Every price, money amount and value is a ``fractions.Fraction``; floats are rejected so
  nothing downstream ever compares rounded numbers.
- Bundles are plain tuples of ints and price vectors tuples of Fractions; both are hashable
  and immutable, which lets demand sets be ordinary frozensets.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Fraction
Bundle = tuple[int, ...]
PriceVector = tuple[Fraction, ...]
RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Convert ints, Fractions and "p/q" strings to a canonical Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Expected int, Fraction or 'p/q' string, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("empty rational")
    if any(ch in cleaned for ch in ".eE"):
        raise ValueError(f"decimal notation is not exact, use p/q: {text!r}")
    return Fraction(cleaned)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_bundle(values: Iterable[int]) -> Bundle:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"bundle entries must be integers, got {v!r}")
        out.append(int(v))
    return tuple(out)


def as_price(values: Iterable[RationalLike]) -> PriceVector:
    return tuple(as_rational(v) for v in values)


def parse_bundle(text: str) -> Bundle:
    """Parse ``"1,0,2"`` into ``(1, 0, 2)``; the empty string is the 0-good bundle."""
    cleaned = text.strip()
    if not cleaned:
        return ()
    return tuple(int(part) for part in cleaned.split(","))


def format_bundle(x: Sequence[int]) -> str:
    return ",".join(str(q) for q in x)


def parse_price(text: str) -> PriceVector:
    return tuple(parse_rational(part) for part in text.split(","))


def parse_bundle_list(text: str) -> list[Bundle]:
    """Parse ``"1,0;0,1"`` into a list of bundles."""
    return [parse_bundle(part) for part in text.split(";") if part.strip()]


def dot(p: Sequence[Fraction | int], x: Sequence[Fraction | int]) -> Fraction:
    if len(p) != len(x):
        raise ValueError(f"dimension mismatch: {len(p)} vs {len(x)}")
    return sum((Fraction(a) * b for a, b in zip(p, x)), Fraction(0))


def add(x: Sequence[int], y: Sequence[int]) -> Bundle:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def sub(x: Sequence[int], y: Sequence[int]) -> Bundle:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def zeros(n: int) -> Bundle:
    return (0,) * n


def unit_vector(n: int, i: int) -> Bundle:
    return tuple(1 if k == i else 0 for k in range(n))


def content(v: Sequence[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for q in v:
        g = gcd(g, q)
    return g


def primitive(v: Sequence[int]) -> Bundle:
    g = content(v)
    if g == 0:
        raise ValueError("the zero vector has no primitive direction")
    return tuple(q // g for q in v)


def negate(v: Sequence[int]) -> Bundle:
    return tuple(-q for q in v)
