"""Exact rational scalars.

Everything in this library computes over Q with ``fractions.Fraction``;
nothing is ever rounded. These helpers pin the one serialization convention
used by the JSON interfaces: ``"p/q"``, or just ``"p"`` when the denominator
is 1.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SchemaError

Scalar = Fraction


def as_scalar(value) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise SchemaError("scalar", f"cannot interpret {value!r} as an exact rational")


def parse_scalar(text: str) -> Fraction:
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError("scalar", f"bad rational literal {text!r}") from exc
    raise SchemaError("scalar", f"bad rational literal {text!r}")


def format_scalar(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
