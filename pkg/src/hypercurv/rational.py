"""Exact rational plumbing: coercion and display of Fractions."""

from __future__ import annotations

from fractions import Fraction

from .errors import AlphaOutOfRange

# Floats are snapped to the closest rational with denominator below this
# cap, so 0.1 becomes 1/10 and every run is reproducible.
MAX_FLOAT_DENOMINATOR = 2**32


def as_fraction(value) -> Fraction:
    """Coerce ints, 'p/q' strings, floats, and Fractions to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return Fraction(value).limit_denominator(MAX_FLOAT_DENOMINATOR)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def as_alpha(value) -> Fraction:
    """Coerce and range-check a laziness parameter."""
    alpha = as_fraction(value)
    if alpha < 0 or alpha > 1:
        raise AlphaOutOfRange(f"alpha must be in [0, 1], got {alpha}")
    return alpha


def format_number(x, exact: bool = True) -> str:
    """Render a number for reports: 'p/q' in exact mode, decimal otherwise."""
    if exact and isinstance(x, Fraction):
        return str(x)
    return repr(float(x))
