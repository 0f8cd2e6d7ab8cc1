"""Exact number helpers on top of int and fractions.Fraction.

Python ints are arbitrary precision, and Fraction keeps every value reduced
with a positive denominator, which is exactly the canonical form the rest of
this package relies on. What the stdlib does not provide is deterministic
fixed-point rendering, so that lives here.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["rat", "to_decimal"]


def rat(num, den=1) -> Fraction:
    """Canonical reduced fraction num/den; the sign ends up on the numerator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def to_decimal(value, digits: int) -> str:
    """Fixed-point rendering with exactly `digits` fractional places.

    Ties round half away from zero: 0.125 -> "0.13" at two places, and
    -0.125 -> "-0.13". No floats are involved, so the output is bit-stable
    across platforms.
    """
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    value = Fraction(value)
    scale = 10**digits
    units, rem = divmod(abs(value.numerator) * scale, value.denominator)
    if 2 * rem >= value.denominator:
        units += 1
    sign = "-" if value.numerator < 0 else ""
    return f"{sign}{units // scale}.{units % scale:0{digits}d}"
