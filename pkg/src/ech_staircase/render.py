"""Decimal rendering of exact rational values at a chosen number of significant digits."""

from __future__ import annotations

from fractions import Fraction


def floor_log10(x: Fraction) -> int:
    """Largest e with 10**e <= x, for x > 0."""
    if x <= 0:
        raise ValueError("floor_log10 needs a positive value")
    e = len(str(x.numerator)) - len(str(x.denominator))
    while Fraction(10) ** (e + 1) <= x:
        e += 1
    while Fraction(10) ** e > x:
        e -= 1
    return e


def place_decimal(digits: str, e: int) -> str:
    """Lay out significant digits around the decimal point for exponent e.

    `digits` holds the significant digits of a value in [10**e, 10**(e+1)).
    """
    n = len(digits)
    if e >= n:
        return digits + "0" * (e + 1 - n)
    if e >= 0:
        head, tail = digits[: e + 1], digits[e + 1 :].rstrip("0")
        return head + "." + tail if tail else head
    if e >= -6:
        tail = ("0" * (-e - 1) + digits).rstrip("0")
        return "0." + tail if tail else "0"
    # very small magnitudes fall back to scientific form
    tail = digits[1:].rstrip("0")
    mant = digits[0] + ("." + tail if tail else "")
    return f"{mant}e{e}"


def decimal_str(x: Fraction | int, digits: int = 12) -> str:
    """Round x half-up to `digits` significant digits, rendered positionally."""
    x = Fraction(x)
    if digits < 1:
        raise ValueError("need at least one significant digit")
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    y = -x if x < 0 else x
    e = floor_log10(y)
    scaled = y * Fraction(10) ** (digits - 1 - e)
    m = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    if m >= 10**digits:
        m //= 10
        e += 1
    return sign + place_decimal(str(m), e)
