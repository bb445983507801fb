"""Exact rational arithmetic backend.

Every quantity in this package (coordinates, areas, lengths, grid steps) is
an exact rational.  gmpy2.mpq is used when available because it is several
times faster than fractions.Fraction on the clipping hot path; both backends
keep values gcd-reduced with a positive denominator, so results are identical.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def rational(num, den=None):
        if den is None:
            if isinstance(num, str):
                return _from_string(num)
            return _mpq(num)
        return _mpq(num, den)

    RationalBackend = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    def rational(num, den=None):
        if den is None:
            if isinstance(num, str):
                return _from_string(num)
            return Fraction(num)
        return Fraction(num, den)

    RationalBackend = "fractions"

ZERO = rational(0)
ONE = rational(1)
TWO = rational(2)


def _from_string(text):
    """Parse 'p/q', an integer literal, or a plain decimal like '0.25'."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return rational(int(num), int(den))
    if "." in text or "e" in text or "E" in text:
        # Fraction handles decimal and scientific notation exactly.
        return rational(Fraction(text))
    return rational(int(text))


def parse_rational(text):
    """Public alias for string parsing, raising ValueError on junk."""
    try:
        return _from_string(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value):
    """Render as 'p' or 'p/q'."""
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def format_decimal(value, digits):
    """Exact round-half-even decimal rendering with `digits` fractional digits."""
    if digits < 0:
        raise ValueError("digits must be >= 0")
    num, den = int(value.numerator), int(value.denominator)
    sign = "-" if num < 0 else ""
    num = abs(num)
    scaled = num * 10**digits
    quo, rem = divmod(scaled, den)
    # round half to even
    if 2 * rem > den or (2 * rem == den and quo % 2 == 1):
        quo += 1
    if digits == 0:
        return f"{sign}{quo}"
    text = str(quo).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def as_float(value):
    return value.numerator / value.denominator
