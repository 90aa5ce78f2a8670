"""
Rational scalars.

Scalars are ``fractions.Fraction`` everywhere in the package. This module
holds the coercion and text format shared by the polynomial layer, the
solution files and the CLI.
"""

from fractions import Fraction
from typing import Union

from ..exceptions import ValidationError

RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected: every value in this package is exact.
    """
    if isinstance(value, bool):
        raise ValidationError(f"Not a rational value: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"Invalid rational literal {value!r}: {e}")
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        # sympy / gmpy rationals
        return Fraction(int(value.numerator), int(value.denominator))
    raise ValidationError(f"Not a rational value: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_to_json(value: Fraction):
    """JSON form: a plain integer when integral, otherwise the "p/q" string."""
    value = to_rational(value)
    if value.denominator == 1:
        return value.numerator
    return format_rational(value)


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma separated list such as "1,1,2,2" or "1/2,3"."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValidationError(f"Empty rational list: {text!r}")
    return [to_rational(p) for p in parts]
