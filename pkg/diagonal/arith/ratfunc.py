"""
Rational functions in Q(t), kept in lowest terms with a monic denominator.

A RatFunc behaves as a field element: it mixes freely with ints, Fractions
and Polys, so the elliptic-curve code written against Fractions runs over
Q(t) unchanged.
"""

from fractions import Fraction

from ..exceptions import ValidationError
from .poly import Poly, poly_gcd
from .rational import to_rational


class RatFunc:
    """
    num / den with gcd(num, den) = 1 and den monic.

    Args:
        num: numerator (Poly, int or Fraction).
        den: denominator, nonzero (Poly, int or Fraction). Defaults to 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        self.num = num / lc
        self.den = den / lc

    @classmethod
    def coerce(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        return cls(value)

    # ------------------------------------------------------------------
    # Field operations
    # ------------------------------------------------------------------
    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return _raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValidationError(f"RatFunc exponent must be an int, got {n!r}")
        if n < 0:
            return self.inverse() ** (-n)
        # lowest terms are preserved by powers
        return _raw(self.num ** n, self.den ** n)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValidationError(f"{self} is not a polynomial")
        return self.num

    def __call__(self, t0) -> Fraction:
        """Value at t0; raises ZeroDivisionError at a pole."""
        t0 = to_rational(t0)
        d = self.den(t0)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at t = {t0}")
        return self.num(t0) / d

    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly([value])


def _raw(num: Poly, den: Poly) -> RatFunc:
    """Build without renormalizing; caller guarantees the invariants."""
    r = RatFunc.__new__(RatFunc)
    r.num, r.den = num, den
    return r


def _coerce_or_none(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return _raw(value, Poly([1]))
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return _raw(Poly([value]), Poly([1]))
    return None
