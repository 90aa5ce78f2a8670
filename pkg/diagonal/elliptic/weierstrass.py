"""
Short Weierstrass curves y^2 = x^3 + A x + B and their chord-tangent law.

The field is implicit in the coordinates: Fractions give curves over Q,
RatFuncs give curves over Q(t). Nothing here inspects the type.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from ..exceptions import OffCurveError, SingularCurveError, ValidationError

logger = logging.getLogger(__name__)


def _exact(value):
    # ints would turn into floats under true division
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y), or the point at infinity when both are None."""
    x: Optional[Any] = None
    y: Optional[Any] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValidationError("A curve point needs both coordinates or neither")
        object.__setattr__(self, "x", _exact(self.x))
        object.__setattr__(self, "y", _exact(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


INFINITY = CurvePoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    A: Any
    B: Any

    def __post_init__(self):
        object.__setattr__(self, "A", _exact(self.A))
        object.__setattr__(self, "B", _exact(self.B))
        if self.discriminant == 0:
            raise SingularCurveError(f"y^2 = x^3 + ({self.A})x + ({self.B}) is singular")

    @property
    def discriminant(self):
        return -16 * (4 * self.A ** 3 + 27 * self.B ** 2)

    def rhs(self, x):
        return x ** 3 + self.A * x + self.B

    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        return P.y ** 2 == self.rhs(P.x)

    def check(self, P: CurvePoint) -> None:
        if not self.contains(P):
            raise OffCurveError(f"Point {P} is not on y^2 = x^3 + ({self.A})x + ({self.B})")

    def negate(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        return CurvePoint(P.x, -P.y)

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        """Chord-tangent sum without membership checks."""
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if P.y == -Q.y:
                return INFINITY
            slope = (3 * P.x ** 2 + self.A) / (2 * P.y)
        else:
            slope = (Q.y - P.y) / (Q.x - P.x)
        x3 = slope ** 2 - P.x - Q.x
        y3 = slope * (P.x - x3) - P.y
        return CurvePoint(x3, y3)

    def multiply(self, P: CurvePoint, m: int) -> CurvePoint:
        """m*P by double-and-add; negative m uses -P."""
        if m < 0:
            return self.multiply(self.negate(P), -m)
        result, addend = INFINITY, P
        while m:
            if m & 1:
                result = self.add(result, addend)
            m >>= 1
            if m:
                addend = self.add(addend, addend)
        return result


def ec_add(curve: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """P + Q on the curve; both inputs must lie on it."""
    curve.check(P)
    curve.check(Q)
    return curve.add(P, Q)


def ec_multiply(curve: WeierstrassCurve, P: CurvePoint, m: int) -> CurvePoint:
    """m*P for m >= 0."""
    if m < 0:
        raise ValidationError(f"Multiplier must be non-negative, got {m}")
    curve.check(P)
    return curve.multiply(P, m)
