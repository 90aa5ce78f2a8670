"""
Quartic models v^2 = c4 u^4 + c3 u^3 + c2 u^2 + c1 u + c0 with a rational point.

A point (u0, v0) with v0 != 0 is moved to u = 0, where the constant term
becomes the square v0^2, and the classical quartic-to-cubic substitution
sends it to the point at infinity of a Weierstrass curve. The short model
obtained is y^2 = x^3 - (I/3) x - J/27 with I, J the invariants of the
quartic, so it does not depend on the base point chosen.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Sequence

from ..exceptions import DegenerateLocusError, OffCurveError, ValidationError, VerificationError
from .weierstrass import INFINITY, CurvePoint, WeierstrassCurve

logger = logging.getLogger(__name__)


def _exact(value):
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


class QuarticTransport:
    """
    Birational map between a quartic model and its short Weierstrass curve.

    Args:
        coefficients: (c0, c1, c2, c3, c4), ascending in u.
        base: (u0, v0) on the quartic with v0 != 0; it maps to infinity.
    """

    def __init__(self, coefficients: Sequence[Any], base: tuple):
        if len(coefficients) != 5:
            raise ValidationError(f"A quartic needs 5 coefficients, got {len(coefficients)}")
        self.coefficients = tuple(_exact(c) for c in coefficients)
        u0, v0 = (_exact(c) for c in base)
        if v0 ** 2 != self.evaluate(u0):
            raise OffCurveError(f"Base point ({u0}, {v0}) is not on the quartic")
        if v0 == 0:
            raise DegenerateLocusError(
                f"Base point ({u0}, 0) is a ramification point; the transport needs v0 != 0"
            )
        self.u0, self.q = u0, v0

        # coefficients of f(u0 + s) in s
        d = [
            sum(comb(j, k) * self.coefficients[j] * u0 ** (j - k) for j in range(k, 5))
            for k in range(5)
        ]
        self.d = d
        q = self.q
        self.a1 = d[1] / q
        self.a2 = d[2] - d[1] ** 2 / (4 * q ** 2)
        self.a3 = 2 * q * d[3]
        self.a4 = -4 * q ** 2 * d[4]
        self.a6 = self.a2 * self.a4
        self.b2 = self.a1 ** 2 + 4 * self.a2
        b4 = 2 * self.a4 + self.a1 * self.a3
        b6 = self.a3 ** 2 + 4 * self.a6
        c4 = self.b2 ** 2 - 24 * b4
        c6 = -self.b2 ** 3 + 36 * self.b2 * b4 - 216 * b6
        self.curve = WeierstrassCurve(-c4 / 48, -c6 / 864)

    def evaluate(self, u):
        c0, c1, c2, c3, c4 = self.coefficients
        return (((c4 * u + c3) * u + c2) * u + c1) * u + c0

    def contains(self, point: tuple) -> bool:
        u, v = point
        return v ** 2 == self.evaluate(u)

    def _to_short(self, x, y) -> CurvePoint:
        return CurvePoint(x + self.b2 / 12, y + (self.a1 * x + self.a3) / 2)

    def to_weierstrass(self, point: tuple) -> CurvePoint:
        """Image of (u, v) on the short Weierstrass curve."""
        u, v = (_exact(c) for c in point)
        if not self.contains((u, v)):
            raise OffCurveError(f"Point ({u}, {v}) is not on the quartic")
        q, d = self.q, self.d
        s = u - self.u0
        if s == 0:
            if v == q:
                return INFINITY
            # (u0, -v0)
            x = -d[2] + d[1] ** 2 / (4 * q ** 2)
            return self._to_short(x, self.a1 * self.a2 - self.a3)
        x = (2 * q * (v + q) + d[1] * s) / s ** 2
        y = (4 * q ** 2 * (v + q) + 2 * q * (d[1] * s + d[2] * s ** 2) - d[1] ** 2 * s ** 2 / (2 * q)) / s ** 3
        return self._to_short(x, y)

    def from_weierstrass(self, P: CurvePoint) -> tuple:
        """Preimage (u, v) of a point of the short Weierstrass curve."""
        if P.is_infinity:
            return (self.u0, self.q)
        q, d = self.q, self.d
        x = P.x - self.b2 / 12
        y = P.y - (self.a1 * x + self.a3) / 2
        if y == 0:
            raise DegenerateLocusError(
                f"Point {P} lies on the locus y = 0 where the inverse quartic map is undefined"
            )
        s = (2 * q * (x + d[2]) - d[1] ** 2 / (2 * q)) / y
        v = -q + s * (s * x - d[1]) / (2 * q)
        u = self.u0 + s
        if not self.contains((u, v)):
            raise VerificationError(f"Inverse transport left the quartic at {P}")
        return (u, v)


@dataclass(frozen=True)
class QuarticCurve:
    """y^2 = alpha x^4 + beta with alpha + beta = gamma^2."""
    alpha: Any
    beta: Any
    gamma: Any

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, _exact(getattr(self, name)))
        if self.alpha + self.beta != self.gamma ** 2:
            raise ValidationError("QuarticCurve requires alpha + beta = gamma^2")
        if self.alpha * self.beta == 0:
            raise ValidationError("QuarticCurve requires alpha * beta != 0")

    @property
    def coefficients(self) -> tuple:
        return (self.beta, 0, 0, 0, self.alpha)

    @property
    def rational_points(self) -> tuple:
        """The four points (+-1, +-gamma)."""
        g = self.gamma
        return ((1, g), (1, -g), (-1, g), (-1, -g))

    def contains(self, point: tuple) -> bool:
        x, y = point
        return y ** 2 == self.alpha * x ** 4 + self.beta

    def transport(self, origin: tuple) -> QuarticTransport:
        return QuarticTransport(self.coefficients, origin)

    def add(self, P: tuple, Q: tuple, origin: tuple) -> tuple:
        return quartic_group(self, origin, P, Q)

    def negate(self, P: tuple, origin: tuple) -> tuple:
        transport = self.transport(origin)
        return transport.from_weierstrass(transport.curve.negate(transport.to_weierstrass(P)))

    def multiply(self, P: tuple, m: int, origin: tuple) -> tuple:
        transport = self.transport(origin)
        image = transport.curve.multiply(transport.to_weierstrass(P), m)
        return transport.from_weierstrass(image)


def quartic_group(curve: QuarticCurve, origin: tuple, P: tuple, Q: tuple) -> tuple:
    """
    P + Q on the quartic with the given origin.

    The origin must be one of the four points (+-1, +-gamma). Both points are
    carried to the Weierstrass model, added there and carried back.
    """
    origin = tuple(_exact(c) for c in origin)
    if origin not in [tuple(_exact(c) for c in p) for p in curve.rational_points]:
        raise ValidationError(f"Origin {origin} is not one of (+-1, +-gamma)")
    transport = curve.transport(origin)
    total = transport.curve.add(transport.to_weierstrass(P), transport.to_weierstrass(Q))
    result = transport.from_weierstrass(total)
    logger.debug(f"Quartic sum computed with origin {origin}")
    return result
