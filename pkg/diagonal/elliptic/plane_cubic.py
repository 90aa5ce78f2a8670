"""
Diagonal plane cubics c1*y^3 + c2*z^3 + c3*w^3 = 0 with the chord-tangent law.

Points are projective triples over an integral domain (ints or Polys in t).
Only ring operations are used, so triples over Q[t] stay polynomial; every
result is brought to a primitive representative.
"""

import logging
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Any, Optional, Sequence

from ..arith.poly import Poly, integer_normalize, poly_gcd_list
from ..exceptions import DegenerateLocusError, OffCurveError, ValidationError

logger = logging.getLogger(__name__)


def cross(P: Sequence, Q: Sequence) -> tuple:
    return (
        P[1] * Q[2] - P[2] * Q[1],
        P[2] * Q[0] - P[0] * Q[2],
        P[0] * Q[1] - P[1] * Q[0],
    )


def _is_zero(value) -> bool:
    return value == 0


def primitive_triple(P: Sequence) -> tuple:
    """
    Canonical representative of a projective triple.

    Polynomial triples are divided by their gcd and integer content; rational
    triples become coprime integers. The first nonzero entry is made positive
    (leading coefficient positive for polynomials).
    """
    if all(_is_zero(c) for c in P):
        raise DegenerateLocusError("The zero triple is not a projective point")
    if any(isinstance(c, Poly) for c in P):
        polys = [c if isinstance(c, Poly) else Poly([c]) for c in P]
        g = poly_gcd_list(polys)
        polys = [p.exact_div(g) for p in polys]
        normalized, _ = integer_normalize(polys)
        return tuple(normalized)
    values = [Fraction(c) for c in P]
    den = reduce(lcm, [v.denominator for v in values])
    ints = [int(v * den) for v in values]
    g = reduce(gcd, ints)
    ints = [i // g for i in ints]
    first = next(i for i in ints if i)
    if first < 0:
        ints = [-i for i in ints]
    return tuple(ints)


class DiagonalCubic:
    """
    The cubic c1*y^3 + c2*z^3 + c3*w^3 = 0.

    Args:
        coefficients: (c1, c2, c3), all nonzero (ints, Fractions or Polys).
    """

    def __init__(self, coefficients: Sequence[Any]):
        if len(coefficients) != 3:
            raise ValidationError("A diagonal cubic needs three coefficients")
        if any(_is_zero(c) for c in coefficients):
            raise ValidationError(f"Diagonal cubic {tuple(coefficients)} has a zero coefficient")
        self.coefficients = tuple(coefficients)

    def evaluate(self, P: Sequence):
        c = self.coefficients
        return c[0] * P[0] ** 3 + c[1] * P[1] ** 3 + c[2] * P[2] ** 3

    def contains(self, P: Sequence) -> bool:
        return _is_zero(self.evaluate(P))

    def check(self, P: Sequence) -> None:
        if not self.contains(P):
            raise OffCurveError(f"Point {tuple(map(str, P))} is not on the cubic")

    @staticmethod
    def same_point(P: Sequence, Q: Sequence) -> bool:
        return all(_is_zero(c) for c in cross(P, Q))

    def _mixed(self, P: Sequence, Q: Sequence):
        # sum c_i P_i^2 Q_i
        c = self.coefficients
        return c[0] * P[0] ** 2 * Q[0] + c[1] * P[1] ** 2 * Q[1] + c[2] * P[2] ** 2 * Q[2]

    def tangent_point(self, P: Sequence) -> tuple:
        """Third intersection of the tangent line at P."""
        c = self.coefficients
        g = [c[i] * P[i] ** 2 for i in range(3)]
        candidates = [(g[1], -g[0], 0), (0, g[2], -g[1]), (g[2], 0, -g[0])]
        for D in candidates:
            if all(_is_zero(x) for x in D) or self.same_point(D, P):
                continue
            FD = self.evaluate(D)
            S = c[0] * P[0] * D[0] ** 2 + c[1] * P[1] * D[1] ** 2 + c[2] * P[2] * D[2] ** 2
            R = tuple(FD * P[i] - 3 * S * D[i] for i in range(3))
            if all(_is_zero(x) for x in R):
                raise DegenerateLocusError(f"Tangent line at {tuple(map(str, P))} lies in the cubic")
            return primitive_triple(R)
        raise DegenerateLocusError(f"No tangent direction at {tuple(map(str, P))}")

    def third_point(self, P: Sequence, Q: Sequence) -> tuple:
        """Third intersection of the line PQ (tangent when P = Q)."""
        if self.same_point(P, Q):
            return self.tangent_point(P)
        a = self._mixed(Q, P)
        b = self._mixed(P, Q)
        R = tuple(a * P[i] - b * Q[i] for i in range(3))
        if all(_is_zero(x) for x in R):
            raise DegenerateLocusError("Chord meets the cubic in a degenerate way")
        return primitive_triple(R)

    def add(self, P: Sequence, Q: Sequence, origin: Sequence) -> tuple:
        """P + Q = O*(P*Q) for the group with identity `origin`."""
        if self.same_point(P, origin):
            return primitive_triple(Q)
        if self.same_point(Q, origin):
            return primitive_triple(P)
        return self.third_point(origin, self.third_point(P, Q))

    def negate(self, P: Sequence, origin: Sequence) -> tuple:
        return self.third_point(P, self.tangent_point(origin))

    def multiply(self, P: Sequence, m: int, origin: Sequence) -> tuple:
        """m*P by double-and-add."""
        if m < 0:
            return self.multiply(self.negate(P, origin), -m, origin)
        result, addend = primitive_triple(origin), primitive_triple(P)
        while m:
            if m & 1:
                result = self.add(result, addend, origin)
            m >>= 1
            if m:
                addend = self.add(addend, addend, origin)
        return result

    def point_order(self, P: Sequence, origin: Sequence, bound: int = 12) -> Optional[int]:
        """Smallest k <= bound with k*P = origin, or None."""
        current = primitive_triple(P)
        for k in range(1, bound + 1):
            if self.same_point(current, origin):
                return k
            current = self.add(current, P, origin)
            logger.debug(f"Computed multiple {k + 1} of {tuple(map(str, P))}")
        return None
