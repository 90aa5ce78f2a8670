"""
The surface a(p^4 - 1) = b(q^4 - r^2) and the cone over it,

    a(y1^4 - f1(X)^4) = b(y2^4 - f2(X)^2),  deg f2 = 2 deg f1 + 1.

The surface is covered by the conics (a + b u^4) p^2 - 2b u^2 q^2 = a - b u^4,
r = u^2 (p^2 + 1) - q^2, each passing through (p, q) = (1, u).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..arith.rational import to_rational
from ..exceptions import DegenerateLocusError, ErratumError, ValidationError, VerificationError
from .form import Form

logger = logging.getLogger(__name__)


def del_pezzo_residual(a, b, p, q, r) -> Fraction:
    return a * (p ** 4 - 1) - b * (q ** 4 - r ** 2)


def _coerce(*values) -> list:
    return [to_rational(v) for v in values]


def _denominator(a, b, u, v) -> Fraction:
    d = b * u ** 2 * (u ** 2 - 2 * v ** 2) + a
    if d == 0:
        raise DegenerateLocusError(f"b u^2 (u^2 - 2v^2) + a vanishes at (u, v) = ({u}, {v})")
    return d


def unirational_map(a, b, u, v) -> tuple:
    """
    (p, q, r) = (g1, g2, u^2(g1^2 + 1) - g2^2) from the closed formulas.

    A nonzero residual raises ErratumError carrying the residual.
    """
    a, b, u, v = _coerce(a, b, u, v)
    d = _denominator(a, b, u, v)
    p = (b * u ** 2 * (u ** 2 - 4 * u * v + 2 * v ** 2) + a) / d
    q = (b * u ** 2 * (u ** 3 - 2 * u ** 2 * v + 2 * u * v ** 2) + a * (u - 2 * v)) / d
    r = u ** 2 * (p ** 2 + 1) - q ** 2
    residual = del_pezzo_residual(a, b, p, q, r)
    if residual != 0:
        logger.warning(f"Closed-form map misses the surface at (a,b,u,v)=({a},{b},{u},{v})")
        raise ErratumError(f"Closed-form map leaves residual {residual}", residual=residual)
    return p, q, r


def line_construction_map(a, b, u, v) -> tuple:
    """
    Second intersection of the line p = 1 + l, q = u + v l with the conic
    through (1, u), lifted to the surface.
    """
    a, b, u, v = _coerce(a, b, u, v)
    leading = a + b * u ** 4 - 2 * b * u ** 2 * v ** 2
    if leading == 0:
        raise DegenerateLocusError(f"Line of slope {v} meets the conic only at (1, {u})")
    l = -2 * (a + b * u ** 4 - 2 * b * u ** 3 * v) / leading
    p = 1 + l
    q = u + v * l
    r = u ** 2 * (p ** 2 + 1) - q ** 2
    residual = del_pezzo_residual(a, b, p, q, r)
    if residual != 0:
        raise VerificationError(f"Line construction left the surface at ({u}, {v})", residual=residual)
    return p, q, r


def del_pezzo_point(a, b, u, v) -> tuple:
    """The closed-form map, falling back to the line construction on an erratum."""
    try:
        return unirational_map(a, b, u, v)
    except ErratumError as e:
        logger.warning(f"Falling back to the line construction: {e}")
        return line_construction_map(a, b, u, v)


@dataclass(frozen=True)
class ConePoint:
    y1: Fraction
    y2: Fraction
    X: tuple


def cone_residual(a, b, f1, f2, y1, y2, X: Sequence) -> Fraction:
    return a * (y1 ** 4 - f1.evaluate(X) ** 4) - b * (y2 ** 4 - f2.evaluate(X) ** 2)


def cone_lift(a, b, f1: Form, f2: Form, w: Sequence, point: tuple) -> ConePoint:
    """
    Lift (p, q, r) on the surface to the cone with x_i = w_i x_1:

        x1 = f1(1,w)^2 / f2(1,w) * r,  y1 = p f1(1,w) x1^m,  y2 = q f1(1,w) x1^m.
    """
    m = f1.degree
    if f2.degree != 2 * m + 1:
        raise ValidationError(f"Need deg f2 = 2 deg f1 + 1, got {f1.degree} and {f2.degree}")
    if f1.variables != f2.variables or len(w) != f1.variables - 1:
        raise ValidationError(f"Expected {f1.variables - 1} w-parameters, got {len(w)}")
    a, b = _coerce(a, b)
    p, q, r = _coerce(*point)
    if del_pezzo_residual(a, b, p, q, r) != 0:
        raise ValidationError(f"({p}, {q}, {r}) is not on a(p^4 - 1) = b(q^4 - r^2)")

    base = (Fraction(1), *_coerce(*w))
    g1, g2 = f1.evaluate(base), f2.evaluate(base)
    if g2 == 0:
        raise DegenerateLocusError(f"f2(1, w) vanishes at w = {tuple(w)}")
    x1 = g1 ** 2 / g2 * r
    if x1 == 0:
        raise DegenerateLocusError("Lift is the vertex of the cone (x1 = 0)")
    X = tuple(c * x1 for c in base)
    lifted = ConePoint(y1=p * g1 * x1 ** m, y2=q * g1 * x1 ** m, X=X)
    residual = cone_residual(a, b, f1, f2, lifted.y1, lifted.y2, X)
    if residual != 0:
        raise VerificationError("Lifted point misses the cone", residual=residual)
    logger.info(f"Lifted ({p}, {q}, {r}) to y1={lifted.y1}, y2={lifted.y2}, X={X}")
    return lifted
