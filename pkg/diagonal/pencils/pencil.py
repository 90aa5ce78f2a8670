"""
Genus-one pencils on a x^2 + b y^(2p) = c z^(2q) + d w^(2r) from a split
L1 L2 - L3 L4 of the quadric, with (X, Y, Z, W) = (x, y^p, z^q, w^r).

The surface is the union over t of

    E1 = L3 - t L1 = 0,   E2 = t L4 - L2 = 0,

and eliminating x from these two linear equations leaves
A(t) y^p + B(t) z^q + C(t) w^r = 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from functools import reduce
from typing import Optional

from sympy import integer_nthroot

from ..arith.poly import Poly, integer_normalize
from ..arith.ratfunc import RatFunc
from ..arith.rational import to_rational
from ..elliptic.weierstrass import CurvePoint, WeierstrassCurve
from ..exceptions import DegenerateLocusError, ValidationError, VerificationError
from .split import QuadSplit

logger = logging.getLogger(__name__)

PENCIL_EXPONENTS = ((2, 3, 6), (2, 4, 4), (3, 3, 3))


@dataclass(frozen=True)
class PencilCurve:
    """
    A(t) y^p + B(t) z^q + C(t) w^r = 0. `rows` holds the coefficient rows of
    E1 and E2 in (x, Y, Z, W) and is needed to recover x.
    """
    A: Poly
    B: Poly
    C: Poly
    exponents: tuple
    rows: Optional[tuple] = None
    split: Optional[QuadSplit] = None

    def __post_init__(self):
        exponents = tuple(int(e) for e in self.exponents)
        if exponents not in PENCIL_EXPONENTS:
            raise ValidationError(f"Exponents {exponents} are not one of {PENCIL_EXPONENTS}")
        object.__setattr__(self, "exponents", exponents)

    def at(self, t0) -> tuple:
        t0 = to_rational(t0)
        return self.A(t0), self.B(t0), self.C(t0)

    def evaluate(self, t0, y, z, w) -> Fraction:
        A, B, C = self.at(t0)
        p, q, r = self.exponents
        return A * y ** p + B * z ** q + C * w ** r

    def recover_x(self, t0, y, z, w) -> Fraction:
        """x from whichever of E1, E2 has a nonzero x-coefficient at t0."""
        if self.rows is None:
            raise ValidationError("This pencil was not built from a split")
        t0 = to_rational(t0)
        p, q, r = self.exponents
        values = (Fraction(y) ** p, Fraction(z) ** q, Fraction(w) ** r)
        for row in self.rows:
            alpha = row[0](t0)
            if alpha != 0:
                return -sum(row[k + 1](t0) * v for k, v in enumerate(values)) / alpha
        raise DegenerateLocusError(f"x cannot be recovered at t = {t0}: both x-coefficients vanish")

    def surface_residual(self, x, y, z, w) -> Fraction:
        if self.split is None:
            raise ValidationError("This pencil was not built from a split")
        a, b, c, d = self.split.coefficients
        p, q, r = self.exponents
        return a * x ** 2 + b * y ** (2 * p) - c * z ** (2 * q) - d * w ** (2 * r)

    def __str__(self):
        p, q, r = self.exponents
        return f"({self.A}) y^{p} + ({self.B}) z^{q} + ({self.C}) w^{r} = 0"


def build_pencil(split: QuadSplit, exponents: tuple) -> PencilCurve:
    """Eliminate x between L3 = t L1 and t L4 = L2."""
    E1 = tuple(Poly([l3, -l1]) for l1, l3 in zip(split.L1, split.L3))
    E2 = tuple(Poly([-l2, l4]) for l2, l4 in zip(split.L2, split.L4))
    alpha1, alpha2 = E1[0], E2[0]
    if alpha1.is_zero() and alpha2.is_zero():
        raise ValidationError("Degenerate elimination: x does not occur in the pencil equations")
    raw = [alpha1 * E2[k] - alpha2 * E1[k] for k in (1, 2, 3)]
    if all(c.is_zero() for c in raw):
        raise ValidationError("Degenerate elimination: the pencil equations are proportional")
    (A, B, C), _ = integer_normalize(raw)
    curve = PencilCurve(A, B, C, exponents, rows=(E1, E2), split=split)
    logger.info(f"Pencil for {split.coefficients} with exponents {curve.exponents}: {curve}")
    return curve


# ----------------------------------------------------------------------
# (2,3,6): Weierstrass model
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class PencilWeierstrass:
    """
    Y^2 = X^3 - A^3 B^2 C with X = -A B z / w^2, Y = A^2 B y / w^3.
    """
    pencil: PencilCurve
    curve: WeierstrassCurve

    def to_weierstrass(self, t0, y, z, w) -> tuple:
        """Specialized curve at t0 and the image of (y, z, w)."""
        A, B, C = self.pencil.at(t0)
        w = to_rational(w)
        if w == 0:
            raise DegenerateLocusError("w = 0 has no image on the Weierstrass model")
        curve = WeierstrassCurve(0, -(A ** 3) * B ** 2 * C)
        image = CurvePoint(-A * B * to_rational(z) / w ** 2, A ** 2 * B * to_rational(y) / w ** 3)
        return curve, image

    def from_weierstrass(self, t0, P: CurvePoint) -> tuple:
        """(y, z, w) with w = 1 for an affine point of the specialized curve."""
        A, B, _ = self.pencil.at(t0)
        if P.is_infinity or A * B == 0:
            raise DegenerateLocusError(f"No preimage of {P} at t = {t0}")
        return P.y / (A ** 2 * B), -P.x / (A * B), Fraction(1)


def weierstrass_236(pencil: PencilCurve) -> PencilWeierstrass:
    if pencil.exponents != (2, 3, 6):
        raise ValidationError(f"Weierstrass reduction needs exponents (2,3,6), got {pencil.exponents}")
    A, B, C = (RatFunc(f) for f in (pencil.A, pencil.B, pencil.C))
    curve = WeierstrassCurve(RatFunc(0), -(A ** 3) * B ** 2 * C)
    logger.debug(f"(2,3,6) pencil model: Y^2 = X^3 + {curve.B}")
    return PencilWeierstrass(pencil, curve)


# ----------------------------------------------------------------------
# Height-bounded points on a member
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class PointSearch:
    t0: Fraction
    height: int
    points: tuple
    degenerate: bool


def _integer_coefficients(values) -> tuple:
    den = reduce(lcm, [v.denominator for v in values], 1)
    return tuple(int(v * den) for v in values)


def _roots(value: int, r: int) -> list:
    """Integer w with w^r == value."""
    if value == 0:
        return [0]
    if r % 2 == 0 and value < 0:
        return []
    root, exact = integer_nthroot(abs(value), r)
    if not exact:
        return []
    root = int(root)
    if r % 2 == 0:
        return [root, -root]
    return [root if value > 0 else -root]


def cubic_point_search(curve: PencilCurve, t0, height: int) -> PointSearch:
    """
    Primitive (y, z, w) in [-height, height]^3 on the member at t0.

    For (3,3,3) only the representative with first nonzero entry positive is
    kept. A member with a vanishing coefficient is flagged degenerate.
    """
    if height < 1:
        raise ValidationError(f"Height must be positive, got {height}")
    t0 = to_rational(t0)
    A, B, C = _integer_coefficients(curve.at(t0))
    p, q, r = curve.exponents
    degenerate = 0 in (A, B, C)
    if degenerate:
        logger.warning(f"Pencil member at t = {t0} has a vanishing coefficient")

    points = set()
    rng = range(-height, height + 1)
    for y in rng:
        for z in rng:
            partial = A * y ** p + B * z ** q
            if C == 0:
                ws = list(rng) if partial == 0 else []
            elif partial % C:
                continue
            else:
                ws = [w for w in _roots(-partial // C, r) if abs(w) <= height]
            for w in ws:
                if reduce(gcd, (y, z, w)) != 1:
                    continue
                if curve.exponents == (3, 3, 3):
                    first = next(v for v in (y, z, w) if v)
                    if first < 0:
                        continue
                points.add((y, z, w))
    result = PointSearch(t0, height, tuple(sorted(points)), degenerate)
    logger.debug(f"Member t = {t0}: {len(result.points)} points up to height {height}")
    return result


def verify_recovered(curve: PencilCurve, t0, point: tuple) -> Fraction:
    """x for a point of the member at t0, checked on the surface."""
    y, z, w = point
    if curve.evaluate(t0, y, z, w) != 0:
        raise VerificationError(f"{point} is not on the member at t = {t0}")
    x = curve.recover_x(t0, y, z, w)
    residual = curve.surface_residual(x, y, z, w)
    if residual != 0:
        raise VerificationError(f"Recovered x = {x} misses the surface", residual=residual)
    return x
