"""
Fibrations with a degree-12 exponent.

(2,4,6,12): x = -y^2 + t^6(z^3 + w^6) turns the equation into

    2at^6 y^2 = (at^12 - b) z^3 + (at^12 + b) w^6

and the doubling of the point (z, w, y) = (1, 1, t^3) is iterated through
an explicit recurrence.

(2,6,4,12) and (2,12,4,6) give fibres with j = 0 that are moved to
Y^2 = X^3 + c and handled by the Weierstrass group law:

    (at^12 - b) z^2 = -2at^6 y^3 - (at^12 + b) w^6,   x = y^3 + t^6(z^2 + w^6)
    (at^12 - b) z^2 = (at^12 + b) w^3 + 2at^6 y^6,    x = -y^6 + t^6(z^2 - w^3)

with base points (y, z, w) = (-t^2, 1, 1) and (t, 1, -1). Their solutions
are not coprime in general; the common factor is reported.
"""

import logging
from dataclasses import dataclass

from ..arith.poly import T, Poly
from ..arith.ratfunc import RatFunc
from ..elliptic.weierstrass import CurvePoint, WeierstrassCurve
from ..exceptions import DegenerateLocusError, VerificationError
from .base import assemble_solution, check_parameters
from .equation import DiagonalEquation, ParametricSolution

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# (2,4,6,12): duplication recurrence
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class DuplicationStep:
    """One doubling: `raw` straight from the recurrence, `point` after the t-power division."""
    index: int
    source: tuple
    raw: tuple
    point: tuple


def _on_fibre_24612(a, b, point: tuple) -> bool:
    z, w, y = point
    A = Poly.monomial(a, 12) - b
    B = Poly.monomial(a, 12) + b
    return (2 * a * T ** 6 * y ** 2 - A * z ** 3 - B * w ** 6).is_zero()


def duplication_steps_24612(a, b, n: int) -> list:
    """
    Iterate the doubling recurrence on (z, w, y) n times from (1, 1, t^3).

    After a step with t^2 || z and t^7 || w the next raw output is divisible
    by (t^8, t^4, t^12), which is the weighted scaling by t^-4.
    """
    a, b = check_parameters(a, b, n)
    A = Poly.monomial(a, 12) - b
    B = Poly.monomial(a, 12) + b
    point = (Poly([1]), Poly([1]), T ** 3)
    steps = []
    for index in range(1, n + 1):
        z, w, y = point
        z3, w6 = z ** 3, w ** 6
        raw = (
            2 * a * T ** 2 * z * (A * z3 - 8 * B * w6),
            4 * a * T ** 4 * w * y,
            2 * a * (-(A ** 2) * z3 ** 2 - 20 * A * B * z3 * w6 + 8 * B ** 2 * w6 ** 2),
        )
        if z.valuation() == 2 and w.valuation() == 7:
            normalized = (raw[0].shift(-8), raw[1].shift(-4), raw[2].shift(-12))
        else:
            normalized = raw
        if not _on_fibre_24612(a, b, normalized):
            raise VerificationError(f"Doubling step {index} left the (2,4,6,12) fibre")
        logger.debug(f"Doubling step {index}: degrees {[f.degree for f in normalized]}")
        steps.append(DuplicationStep(index, point, raw, normalized))
        point = normalized
    return steps


def gen_24612(a, b, n: int = 1) -> ParametricSolution:
    """The n-th doubling of (1, 1, t^3) pulled back to a coprime solution."""
    a, b = check_parameters(a, b, n)
    z, w, y = duplication_steps_24612(a, b, n)[-1].point
    return assemble_solution(
        DiagonalEquation(a, b, (2, 4, 6, 12)),
        (y, z, w),
        (3, 2, 1),
        lambda y, z, w: -y ** 2 + T ** 6 * (z ** 3 + w ** 6),
        generator="24612",
        multiple=n,
    )


# ----------------------------------------------------------------------
# (2,6,4,12) and (2,12,4,6): j = 0 fibres
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class J0Fibre:
    """
    Fibre c_z Z^2 = c_v V^3 + c_0 in affine coordinates (V, Z), mapped to
    Y^2 = X^3 + k with X = rho V, Y = rho Z, rho = c_v / c_z.
    """
    c_z: RatFunc
    c_v: RatFunc
    c_0: RatFunc

    @property
    def rho(self) -> RatFunc:
        return self.c_v / self.c_z

    @property
    def curve(self) -> WeierstrassCurve:
        return WeierstrassCurve(RatFunc(0), self.rho ** 2 * self.c_0 / self.c_z)

    def to_weierstrass(self, V, Z) -> CurvePoint:
        return CurvePoint(self.rho * V, self.rho * Z)

    def from_weierstrass(self, P: CurvePoint) -> tuple:
        if P.is_infinity:
            raise DegenerateLocusError("Multiple is the identity of the fibre")
        return P.x / self.rho, P.y / self.rho


def _pull_back_j0(fibre: J0Fibre, base: tuple, m: int) -> tuple:
    curve = fibre.curve
    Q = fibre.to_weierstrass(*base)
    curve.check(Q)
    return fibre.from_weierstrass(curve.multiply(Q, m))


def gen_26412(a, b, m: int = 2) -> ParametricSolution:
    """
    m-th multiple of (y, z, w) = (-t^2, 1, 1) on the (2,6,4,12) fibre.

    Affine chart w = 1 with V = y/w^2, Z = z/w^3.
    """
    a, b = check_parameters(a, b, m, minimum=2)
    t12 = RatFunc(Poly.monomial(a, 12))
    fibre = J0Fibre(c_z=t12 - b, c_v=RatFunc(Poly.monomial(-2 * a, 6)), c_0=-(t12 + b))
    V, Z = _pull_back_j0(fibre, (RatFunc(-(T ** 2)), RatFunc(1)), m)
    return assemble_solution(
        DiagonalEquation(a, b, (2, 6, 4, 12)),
        (V, Z, 1),
        (2, 3, 1),
        lambda y, z, w: y ** 3 + T ** 6 * (z ** 2 + w ** 6),
        generator="26412",
        multiple=m,
    )


def gen_21246(a, b, m: int = 2) -> ParametricSolution:
    """
    m-th multiple of (y, z, w) = (t, 1, -1) on the (2,12,4,6) fibre.

    Affine chart y = 1 with V = w/y^2, Z = z/y^3.
    """
    a, b = check_parameters(a, b, m, minimum=2)
    t12 = RatFunc(Poly.monomial(a, 12))
    fibre = J0Fibre(c_z=t12 - b, c_v=t12 + b, c_0=RatFunc(Poly.monomial(2 * a, 6)))
    t = RatFunc(T)
    V, Z = _pull_back_j0(fibre, (-1 / t ** 2, 1 / t ** 3), m)
    return assemble_solution(
        DiagonalEquation(a, b, (2, 12, 4, 6)),
        (1, Z, V),
        (1, 3, 2),
        lambda y, z, w: -y ** 6 + T ** 6 * (z ** 2 - w ** 3),
        generator="21246",
        multiple=m,
    )
