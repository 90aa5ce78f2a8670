"""
Torsion over Q and torsion specializations of the (2,6,6,6) section.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from sympy import factorint, integer_nthroot

from ..arith.poly import Poly
from ..arith.ratfunc import RatFunc
from ..arith.rational import to_rational
from ..exceptions import ValidationError, VerificationError
from ..settings import Settings
from .division import division_polynomial
from .weierstrass import CurvePoint, WeierstrassCurve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorsionResult:
    is_torsion: bool
    order: Optional[int] = None

    def __str__(self):
        return f"torsion of order {self.order}" if self.is_torsion else "infinite order"


@dataclass(frozen=True)
class TorsionShape:
    label: str
    order: int


def is_torsion_over_Q(curve: WeierstrassCurve, P: CurvePoint) -> TorsionResult:
    """Order of P if it is at most 12 (Mazur's bound), otherwise infinite order."""
    curve.check(P)
    current = P
    for n in range(1, Settings.TORSION_BOUND + 1):
        if current.is_infinity:
            return TorsionResult(True, n)
        current = curve.add(current, P)
    return TorsionResult(False)


# ----------------------------------------------------------------------
# Classical torsion tables for j = 0 and j = 1728
# ----------------------------------------------------------------------
def _power_free(value, k: int) -> int:
    """Integer representative of a nonzero rational modulo k-th powers."""
    value = to_rational(value)
    if value == 0:
        raise ValidationError("Torsion tables need a nonzero constant")
    n = value.numerator * value.denominator ** (k - 1)
    sign = -1 if n < 0 else 1
    reduced = 1
    for p, e in factorint(abs(n)).items():
        reduced *= p ** (e % k)
    return sign * reduced


def _is_square(n: int) -> bool:
    return n >= 0 and integer_nthroot(n, 2)[1]


def _is_cube(n: int) -> bool:
    root, exact = integer_nthroot(abs(n), 3)
    return exact


def torsion_j0(D) -> TorsionShape:
    """Torsion subgroup of y^2 = x^3 + D over Q."""
    D = _power_free(D, 6)
    if D == 1:
        return TorsionShape("Z/6Z", 6)
    if D == -432:
        return TorsionShape("Z/3Z", 3)
    if _is_cube(D):
        return TorsionShape("Z/2Z", 2)
    if _is_square(D):
        return TorsionShape("Z/3Z", 3)
    return TorsionShape("trivial", 1)


def torsion_j1728(D) -> TorsionShape:
    """Torsion subgroup of y^2 = x^3 + D x over Q."""
    D = _power_free(D, 4)
    if D == 4:
        return TorsionShape("Z/4Z", 4)
    if _is_square(-D):
        return TorsionShape("Z/2Z x Z/2Z", 4)
    return TorsionShape("Z/2Z", 2)


def lemma_positive_rank(alpha, beta) -> bool:
    """
    True when y^2 = alpha x^4 + beta (alpha + beta a square) has torsion of
    order 2 only, so its four points (+-1, +-gamma) force positive rank.

    The quartic is birational to Y^2 = X(X^2 - 4 alpha beta).
    """
    return torsion_j1728(-4 * to_rational(alpha) * to_rational(beta)).order == 2


# ----------------------------------------------------------------------
# Torsion specializations of R on E: Y^2 = X^3 - 27a^2(at^6-b)^2(at^6+b)^2
# ----------------------------------------------------------------------
@dataclass
class TorsionSpecializationReport:
    a: Fraction
    b: Fraction
    buckets: dict = field(default_factory=dict)
    order6_possible: bool = False
    generic_nontorsion: bool = True

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.buckets.values())

    def to_dict(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "buckets": {str(k): [str(t) for t in v] for k, v in sorted(self.buckets.items())},
            "order6_possible": self.order6_possible,
            "generic_nontorsion": self.generic_nontorsion,
            "total": self.total,
        }


def curve_2666(a, b) -> tuple:
    """The Weierstrass model E over Q(t) and the section R."""
    a, b = to_rational(a), to_rational(b)
    if a == 0 or b == 0:
        raise ValidationError("a and b must be nonzero")
    t6 = Poly.monomial(1, 6)
    B = -27 * a ** 2 * (a * t6 - b) ** 2 * (a * t6 + b) ** 2
    curve = WeierstrassCurve(RatFunc(0), RatFunc(B))
    t12 = Poly.monomial(1, 12)
    X = RatFunc(3 * a ** 2 * t12 + b ** 2, Poly.monomial(1, 4))
    Y = RatFunc(b * (b ** 2 - 9 * a ** 2 * t12), Poly.monomial(1, 6))
    R = CurvePoint(X, Y)
    if not curve.contains(R):
        raise VerificationError("The section R does not satisfy the Weierstrass model")
    return curve, R


def rational_nth_roots(value: Fraction, m: int) -> list:
    """All rational r with r**m == value."""
    if value == 0:
        return [Fraction(0)]
    if m % 2 == 0 and value < 0:
        return []
    num, num_exact = integer_nthroot(abs(value.numerator), m)
    den, den_exact = integer_nthroot(value.denominator, m)
    if not (num_exact and den_exact):
        return []
    root = Fraction(int(num), int(den))
    if m % 2 == 0:
        return [-root, root]
    return [root if value > 0 else -root]


def rational_roots_in_t(f: Poly) -> list:
    """Rational roots of f, found through its deflation in t**m."""
    m, g = f.deflate()
    roots = set()
    for u0 in g.rational_roots():
        roots.update(rational_nth_roots(u0, m))
    return sorted(roots)


def is_sixth_power(f: Poly) -> bool:
    """True when f is the sixth power of a polynomial in Q[t]."""
    if f.is_zero():
        return True
    coeff, factors = f.sqf_list()
    if any(k % 6 for _, k in factors):
        return False
    return bool(rational_nth_roots(coeff, 6))


def torsion_specializations_2666(a, b) -> TorsionSpecializationReport:
    """
    Rational t0 != 0 where R specializes to a torsion point, bucketed by order.

    Orders 2, 3, 4 come from the numerators of y(R), psi_3(x(R)) and
    (psi_4/psi_2)(x(R)); each t0 lands in the smallest order it attains and is
    re-checked on the specialized curve. Order 6 would need the constant term
    of E to be a sixth power in Q(t).
    """
    a, b = to_rational(a), to_rational(b)
    curve, R = curve_2666(a, b)
    bad = Poly.monomial(a ** 2, 12) - b ** 2

    numerators = {
        2: R.y.num,
        3: division_polynomial(curve, 3)(R.x).num,
        4: division_polynomial(curve, 4)(R.x).num,
    }
    report = TorsionSpecializationReport(a=a, b=b)
    report.generic_nontorsion = not any(
        division_polynomial(curve, n)(R.x) == 0 for n in (2, 3, 4)
    )
    report.order6_possible = is_sixth_power(curve.B.num)

    seen = set()
    for order in (2, 3, 4):
        found = []
        for t0 in rational_roots_in_t(numerators[order]):
            if t0 == 0 or bad(t0) == 0 or t0 in seen:
                continue
            specialized = _specialize(curve, R, t0)
            result = is_torsion_over_Q(*specialized)
            if result.order != order:
                raise VerificationError(
                    f"t = {t0} was bucketed as order {order} but R has {result} there"
                )
            found.append(t0)
            seen.add(t0)
        report.buckets[order] = found
    logger.info(
        f"Torsion specializations for (a, b) = ({a}, {b}): {report.total} "
        f"(order 6 possible: {report.order6_possible})"
    )
    if report.total > 26:
        raise VerificationError(f"Found {report.total} torsion specializations, more than 26")
    return report


def _specialize(curve: WeierstrassCurve, P: CurvePoint, t0) -> tuple:
    return WeierstrassCurve(curve.A(t0), curve.B(t0)), CurvePoint(P.x(t0), P.y(t0))
