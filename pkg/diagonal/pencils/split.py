"""
Splitting a X^2 + b Y^2 - c Z^2 - d W^2 (abcd a nonzero square) as
L1 L2 - L3 L4 up to a scalar mu.

From an isotropic P0 a second isotropic Q0 with B(P0, Q0) != 0 is built;
the plane they span is a hyperbolic plane and its orthogonal complement is
a binary form whose discriminant is a square, so it factors over Q.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Optional, Sequence

from sympy import Matrix, Rational, integer_nthroot

from ..arith.rational import to_rational
from ..elliptic.torsion import rational_nth_roots
from ..exceptions import SplitError, VerificationError

logger = logging.getLogger(__name__)


def _fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _sympy(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def _primitive_with_scale(vector: Sequence[Fraction]) -> tuple:
    """(v', c) with v = c * v' and v' a primitive integer vector."""
    den = reduce(lcm, [c.denominator for c in vector], 1)
    ints = [int(c * den) for c in vector]
    g = reduce(gcd, [abs(i) for i in ints], 0)
    if g == 0:
        raise SplitError("A linear form of the split vanished")
    return tuple(i // g for i in ints), Fraction(g, den)


@dataclass(frozen=True)
class QuadSplit:
    """L1 L2 - L3 L4 = mu (a X^2 + b Y^2 - c Z^2 - d W^2), forms as integer 4-vectors."""
    coefficients: tuple
    L1: tuple
    L2: tuple
    L3: tuple
    L4: tuple
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(to_rational(c) for c in self.coefficients))
        for name in ("L1", "L2", "L3", "L4"):
            object.__setattr__(self, name, tuple(to_rational(c) for c in getattr(self, name)))
        object.__setattr__(self, "mu", to_rational(self.mu))
        if self.mu == 0:
            raise SplitError("mu must be nonzero")
        verify_split(self)

    @property
    def diagonal(self) -> tuple:
        a, b, c, d = self.coefficients
        return (a, b, -c, -d)


def _split_residual(split: QuadSplit) -> list:
    residual = []
    L1, L2, L3, L4 = split.L1, split.L2, split.L3, split.L4
    diagonal = split.diagonal
    for i in range(4):
        for j in range(i, 4):
            product = L1[i] * L2[j] - L3[i] * L4[j]
            if i != j:
                product += L1[j] * L2[i] - L3[j] * L4[i]
            expected = split.mu * diagonal[i] if i == j else 0
            residual.append(product - expected)
    return residual


def verify_split(split: QuadSplit) -> bool:
    """Expand L1 L2 - L3 L4 and compare with mu times the diagonal form."""
    residual = _split_residual(split)
    if any(residual):
        raise VerificationError(
            f"L1 L2 - L3 L4 != {split.mu} (quadric) for {split.coefficients}", residual=residual
        )
    return True


def _check_square_product(a, b, c, d) -> None:
    product = a * b * c * d
    if product == 0 or not rational_nth_roots(product, 2):
        raise SplitError(f"abcd = {product} is not a nonzero square")


def find_isotropic_point(a, b, c, d, height: int) -> tuple:
    """
    Smallest nonzero primitive (X, Y, Z, W) with a X^2 + b Y^2 = c Z^2 + d W^2
    and max |coordinate| <= height.
    """
    a, b, c, d = (to_rational(v) for v in (a, b, c, d))
    best: Optional[tuple] = None
    best_key = None
    rng = range(-height, height + 1)
    for X in rng:
        for Y in rng:
            for Z in rng:
                rest = (a * X ** 2 + b * Y ** 2 - c * Z ** 2) / d
                if rest < 0 or rest.denominator != 1:
                    continue
                W, exact = integer_nthroot(rest.numerator, 2)
                W = int(W)
                if not exact or W > height:
                    continue
                for candidate in {(X, Y, Z, W), (X, Y, Z, -W)}:
                    if not any(candidate) or reduce(gcd, candidate) != 1:
                        continue
                    key = (
                        max(abs(v) for v in candidate),
                        sum(abs(v) for v in candidate),
                        tuple(-v for v in candidate),
                    )
                    if best_key is None or key < best_key:
                        best, best_key = candidate, key
    if best is None:
        raise SplitError(f"No isotropic point of height <= {height} for ({a}, {b}, {c}, {d})")
    logger.debug(f"Isotropic seed {best} for ({a}, {b}, {c}, {d})")
    return best


def richmond_split(a, b, c, d, P0: Optional[Sequence] = None, height: int = 10) -> QuadSplit:
    """
    A split of a X^2 + b Y^2 - c Z^2 - d W^2 through the isotropic point P0.

    Without P0 a seed is searched up to `height`.
    """
    a, b, c, d = (to_rational(v) for v in (a, b, c, d))
    _check_square_product(a, b, c, d)
    diagonal = (a, b, -c, -d)

    def bil(u, v):
        return sum(m * x * y for m, x, y in zip(diagonal, u, v))

    if P0 is None:
        P0 = find_isotropic_point(a, b, c, d, height)
    P0 = tuple(to_rational(v) for v in P0)
    if len(P0) != 4 or not any(P0):
        raise SplitError(f"Seed {P0} must be a nonzero 4-vector")
    if bil(P0, P0) != 0:
        raise SplitError(f"Seed {P0} is not on the quadric")

    # hyperbolic partner of P0
    k = next(i for i in range(4) if P0[i] != 0)
    e = tuple(Fraction(1 if j == k else 0) for j in range(4))
    beta = bil(P0, e)
    Q0 = tuple(ei - bil(e, e) / (2 * beta) * pi for ei, pi in zip(e, P0))

    # orthogonal complement and the coordinates of v on it
    rows = Matrix([[_sympy(m * p) for m, p in zip(diagonal, P)] for P in (P0, Q0)])
    w1, w2 = [tuple(_fraction(x) for x in vec) for vec in rows.nullspace()]
    gram = Matrix([[_sympy(bil(u, v)) for v in (w1, w2)] for u in (w1, w2)])
    inverse = gram.inv()
    row_w1 = [m * x for m, x in zip(diagonal, w1)]
    row_w2 = [m * x for m, x in zip(diagonal, w2)]
    x_form = [_fraction(inverse[0, 0]) * p + _fraction(inverse[0, 1]) * q for p, q in zip(row_w1, row_w2)]
    y_form = [_fraction(inverse[1, 0]) * p + _fraction(inverse[1, 1]) * q for p, q in zip(row_w1, row_w2)]

    # factor A x^2 + 2H xy + C y^2
    A, H, C = bil(w1, w1), bil(w1, w2), bil(w2, w2)
    if A != 0:
        roots = rational_nth_roots(H ** 2 - A * C, 2)
        if not roots:
            raise SplitError("Binary complement does not factor over Q")
        root = roots[-1]
        rho1, rho2 = (-H + root) / A, (-H - root) / A
        m1 = [A * (x - rho1 * y) for x, y in zip(x_form, y_form)]
        m2 = [x - rho2 * y for x, y in zip(x_form, y_form)]
    else:
        m1 = list(y_form)
        m2 = [2 * H * x + C * y for x, y in zip(x_form, y_form)]

    l1 = [2 / beta * m * p for m, p in zip(diagonal, P0)]
    l2 = [m * q for m, q in zip(diagonal, Q0)]
    l3 = [-v for v in m1]

    L1, c1 = _primitive_with_scale(l1)
    L2, c2 = _primitive_with_scale(l2)
    L3, c3 = _primitive_with_scale(l3)
    L4, c4 = _primitive_with_scale(m2)
    # Q = c1 c2 L1 L2 - c3 c4 L3 L4
    K = lcm((c1 * c2).denominator, (c3 * c4).denominator)
    k12, k34 = int(K * c1 * c2), int(K * c3 * c4)
    split = QuadSplit(
        coefficients=(a, b, c, d),
        L1=tuple(k12 * v for v in L1),
        L2=L2,
        L3=tuple(k34 * v for v in L3),
        L4=L4,
        mu=Fraction(K),
    )
    logger.info(f"Split of ({a}, {b}, {c}, {d}) through {P0}: mu = {split.mu}")
    return split


def example_split() -> QuadSplit:
    """The split of X^2 + Y^2 - 2Z^2 - 2W^2 with mu = 6."""
    return QuadSplit(
        coefficients=(1, 1, 2, 2),
        L1=(3, -1, -2, -4),
        L2=(7, -1, -10, 0),
        L3=(3, 1, -4, -2),
        L4=(5, -5, -8, -6),
        mu=6,
    )
