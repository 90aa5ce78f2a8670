"""
Dense univariate polynomials over Q in the indeterminate t.

The public face of ``Poly`` is an ascending tuple of Fractions. Internally
the coefficients are kept in sympy's dense representation (descending list
of ``QQ`` elements) so that every ring operation, gcd and square-free
decomposition is delegated to ``sympy.polys``.
"""

import logging
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from sympy.polys.densearith import (
    dup_add,
    dup_div,
    dup_exquo,
    dup_mul,
    dup_neg,
    dup_pow,
    dup_sub,
)
from sympy.polys.densebasic import dup_deflate, dup_degree, dup_strip
from sympy.polys.densetools import dup_compose, dup_eval, dup_monic
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_gcd
from sympy.polys.factortools import dup_factor_list
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.sqfreetools import dup_sqf_list, dup_sqf_part

from ..exceptions import ValidationError
from .rational import to_rational

logger = logging.getLogger(__name__)


def _qq(c: Fraction):
    return QQ(c.numerator, c.denominator)


def _fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class Poly:
    """
    Immutable polynomial in Q[t].

    Args:
        coefficients: ascending coefficients (ints, Fractions or "p/q" strings).
            Trailing zeros are stripped, so ``Poly([])`` and ``Poly([0])`` are
            both the zero polynomial.
    """

    __slots__ = ("_rep", "_coeffs")

    def __init__(self, coefficients: Iterable = ()):
        values = [to_rational(c) for c in coefficients]
        self._rep = dup_strip([_qq(c) for c in reversed(values)])
        self._coeffs = None

    @classmethod
    def _from_rep(cls, rep) -> "Poly":
        poly = cls.__new__(cls)
        poly._rep = dup_strip(list(rep))
        poly._coeffs = None
        return poly

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        """c * t**k."""
        if k < 0:
            raise ValidationError(f"Negative monomial degree {k}")
        return cls([0] * k + [c])

    @classmethod
    def t(cls) -> "Poly":
        return cls([0, 1])

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        if self._coeffs is None:
            self._coeffs = tuple(_fraction(c) for c in reversed(self._rep))
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        if not self._rep:
            return -1
        return dup_degree(self._rep)

    def is_zero(self) -> bool:
        return not self._rep

    def __bool__(self):
        return bool(self._rep)

    @property
    def lc(self) -> Fraction:
        if not self._rep:
            return Fraction(0)
        return _fraction(self._rep[0])

    @property
    def tc(self) -> Fraction:
        """Constant term, i.e. the value at t = 0."""
        if not self._rep:
            return Fraction(0)
        return _fraction(self._rep[-1])

    def valuation(self) -> int:
        """Largest k with t**k dividing self. Zero polynomial is rejected."""
        if not self._rep:
            raise ValidationError("Valuation of the zero polynomial is undefined")
        k = 0
        for c in reversed(self._rep):
            if c:
                return k
            k += 1
        return k

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other._rep
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return dup_strip([_qq(to_rational(other))])
        return None

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Poly._from_rep(dup_add(self._rep, rep, QQ))

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Poly._from_rep(dup_sub(self._rep, rep, QQ))

    def __rsub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Poly._from_rep(dup_sub(rep, self._rep, QQ))

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Poly._from_rep(dup_mul(self._rep, rep, QQ))

    __rmul__ = __mul__

    def __neg__(self):
        return Poly._from_rep(dup_neg(self._rep, QQ))

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValidationError(f"Poly exponent must be a non-negative int, got {n!r}")
        return Poly._from_rep(dup_pow(self._rep, n, QQ))

    def __divmod__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        if not rep:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = dup_div(self._rep, rep, QQ)
        return Poly._from_rep(q), Poly._from_rep(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        # Scalars only; polynomial quotients live in RatFunc.
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = to_rational(other)
            if c == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / c)
        return NotImplemented

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of an exact division; raises ValidationError otherwise."""
        rep = self._coerce(other)
        if not rep:
            raise ZeroDivisionError("polynomial division by zero")
        try:
            return Poly._from_rep(dup_exquo(self._rep, rep, QQ))
        except ExactQuotientFailed:
            raise ValidationError(f"{other} does not divide {self}")

    def divides(self, other: "Poly") -> bool:
        """True when self | other in Q[t]."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def shift(self, k: int) -> "Poly":
        """Multiply by t**k; for negative k the division must be exact."""
        if k >= 0:
            return Poly._from_rep(list(self._rep) + [QQ.zero] * k) if self._rep else self
        if self._rep and self.valuation() < -k:
            raise ValidationError(f"t^{-k} does not divide {self}")
        return Poly._from_rep(self._rep[: len(self._rep) + k])

    # ------------------------------------------------------------------
    # Evaluation and composition
    # ------------------------------------------------------------------
    def __call__(self, t0) -> Fraction:
        return _fraction(dup_eval(self._rep, _qq(to_rational(t0)), QQ))

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(t))."""
        return Poly._from_rep(dup_compose(self._rep, inner._rep, QQ))

    def deflate(self) -> tuple:
        """Return (m, g) with self = g(t**m) and m maximal."""
        m, rep = dup_deflate(self._rep, QQ)
        return m, Poly._from_rep(rep)

    # ------------------------------------------------------------------
    # Normal forms
    # ------------------------------------------------------------------
    def monic(self) -> "Poly":
        return Poly._from_rep(dup_monic(self._rep, QQ))

    def scale(self, c) -> "Poly":
        return self * to_rational(c)

    def integer_content(self) -> Fraction:
        """Positive rational c with self / c primitive in Z[t]; 0 for the zero polynomial."""
        if not self._rep:
            return Fraction(0)
        nums = [c.numerator for c in self.coeffs if c]
        dens = [c.denominator for c in self.coeffs if c]
        return Fraction(reduce(gcd, nums), reduce(lcm, dens))

    def sqf_part(self) -> "Poly":
        """Monic square-free part."""
        if not self._rep:
            return self
        return Poly._from_rep(dup_monic(dup_sqf_part(self._rep, QQ), QQ))

    def sqf_list(self) -> tuple:
        """(coefficient, [(factor, multiplicity), ...]) with square-free monic factors."""
        coeff, factors = dup_sqf_list(self._rep, QQ)
        return _fraction(coeff), [(Poly._from_rep(f), k) for f, k in factors]

    def rational_roots(self) -> list:
        """Distinct rational roots, ascending."""
        if self.degree <= 0:
            return []
        _, factors = dup_factor_list(self._rep, QQ)
        roots = set()
        for rep, _ in factors:
            if dup_degree(rep) == 1:
                roots.add(-_fraction(rep[1]) / _fraction(rep[0]))
        return sorted(roots)

    # ------------------------------------------------------------------
    # Dunder plumbing
    # ------------------------------------------------------------------
    def __eq__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return self._rep == rep

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self._rep:
            return "0"
        terms = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif c == 1:
                terms.append("t" if k == 1 else f"t^{k}")
            elif c == -1:
                terms.append("-t" if k == 1 else f"-t^{k}")
            else:
                terms.append(f"{c}*t" if k == 1 else f"{c}*t^{k}")
        return " + ".join(terms).replace("+ -", "- ")


T = Poly.t()


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd in Q[t]; gcd(0, 0) = 0."""
    return Poly._from_rep(dup_monic(dup_gcd(f._rep, g._rep, QQ), QQ))


def poly_gcd_list(polys: Sequence[Poly]) -> Poly:
    return reduce(poly_gcd, polys, Poly())


def poly_eval(f: Poly, t0) -> Fraction:
    """Exact value f(t0)."""
    return f(t0)


def integer_normalize(polys: Sequence[Poly]) -> tuple:
    """
    Scale a list of polynomials to integer coefficients with joint content 1.

    Returns (normalized, c) with polys[i] == c * normalized[i]. The sign of c
    makes the first nonzero polynomial's leading coefficient positive, so the
    output is invariant under pre-scaling by any nonzero rational.
    """
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise ValidationError("integer_normalize needs at least one nonzero polynomial")
    nums = [c.numerator for p in nonzero for c in p.coeffs if c]
    dens = [c.denominator for p in nonzero for c in p.coeffs if c]
    c = Fraction(reduce(gcd, nums), reduce(lcm, dens))
    if nonzero[0].lc < 0:
        c = -c
    return [p / c for p in polys], c
