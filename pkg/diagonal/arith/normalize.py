"""
Weighted normal forms for points of weighted projective space over Q[t].

A tuple (v_1, ..., v_k) with weights (w_1, ..., w_k) represents the same
point as (lambda**w_1 * v_1, ..., lambda**w_k * v_k) for any nonzero
lambda in Q(t). These helpers pick the representative with polynomial
entries, no removable polynomial factor and no removable integer factor.
"""

import logging
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from sympy import factorint, multiplicity

from ..exceptions import ValidationError
from .poly import Poly, poly_gcd, poly_gcd_list
from .ratfunc import RatFunc

logger = logging.getLogger(__name__)


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly()
    return (f * g).exact_div(poly_gcd(f, g)).monic()


def clear_denominators(values: Sequence, weights: Sequence[int]) -> list:
    """
    Scale rational-function coordinates to polynomials.

    Multiplies coordinate i by L**w_i where L is the lcm of all denominators.
    The result usually carries removable factors; follow with
    ``remove_weighted_factors``.
    """
    values = [RatFunc.coerce(v) for v in values]
    L = reduce(poly_lcm, [v.den for v in values], Poly([1]))
    return [(v * L ** w).as_poly() for v, w in zip(values, weights)]


def _weighted_part(h: Poly, v: Poly, weight: int) -> Poly:
    """Product of the irreducible p | h (h square-free) with p**weight | v."""
    f, cur = h, v
    for _ in range(weight):
        f = poly_gcd(f, cur)
        if f.degree <= 0:
            return Poly([1])
        cur = cur.exact_div(f)
    return f


def remove_weighted_factors(values: Sequence[Poly], weights: Sequence[int]) -> tuple:
    """
    Divide out every polynomial F with F**w_i | v_i for all i.

    Returns (reduced, removed) with values[i] == removed**w_i * reduced[i]
    and removed monic.
    """
    values = list(values)
    removed = Poly([1])
    while True:
        nonzero = [(v, w) for v, w in zip(values, weights) if not v.is_zero()]
        if not nonzero:
            return values, removed
        h = poly_gcd_list([v for v, _ in nonzero]).sqf_part()
        if h.degree <= 0:
            return values, removed
        F = reduce(poly_gcd, [_weighted_part(h, v, w) for v, w in nonzero])
        if F.degree <= 0:
            return values, removed
        logger.debug(f"Removing weighted factor {F}")
        values = [v.exact_div(F ** w) if not v.is_zero() else v for v, w in zip(values, weights)]
        removed = removed * F


def weighted_integer_normalize(values: Sequence[Poly], weights: Sequence[int]) -> tuple:
    """
    Rescale by a positive rational lambda so that the entries are integral
    and no prime p has p**w_i dividing the content of every entry.

    Returns (normalized, lam) with normalized[i] == lam**w_i * values[i].
    """
    values = list(values)
    nonzero = [(v.integer_content(), w) for v, w in zip(values, weights) if not v.is_zero()]
    if not nonzero:
        raise ValidationError("Cannot normalize an all-zero tuple")
    num_gcd = reduce(gcd, [c.numerator for c, _ in nonzero])
    den_lcm = reduce(lcm, [c.denominator for c, _ in nonzero])
    primes = set(factorint(num_gcd)) | set(factorint(den_lcm))
    lam = Fraction(1)
    for p in sorted(primes):
        # k = max_i ceil(-e_i / w_i) with e_i the p-adic valuation of content i
        k = None
        for c, w in nonzero:
            e = multiplicity(p, c.numerator) - multiplicity(p, c.denominator)
            need = -((e) // w)
            k = need if k is None else max(k, need)
        if k:
            lam *= Fraction(p) ** k
    normalized = [v * lam ** w for v, w in zip(values, weights)]
    return normalized, lam


def sign_canonical(values: Sequence[Poly]) -> list:
    """Flip each nonzero entry to a positive leading coefficient."""
    return [-v if v.lc < 0 else v for v in values]


def constant_sign_canonical(values: Sequence[Poly]) -> list:
    """Flip each nonzero entry to a positive constant term, or a positive
    leading coefficient when t divides it."""
    out = []
    for v in values:
        key = v.tc if v.tc != 0 else v.lc
        out.append(-v if key < 0 else v)
    return out
