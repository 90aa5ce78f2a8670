from .rational import format_rational, parse_rational_list, rational_to_json, to_rational
from .poly import T, Poly, integer_normalize, poly_eval, poly_gcd, poly_gcd_list
from .ratfunc import RatFunc
from .normalize import (
    clear_denominators,
    constant_sign_canonical,
    poly_lcm,
    remove_weighted_factors,
    sign_canonical,
    weighted_integer_normalize,
)

__all__ = [
    "T",
    "Poly",
    "RatFunc",
    "clear_denominators",
    "constant_sign_canonical",
    "format_rational",
    "integer_normalize",
    "parse_rational_list",
    "poly_eval",
    "poly_gcd",
    "poly_gcd_list",
    "poly_lcm",
    "rational_to_json",
    "remove_weighted_factors",
    "sign_canonical",
    "to_rational",
    "weighted_integer_normalize",
]
