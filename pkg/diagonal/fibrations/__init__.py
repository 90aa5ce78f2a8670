from .equation import STANDARD_EXPONENTS, DiagonalEquation, ParametricSolution
from .verification import (
    AffineCurve,
    common_factor,
    dehomogenize,
    is_trivial,
    reduce_coprime,
    require_identity,
    verify_identity,
)
from .cubic_family import cor2_solution, fibre_2666, gen_2666, unsubstituted_fibre
from .quartic_families import fibre_2488, fibre_2848, gen_2488, gen_2848
from .sextic_families import (
    DuplicationStep,
    duplication_steps_24612,
    gen_21246,
    gen_24612,
    gen_26412,
)
from .registry import GENERATORS, generate

__all__ = [
    "STANDARD_EXPONENTS",
    "AffineCurve",
    "DiagonalEquation",
    "DuplicationStep",
    "GENERATORS",
    "ParametricSolution",
    "common_factor",
    "cor2_solution",
    "dehomogenize",
    "duplication_steps_24612",
    "fibre_2488",
    "fibre_2666",
    "fibre_2848",
    "gen_21246",
    "gen_24612",
    "gen_2488",
    "gen_26412",
    "gen_2666",
    "gen_2848",
    "generate",
    "is_trivial",
    "reduce_coprime",
    "require_identity",
    "unsubstituted_fibre",
    "verify_identity",
]
