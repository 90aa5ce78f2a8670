"""
Family name -> generator lookup used by the services and the CLI.
"""

import logging

from ..exceptions import ValidationError
from ..settings import Settings
from .cubic_family import cor2_solution, gen_2666
from .equation import ParametricSolution
from .quartic_families import gen_2488, gen_2848
from .sextic_families import gen_21246, gen_24612, gen_26412

logger = logging.getLogger(__name__)

GENERATORS = {
    "2666": gen_2666,
    "2488": gen_2488,
    "2848": gen_2848,
    "24612": gen_24612,
    "26412": gen_26412,
    "21246": gen_21246,
}


def generate(family: str, a, b, m: int) -> ParametricSolution:
    """
    Run the generator for `family`. For "cor2", `m` is the lift index n and
    `b` is passed through (the coprime statement is for b = 1).
    """
    if family == "4444":
        raise ValidationError(
            "The (4,4,4,4) surface has no fibration generator; use the `cone` "
            "command and the h = 4 parametrizations of the surface package"
        )
    if family not in Settings.FAMILIES:
        raise ValidationError(
            f"Unknown family {family!r}; expected one of {', '.join(Settings.FAMILIES)}"
        )
    logger.info(f"Generating family {family} with a={a}, b={b}, m={m}")
    if family == "cor2":
        return cor2_solution(a, m, b)
    return GENERATORS[family](a, b, m)
