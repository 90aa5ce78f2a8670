"""Local obstructions for a x^2 + b y^6 = c z^6 + d w^6 at the prime 3."""

import logging
from functools import reduce
from itertools import product
from math import gcd

from ..exceptions import ValidationError

logger = logging.getLogger(__name__)


def mod3_obstruction(a: int, b: int, c: int, d: int) -> bool:
    """
    True when a x^2 + b y^6 = c z^6 + d w^6 has no solution modulo 9 with
    (x, y, z, w) not all divisible by 3.

    The coefficients are divided by their gcd first, so (3,3,3,3) behaves like
    (1,1,1,1). Working modulo 9 catches the cases where a coefficient divisible
    by 3 hides the obstruction modulo 3, e.g. (1,1,3,3).
    """
    if 0 in (a, b, c, d):
        raise ValidationError("Coefficients must be nonzero")
    g = reduce(gcd, (a, b, c, d))
    a, b, c, d = (v // g for v in (a, b, c, d))
    squares = {x: x * x % 9 for x in range(9)}
    sixths = {y: pow(y, 6, 9) for y in range(9)}
    for x, y, z, w in product(range(9), repeat=4):
        if x % 3 == 0 and y % 3 == 0 and z % 3 == 0 and w % 3 == 0:
            continue
        if (a * squares[x] + b * sixths[y] - c * sixths[z] - d * sixths[w]) % 9 == 0:
            return False
    logger.debug(f"({a},{b},{c},{d}) is insolvable modulo 9")
    return True
