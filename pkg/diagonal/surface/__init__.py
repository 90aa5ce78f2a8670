from .cone import (
    RationalCone,
    SelfIntersectionMinimum,
    brute_force_rays,
    extremal_rays,
    min_self_intersection,
    primitive,
)
from .conic import hyperplane_section, residual_conic, verify_hyperplane_conic
from .lattice import (
    DEGREES,
    TABLE1,
    DivisorClass,
    GenusDegree,
    degree,
    five_squares,
    genus_and_degree,
    lattice_invariants,
    pairing,
    self_intersection,
    sum_of_squares_identity,
)
from .parametrizations import DEGREE3, DEGREE7, SurfaceParametrization, verify_h4_parametrization
