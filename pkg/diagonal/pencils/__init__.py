from .pencil import (
    PENCIL_EXPONENTS,
    PencilCurve,
    PencilWeierstrass,
    PointSearch,
    build_pencil,
    cubic_point_search,
    verify_recovered,
    weierstrass_236,
)
from .split import QuadSplit, example_split, find_isotropic_point, richmond_split, verify_split
from .survey import SurfacePoint, farey_parameters, member_point_order, pencil_survey
