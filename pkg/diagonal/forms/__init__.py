from .del_pezzo import (
    ConePoint,
    cone_lift,
    cone_residual,
    del_pezzo_point,
    del_pezzo_residual,
    line_construction_map,
    unirational_map,
)
from .form import Form, ProductForm, parse_form
from .pipeline import (
    FormPairContext,
    HypersurfacePoint,
    LinearFactorPoint,
    form_pair_point,
    hypersurface_residual,
    linear_factor_parametrize,
    pair_curve,
    pair_point,
)
