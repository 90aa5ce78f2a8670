from .congruence import mod3_obstruction
from .scans import (
    SEARCH_KINDS,
    SearchTask,
    cubic_form_search,
    exact_cbrt,
    exact_sqrt,
    run_task,
    selmer_check,
    sextic_search,
    surface_search,
)
from .survey import OBSTRUCTED, SOLVED, UNRESOLVED, CoefficientStatus, survey_small_coefficients
