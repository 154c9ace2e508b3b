from .residue import FieldParams, QuadExtElem, smallest_nonsquare
from .series import (
    AtLeast,
    SeriesElem,
    Valuation,
    frobenius,
    is_resolved,
    lower_bound,
    make_series,
    resolved_below,
    series_add,
    series_inv,
    series_mul,
    series_neg,
    series_scale,
    series_shift,
    series_sub,
    series_val,
)
