from .identities import SuiteContext, Tally, checks
from .sampling import (
    random_at_distance,
    random_deep,
    random_distance_one,
    random_element,
    random_maximal_unit,
    random_nonunit,
    random_normalizer,
    random_order_unit,
    random_rational_unit,
    random_residue_unit,
    random_series,
    random_shallow,
    random_unit,
    random_vy_input,
)
from .suite import expand_identities, run_suite
