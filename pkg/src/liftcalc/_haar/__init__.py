from .base import Integrand, IntegralResult, Integrator
from .concrete import AdaptiveIntegrator
from .extending import CachingIntegrator, ExtendingIntegrator, default_cache_size
from .gl2 import (
    budget,
    check_budget,
    enumerate_gl2,
    gl2_order,
    integrate_gl2,
    residue_matrices,
    total_integral,
)
from .space import (
    Box,
    CoordRange,
    MeasureSpace,
    SpaceKind,
    UnitClass,
    additive_pi_of,
    classes_at,
    enumerate_unit_classes,
    image_space,
    refine,
    split_nonunits,
    split_units,
    units_of,
    units_ok,
    units_order,
)
from .volume import (
    abs_power,
    additive_unit_index,
    discriminant_abs,
    epsilon_F,
    expected_u,
    mu_difference_abs,
    order_measure_index,
    unit_mass,
    vol_gamma,
    vol_omega,
)
