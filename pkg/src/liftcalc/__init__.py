"""
Lifting depths and intersection numbers of quasi-canonical liftings.

This module holds all public objects provided by liftcalc
with the exception of report models, which are located in ``liftcalc.model``.
Computations are exact: values are rationals extended by Infinite
and InsufficientPrecision, see :class:`ValueExt`.
"""

from liftcalc import model

from ._cli import RunConfig, build_parser, main
from ._config import (
    MissingConfigurationWarning,
    config_from_environment,
    config_from_file,
    config_to_file,
)
from ._convert import (
    from_quat_literal,
    from_series_literal,
    to_quat_literal,
    to_series_literal,
)
from ._error import (
    BudgetExceeded,
    ConversionError,
    IdentityFailure,
    InsufficientPrecision,
    InversionOfZero,
    LiftcalcError,
    NotShallow,
    ParameterError,
    RouteDisagreement,
    Unsupported,
    WrongCase,
    exit_codes,
    get_exit_code,
)
from ._field import (
    AtLeast,
    FieldParams,
    QuadExtElem,
    SeriesElem,
    frobenius,
    make_series,
    series_add,
    series_inv,
    series_mul,
    series_neg,
    series_sub,
    series_val,
)
from ._haar import (
    AdaptiveIntegrator,
    CachingIntegrator,
    ExtendingIntegrator,
    Integrand,
    IntegralResult,
    Integrator,
    MeasureSpace,
    additive_pi_of,
    discriminant_abs,
    epsilon_F,
    image_space,
    integrate_gl2,
    split_nonunits,
    split_units,
    units_of,
    units_ok,
    units_order,
    vol_gamma,
    vol_omega,
)
from ._lifting import (
    Depth,
    DepthClass,
    DistanceReport,
    Lifting,
    PsPdSplit,
    distance_to,
    gl2_oracle_pairing,
    intersection_pairing,
    phi,
)
from ._quaternion import (
    Extension,
    Mat2D,
    Membership,
    OrderSpec,
    QuatElem,
    coset_representatives,
    eigen_matrix,
    eigen_matrix_inverse,
    index_of_order,
    is_in_order,
    is_normalizer_element,
    main_involution,
    pm_decompose,
    quat_add,
    quat_inv,
    quat_mul,
    quat_neg,
    quat_sub,
    quat_val,
    reduced_norm,
    reduced_trace,
    sigma_element,
)
from ._value import ValueExt, ValueKind, format_rational
from ._verify import SuiteContext, run_suite

__version__ = "1.0.0"

# Change the module of classes to hide module structure
# and fix Sphinx base class links
_classes = [
    AdaptiveIntegrator,
    AtLeast,
    BudgetExceeded,
    CachingIntegrator,
    ConversionError,
    Depth,
    DepthClass,
    DistanceReport,
    ExtendingIntegrator,
    Extension,
    FieldParams,
    IdentityFailure,
    InsufficientPrecision,
    Integrand,
    IntegralResult,
    Integrator,
    InversionOfZero,
    LiftcalcError,
    Lifting,
    Mat2D,
    MeasureSpace,
    Membership,
    MissingConfigurationWarning,
    NotShallow,
    OrderSpec,
    ParameterError,
    PsPdSplit,
    QuatElem,
    RouteDisagreement,
    RunConfig,
    SeriesElem,
    SuiteContext,
    Unsupported,
    ValueExt,
    ValueKind,
    WrongCase,
]

for _cls in _classes:
    _cls.__module__ = "liftcalc"

q_var: str = "LIFTCALC_Q"
"""Configuration variable name for the residue field cardinality."""

ext_var: str = "LIFTCALC_EXT"
"""Configuration variable name for the extension case."""

level_var: str = "LIFTCALC_LEVEL"
"""Configuration variable name for the order level."""

precision_var: str = "LIFTCALC_PRECISION"
"""Configuration variable name for the working precision in π-digits."""

gl2_level_var: str = "LIFTCALC_GL2_LEVEL"
"""Configuration variable name for the GL₂ oracle enumeration level."""

seed_var: str = "LIFTCALC_SEED"
"""Configuration variable name for the sampling seed."""
