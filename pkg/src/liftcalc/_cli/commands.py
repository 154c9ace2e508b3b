import logging
from typing import Callable, Optional

from .._convert import from_quat_literal, to_quat_literal
from .._error import (
    InsufficientPrecision,
    NotShallow,
    ParameterError,
    Unsupported,
    WrongCase,
)
from .._field import AtLeast
from .._haar import CachingIntegrator, default_cache_size
from .._lifting import Lifting
from .._model import ComputeReport, TableReport, TableRow, VerifyReport
from .._quaternion import OrderSpec, QuatElem, quat_val
from .._value import ValueExt, format_rational
from .._verify import SuiteContext, run_suite
from .config import RunConfig

logger = logging.getLogger(__name__)


def _render(compute: Callable[[], ValueExt]) -> Optional[str]:
    # Values without a formula for the input are reported as missing
    try:
        return str(compute())
    except InsufficientPrecision:
        return str(ValueExt.insufficient())
    except (Unsupported, WrongCase, NotShallow):
        return None


def _parse_unit(text: str, config: RunConfig) -> QuatElem:
    gamma = from_quat_literal(text, config.field)
    v = quat_val(gamma)
    if isinstance(v, AtLeast):
        raise InsufficientPrecision(
            f"Valuation of {text!r} is unresolved!",
            needed=v.bound,
            available=gamma.precision,
        )
    if v != 0:
        raise ParameterError(f"Expected a unit of O_D, got {text!r}!", "gamma", text)
    return gamma


def cmd_compute(config: RunConfig) -> ComputeReport:
    """
    Compute the lifting quantities of one automorphism.

    Raises
    ------
    ParameterError
        if not exactly one γ is given or γ is not a unit
    ConversionError
        if the γ literal is malformed
    """
    if len(config.gamma) != 1:
        raise ParameterError(
            f"compute expects one γ literal, got {len(config.gamma)}!",
            "gamma",
            config.gamma,
        )
    text = config.gamma[0]
    gamma = _parse_unit(text, config)
    order = config.order
    lifting = Lifting(order)

    classification = distance = phi_dprime = None
    try:
        depth = lifting.classify(gamma)
    except InsufficientPrecision:
        classification = str(ValueExt.insufficient())
    else:
        classification = depth.depth_class.value
        distance = format_rational(depth.distance.distance)
        phi_dprime = _render(lambda: lifting.phi(depth.gamma_dprime))

    return ComputeReport(
        q=config.q,
        ext=config.ext.value,
        level=config.level,
        precision=config.precision,
        gamma=text,
        mu=to_quat_literal(order.mu),
        index=format_rational(order.index),
        v_x=_render(lambda: lifting.v_x(gamma)),
        v_y=_render(lambda: lifting.v_y(gamma)),
        v_z=_render(lambda: lifting.v_z(gamma)),
        v_abar=_render(lambda: lifting.v_abar(gamma)),
        classification=classification,
        distance=distance,
        phi_gamma_dprime=phi_dprime,
    )


def cmd_verify(config: RunConfig) -> VerifyReport:
    """Run the verification suite on the configured identities."""
    ctx = SuiteContext(
        field=config.field,
        ext=config.ext,
        level=config.level,
        samples=config.samples,
        seed=config.seed,
        gl2_level=config.gl2_level,
    )
    rows = run_suite(ctx, config.identity)
    return VerifyReport(
        q=config.q,
        ext=config.ext.value,
        level=config.level,
        precision=config.precision,
        gl2_level=config.gl2_level,
        samples=config.samples,
        seed=config.seed,
        rows=rows,
    )


def cmd_table(config: RunConfig) -> TableReport:
    """
    Tabulate v_x over γ literals and a range of levels.

    Rows are ordered by γ in input order, then by level.
    """
    low, high = config.levels or (config.level, config.level)
    field = config.field
    integrator = CachingIntegrator(max_size=default_cache_size)

    rows = []
    for text in config.gamma:
        gamma = _parse_unit(text, config)
        for level in range(low, high + 1):
            lifting = Lifting(OrderSpec(field, config.ext, level), integrator)
            logger.info("Tabulating %s at level %d", text, level)
            try:
                depth = lifting.classify(gamma)
            except InsufficientPrecision:
                classification = str(ValueExt.insufficient())
                distance = None
            else:
                classification = depth.depth_class.value
                distance = format_rational(depth.distance.distance)
            rows.append(
                TableRow(
                    gamma=text,
                    level=level,
                    v_x=_render(lambda: lifting.v_x(gamma)),
                    classification=classification,
                    distance=distance,
                )
            )
    return TableReport(
        q=config.q, ext=config.ext.value, precision=config.precision, rows=rows
    )
