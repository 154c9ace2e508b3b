from typing import Optional

from .._error import InsufficientPrecision, Unsupported
from .._field import AtLeast
from .._haar import (
    CachingIntegrator,
    Integrand,
    Integrator,
    MeasureSpace,
    default_cache_size,
)
from .._haar.base import IntegralResult
from .._quaternion import OrderSpec, QuatElem, quat_val
from .._value import ValueExt


class LiftingBase:
    """Base calculator with the order, the integrator and shared utilities."""

    def __init__(
        self,
        order: OrderSpec,
        integrator: Optional[Integrator] = None,
        cross_check: bool = True,
    ):
        # Docstring in the main calculator
        self.order = order
        self.integrator = integrator or CachingIntegrator(max_size=default_cache_size)
        self.cross_check = cross_check

    def __repr__(self):
        options = [f"order={self.order!r}", f"integrator={self.integrator!r}"]
        return type(self).__name__ + "(" + ", ".join(options) + ")"

    @property
    def q(self) -> int:
        """Residue field cardinality."""
        return self.order.field.q

    def _integrate(
        self,
        space: MeasureSpace,
        center: QuatElem,
        multiplier: Optional[QuatElem] = None,
        sign: int = -1,
    ) -> IntegralResult:
        return self.integrator.integrate(space, Integrand(center, multiplier, sign))

    def _value(
        self,
        space: MeasureSpace,
        center: QuatElem,
        multiplier: Optional[QuatElem] = None,
        sign: int = -1,
    ) -> ValueExt:
        return self._integrate(space, center, multiplier, sign).value

    def _require_unit(self, gamma: QuatElem) -> None:
        """
        Check that an element is a unit of O_D.

        Raises
        ------
        InsufficientPrecision
            if the element is zero to precision
        Unsupported
            if the element is not a unit
        """
        v = quat_val(gamma)
        if isinstance(v, AtLeast):
            raise InsufficientPrecision(
                f"Valuation of {gamma!r} is unresolved!",
                needed=1,
                available=gamma.precision,
            )
        if v != 0:
            msg = f"Expected a unit of O_D, got {gamma!r} of valuation {v}!"
            raise Unsupported(msg)
