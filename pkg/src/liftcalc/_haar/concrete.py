import logging
from fractions import Fraction
from typing import List, Optional

from .._error import InsufficientPrecision
from .._field import AtLeast
from .._quaternion import quat_mul, quat_sub, quat_val
from .._value import ValueExt
from .base import Integrand, IntegralResult, Integrator
from .space import MeasureSpace, UnitClass, classes_at, refine
from .volume import abs_power

logger = logging.getLogger(__name__)


class AdaptiveIntegrator(Integrator):
    """
    Integrate by adaptive refinement of residue classes.

    A class with representative k and translation lattice of valuation L
    is closed when ``v(center - multiplier*k) < v(multiplier) + L``,
    which makes the integrand constant on the class.
    Other classes are split along the coordinates attaining L.
    Classes are processed depth first in digit order,
    so the summation order and the result are deterministic.
    """

    def integrate(
        self,
        space: MeasureSpace,
        integrand: Integrand,
        depth_cap: Optional[int] = None,
    ) -> IntegralResult:
        """Integrate by adaptive refinement."""
        q = space.field.q
        center = integrand.center
        multiplier = integrand.multiplier
        v_mult = quat_val(multiplier)
        if isinstance(v_mult, AtLeast):
            raise InsufficientPrecision(
                f"Multiplier {multiplier!r} is zero to precision!",
                needed=v_mult.bound,
                available=multiplier.precision,
            )

        precision = max(center.a.precision, center.b.precision + 1)
        stack: List[UnitClass] = list(classes_at(space, 0, precision))
        stack.reverse()

        total = Fraction(0)
        level_used = 0
        certified = True
        evaluated = 0

        while stack:
            cls = stack.pop()
            evaluated += 1
            diff = quat_sub(center, quat_mul(multiplier, cls.rep))
            v = quat_val(diff)
            lattice = cls.lattice_valuation(space.omega_valuation)
            bound = v_mult + lattice

            if not isinstance(v, AtLeast) and v < bound:
                total += cls.volume * abs_power(q, integrand.sign * v)
                level_used = max(level_used, lattice)
                continue

            exhausted = isinstance(v, AtLeast) and v.bound <= bound
            if exhausted or (depth_cap is not None and lattice >= depth_cap):
                logger.debug(
                    "Class %r of %r reached depth %d uncertified",
                    cls.rep,
                    space,
                    lattice,
                )
                if integrand.sign < 0:
                    infinite = ValueExt.infinite()
                    return IntegralResult(infinite, lattice, False, evaluated)
                certified = False
                level_used = max(level_used, lattice)
                continue

            children = list(refine(space, cls, precision))
            children.reverse()
            stack.extend(children)

        logger.debug(
            "Integrated over %r: %d classes, depth %d", space, evaluated, level_used
        )
        return IntegralResult(ValueExt.finite(total), level_used, certified, evaluated)
