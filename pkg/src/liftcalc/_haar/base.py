from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional

from .._error import ParameterError
from .._quaternion import QuatElem
from .._value import ValueExt
from .space import MeasureSpace


@dataclass(frozen=True)
class Integrand:
    """
    Integrand ``k -> |center - multiplier*k|_D^sign``.

    Parameters
    ----------
    center
        element the distance is measured to
    multiplier
        left factor applied to the integration variable, 1 if not specified
    sign
        exponent, -1 or 1
    """

    center: QuatElem
    multiplier: Optional[QuatElem] = None
    sign: int = -1

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ParameterError(
                f"Integrand sign must be -1 or 1, got {self.sign!r}!", "sign", self.sign
            )
        if self.multiplier is None:
            f = self.center.field
            one = QuatElem.from_int(f, 1, max(self.center.a.precision, 2))
            object.__setattr__(self, "multiplier", one)


@dataclass(frozen=True)
class IntegralResult:
    """
    Result of an integration.

    Attributes
    ----------
    value
        exact value or Infinite
    level_used
        largest lattice valuation of a closed class, in v_D units
    certified
        every class was closed by a constancy certificate
    classes
        number of classes evaluated
    """

    value: ValueExt
    level_used: int = 0
    certified: bool = True
    classes: int = field(default=0, compare=False)


class Integrator(ABC):
    """Integrator interface for locally constant integrands."""

    def __repr__(self):
        return type(self).__name__ + "()"

    @abstractmethod
    def integrate(
        self,
        space: MeasureSpace,
        integrand: Integrand,
        depth_cap: Optional[int] = None,
    ) -> IntegralResult:
        """
        Integrate over a measure space.

        Parameters
        ----------
        space
            domain of integration
        integrand
            integrand to evaluate
        depth_cap
            largest lattice valuation to refine to, in v_D units,
            limited only by the precision of the integrand if not specified

        Returns
        -------
        IntegralResult
            value with its certificate
        """
