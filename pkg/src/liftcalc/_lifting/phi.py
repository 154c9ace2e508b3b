from typing import Optional

from .._haar import AdaptiveIntegrator, Integrand, Integrator, additive_pi_of
from .._quaternion import QuatElem
from .._value import ValueExt
from .base import LiftingBase


def phi(gamma: QuatElem, integrator: Optional[Integrator] = None) -> ValueExt:
    """
    Special function ``φ(γ) = 1 + ∫_{πO_F} |x - γ|_D^(-1) dx``.

    The measure is normalised by O_F. The value is Infinite
    when γ lies in πO_F to precision.

    Parameters
    ----------
    gamma
        element of D
    integrator
        integrator to use, :class:`AdaptiveIntegrator` if not specified
    """
    integrator = integrator or AdaptiveIntegrator()
    space = additive_pi_of(gamma.field)
    return 1 + integrator.integrate(space, Integrand(gamma)).value


class LiftingPhi(LiftingBase):
    """Special function φ."""

    def phi(self, gamma: QuatElem) -> ValueExt:
        """
        Special function φ with the integrator of the calculator.

        Parameters
        ----------
        gamma
            element of D

        Returns
        -------
        ValueExt
            ``1 + ∫_{πO_F} |x - γ|_D^(-1) dx``, Infinite for γ in πO_F
        """
        return phi(gamma, self.integrator)

    def phi_of_generator(self) -> ValueExt:
        """φ(μ) of the order generator."""
        return self.phi(self.order.mu)
