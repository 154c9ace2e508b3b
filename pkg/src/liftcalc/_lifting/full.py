from typing import Optional

from .._error import Unsupported
from .._haar import Integrator
from .._quaternion import OrderSpec
from .._value import ValueExt
from .decomposition import LiftingDecomposition
from .distance import LiftingDistance
from .intersection import LiftingIntersection
from .oracle import LiftingOracle, _check_fields
from .phi import LiftingPhi, phi


class Lifting(
    LiftingDistance,
    LiftingPhi,
    LiftingIntersection,
    LiftingDecomposition,
    LiftingOracle,
):
    """
    Lifting depths and intersection numbers for a quadratic order.

    Parameters
    ----------
    order
        order O = O_F + π^s O_K of the quasi-canonical lifting
    integrator
        integrator for the Haar integrals,
        a :class:`CachingIntegrator` of ``default_cache_size`` results
        if not specified
    cross_check
        compare independent routes where two exist and raise
        :class:`RouteDisagreement` when they differ

    Examples
    --------
    .. code:: python

        field = FieldParams(3, precision=12)
        order = OrderSpec(field, "ramified", 1)
        lifting = Lifting(order)

        gamma = QuatElem.delta(field)
        lifting.v_x(gamma)       # 1
        lifting.classify(gamma)  # shallow
    """

    def __init__(
        self,
        order: OrderSpec,
        integrator: Optional[Integrator] = None,
        cross_check: bool = True,
    ):
        super().__init__(order, integrator, cross_check)


def intersection_pairing(order1: OrderSpec, order2: OrderSpec) -> ValueExt:
    """
    Intersection pairing of two quasi-canonical liftings.

    φ(μ1) if ``1 > |μ1|_D > |μ2|_D`` and 1 if ``1 = |μ1|_D > |μ2|_D``.

    Raises
    ------
    Unsupported
        if ``|μ1|_D <= |μ2|_D``
    """
    _check_fields(order1, order2)
    if order1.mu_valuation >= order2.mu_valuation:
        raise Unsupported(
            f"Pairing requires |μ1| > |μ2|, got {order1!r} and {order2!r}!"
        )
    if order1.mu_valuation == 0:
        return ValueExt.finite(1)
    return phi(order1.mu)
