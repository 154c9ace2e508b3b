import logging
from typing import Dict, List, Optional

from .._error import ParameterError
from .._haar import (
    discriminant_abs,
    epsilon_F,
    integrate_gl2,
    order_measure_index,
    total_integral,
)
from .._quaternion import OrderSpec, QuatElem, quat_inv, quat_mul, quat_neg, quat_sub
from .._value import ValueExt
from .base import LiftingBase

logger = logging.getLogger(__name__)


def _bilinear_coefficients(
    order1: OrderSpec, order2: OrderSpec, gamma0: QuatElem
) -> List[QuatElem]:
    # R(g) = (0 1) M1^(-1) g (γ0, γ0 μ2)^T with M1 = [[1, 1], [μ1, μ̄1]]
    scale = quat_inv(quat_sub(order1.mu_bar, order1.mu))
    rho = (quat_neg(quat_mul(scale, order1.mu)), scale)
    kappa = (gamma0, quat_mul(gamma0, order2.mu))
    return [quat_mul(r, k) for r in rho for k in kappa]


def _check_fields(order1: OrderSpec, order2: OrderSpec) -> None:
    field1, field2 = order1.field, order2.field
    if field1.q != field2.q or field1.nonsquare != field2.nonsquare:
        raise ParameterError(
            f"Orders {order1!r} and {order2!r} live over different fields!",
            "order2",
            order2,
        )


def gl2_oracle_pairing(
    order1: OrderSpec,
    order2: OrderSpec,
    level: int,
    gamma0: Optional[QuatElem] = None,
) -> ValueExt:
    """
    Intersection pairing by enumeration of GL₂(O_F / π^N).

    ``ε_F [O_K1 : O1^×][O_K2 : O2^×] |Δ_{K1/F}|_F^(-1) ∫ |R(g)|_D^(-1) dg``
    with the unsimplified matrix integrand R(g).

    Parameters
    ----------
    order1
        order of the first lifting
    order2
        order of the second lifting
    level
        enumeration level N
    gamma0
        element relating the two liftings, Π^(s1 - s2) if not specified

    Raises
    ------
    BudgetExceeded
        if q^(4N) exceeds the enumeration budget
    """
    _check_fields(order1, order2)
    if gamma0 is None:
        gamma0 = QuatElem.Pi_power(
            order1.field, order1.level - order2.level, order1.constant_precision
        )
    coefficients = _bilinear_coefficients(order1, order2, gamma0)
    groups = integrate_gl2(coefficients, order1.field.q, level)
    constant = (
        epsilon_F(order1.field.q)
        * order_measure_index(order1)
        * order_measure_index(order2)
        / discriminant_abs(order1)
    )
    return constant * total_integral(groups)


class LiftingOracle(LiftingBase):
    """Brute force GL₂ oracle of v_y."""

    def _gl2_groups(self, gamma: QuatElem, level: int) -> Dict[int, ValueExt]:
        coefficients = _bilinear_coefficients(self.order, self.order, gamma)
        return integrate_gl2(coefficients, self.q, level)

    def gl2_oracle_vy(self, gamma: QuatElem, level: int) -> ValueExt:
        """
        v_y by enumeration of GL₂(O_F / π^N).

        ``ε_F [O_K : O^×]² |Δ_{K/F}|_F^(-1) ∫ |R(g)|_D^(-1) dg``
        with μ1 = μ2 = μ and γ0 = γ.

        Parameters
        ----------
        gamma
            unit of O_D
        level
            enumeration level N

        Returns
        -------
        ValueExt
            v_y, InsufficientPrecision if a matrix class is not certified
            and Infinite when R(g) vanishes on an uncertified class

        Raises
        ------
        BudgetExceeded
            if q^(4N) exceeds the enumeration budget
        """
        self._require_unit(gamma)
        order = self.order
        constant = (
            epsilon_F(self.q)
            * order_measure_index(order) ** 2
            / discriminant_abs(order)
        )
        return constant * total_integral(self._gl2_groups(gamma, level))

    def gl2_oracle_split(self, gamma: QuatElem, level: int) -> Dict[int, ValueExt]:
        """
        GL₂ integral of v_y restricted to Ω(π^n), without constants.

        Keys n < N hold the integral over Ω(π^n),
        key N the integral over Γ(π^N).
        """
        self._require_unit(gamma)
        return self._gl2_groups(gamma, level)
