from dataclasses import dataclass
from fractions import Fraction

from .._error import RouteDisagreement, Unsupported
from .._haar import (
    discriminant_abs,
    epsilon_F,
    expected_u,
    image_space,
    mu_difference_abs,
    order_measure_index,
    vol_gamma,
    vol_omega,
)
from .._quaternion import QuatElem, quat_mul
from .._value import ValueExt
from .base import LiftingBase


@dataclass(frozen=True)
class PsPdSplit:
    """
    Split of the GL₂ integral of v_y at Γ(π^u).

    Attributes
    ----------
    u
        maximal integer with |π^(u-1)|_D > |μ|_D
    ps
        part over GL₂(O_F) minus Γ(π^u), from the sum over Ω(π^n)
    ps_closed
        closed form ``|μ - μ̄|_D (1 + q^(-1))^(-1) q^(u-1)``, 0 for u = 0
    pd
        part over Γ(π^u)
    """

    u: int
    ps: Fraction
    ps_closed: Fraction
    pd: ValueExt

    @property
    def total(self) -> ValueExt:
        """Whole integral P_s + P_d."""
        return self.pd + self.ps


class LiftingDecomposition(LiftingBase):
    """Split of the v_y integral into P_s and P_d."""

    def u(self) -> int:
        """
        Exponent u of the split, computed from its definition.

        Raises
        ------
        RouteDisagreement
            if it differs from the case summary, s unramified and s + 1 ramified
        """
        u = self.order.u
        if u != expected_u(self.order):
            raise RouteDisagreement(
                f"u of {self.order!r} is {u}, expected {expected_u(self.order)}!",
                quantity="u",
                values=(u, expected_u(self.order)),
            )
        return u

    def ps_terms(self) -> list:
        """Terms ``Vol Ω(π^n) |μ̄ - μ|_D q^(2n)`` of P_s for n < u."""
        q = self.q
        difference = mu_difference_abs(self.order)
        return [vol_omega(n, q) * difference * q ** (2 * n) for n in range(self.u())]

    def ps_closed_form(self) -> Fraction:
        """Closed form of P_s."""
        u = self.u()
        if u == 0:
            return Fraction(0)
        q = self.q
        scale = Fraction(q) ** (u - 1)
        return mu_difference_abs(self.order) / (1 + Fraction(1, q)) * scale

    def pd(self, gamma: QuatElem) -> ValueExt:
        """
        Part P_d over Γ(π^u).

        ``Vol Γ(π^u) c |μ̄ - μ|_D ∫ |μγ - γμk|_D^(-1) dk^×`` over the image
        O_F^× ⊕ ω̄O_F, with c the inverse mass of the image:
        1 ramified and 1 + q^(-1) unramified.
        """
        order = self.order
        q = self.q
        image = 1 if order.is_ramified else 1 + Fraction(1, q)
        center = quat_mul(order.mu, gamma)
        multiplier = quat_mul(gamma, order.mu)
        integral = self._value(image_space(order), center, multiplier)
        factor = vol_gamma(self.u(), q) * image * mu_difference_abs(order)
        return factor * integral

    def ps_pd_decomposition(self, gamma: QuatElem) -> PsPdSplit:
        """
        Split the v_y integral of an automorphism into P_s and P_d.

        The two computations of P_s are compared, and
        ``v_y = ε_F [O_K : O^×]² |Δ_{K/F}|_F^(-1) (P_s + P_d)``
        is checked against :meth:`v_y` where v_y has a formula.

        Parameters
        ----------
        gamma
            unit of O_D

        Returns
        -------
        PsPdSplit
            parts of the integral

        Raises
        ------
        RouteDisagreement
            if a check fails
        """
        self._require_unit(gamma)
        ps = sum(self.ps_terms(), Fraction(0))
        closed = self.ps_closed_form()
        if ps != closed:
            raise RouteDisagreement(
                f"P_s of {self.order!r}: sum {ps}, closed form {closed}!",
                quantity="P_s",
                values=(ps, closed),
            )

        split = PsPdSplit(self.u(), ps, closed, self.pd(gamma))
        if self.cross_check:
            try:
                expected = self.v_y(gamma)
            except Unsupported:
                return split
            value = self.vy_from_split(split)
            if value != expected:
                raise RouteDisagreement(
                    f"v_y of {gamma!r}: split {value}, formula {expected}!",
                    quantity="v_y",
                    values=(value, expected),
                )
        return split

    def vy_from_split(self, split: PsPdSplit) -> ValueExt:
        """Assemble v_y from the parts of the integral."""
        order = self.order
        constant = (
            epsilon_F(self.q)
            * order_measure_index(order) ** 2
            / discriminant_abs(order)
        )
        return constant * split.total
