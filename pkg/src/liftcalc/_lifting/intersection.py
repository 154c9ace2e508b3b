import logging
from fractions import Fraction

from .._error import NotShallow, RouteDisagreement, Unsupported, WrongCase
from .._field import AtLeast
from .._haar import units_ok, units_order
from .._quaternion import (
    Membership,
    QuatElem,
    is_in_order,
    is_normalizer_element,
    pm_decompose,
    quat_mul,
    quat_val,
    sigma_element,
)
from .._value import ValueExt
from .base import LiftingBase

logger = logging.getLogger(__name__)


class LiftingIntersection(LiftingBase):
    """Lifting depths v_x, v_y, v_z and v_ā."""

    def _canonical_depth(self, gamma: QuatElem) -> ValueExt:
        # Unramified maximal order: (r + 1) / 2 with r = v_D(γ₋)
        _, minus = pm_decompose(gamma, self.order)
        r = quat_val(minus)
        if isinstance(r, AtLeast):
            return ValueExt.infinite()
        return ValueExt.finite(Fraction(r + 1, 2))

    @property
    def _canonical(self) -> bool:
        return self.order.is_maximal and not self.order.is_ramified

    def v_x(self, gamma: QuatElem) -> ValueExt:
        """
        Lifting depth v_x of an automorphism.

        Computed as ``[O_K^× : O^×] ∫_{O^×} |γ - k|_D^(-1) dk^×``
        with dk^× normalised by O_K^×. For shallow γ the closed form
        of :meth:`shallow_closed_form` is checked against it.

        For the maximal order of an unramified K, the canonical lifting,
        the depth is ``(r + 1)/2`` with r = v_D(γ₋) and γ₋ the D⁻ part
        of γ. It is Infinite when γ₋ vanishes, that is for γ in O_K^×.

        Parameters
        ----------
        gamma
            unit of O_D

        Returns
        -------
        ValueExt
            lifting depth, Infinite for γ in O^×

        Raises
        ------
        Unsupported
            if γ is not a unit
        RouteDisagreement
            if the closed form disagrees
        """
        self._require_unit(gamma)
        if self._canonical:
            return self._canonical_depth(gamma)
        if is_in_order(gamma, self.order) is Membership.in_unit_group:
            return ValueExt.infinite()

        value = self.order.index * self._value(units_order(self.order), gamma)
        if self.cross_check and value.is_finite:
            depth = self.classify(gamma)
            if depth.is_shallow:
                closed = self.shallow_closed_form(gamma)
                if closed != value:
                    raise RouteDisagreement(
                        f"v_x of {gamma!r}: integral {value}, closed form {closed}!",
                        quantity="v_x",
                        values=(value, closed),
                    )
        return value

    def shallow_closed_form(self, gamma: QuatElem) -> ValueExt:
        """
        Lifting depth of a shallow automorphism in closed form.

        ``q/(q-1) φ(γ″) - 2/(q-1)`` with γ″ = γ - γ′ for a projection γ′
        of γ to O_F^×. The value is bounded by φ(μ).

        Raises
        ------
        NotShallow
            if γ is deep
        RouteDisagreement
            if the bound by φ(μ) fails
        """
        depth = self.classify(gamma)
        if not depth.is_shallow:
            raise NotShallow(f"{gamma!r} is deep for {self.order!r}!")

        q = self.q
        value = Fraction(q, q - 1) * self.phi(depth.gamma_dprime) + Fraction(-2, q - 1)
        bound = self.phi(self.order.mu)
        if value.is_finite and bound.is_finite and not value.value < bound.value:
            raise RouteDisagreement(
                f"Shallow value {value} of {gamma!r} is not below φ(μ) = {bound}!",
                quantity="shallow_bound",
                values=(value, bound),
            )
        return value

    def _in_residue_units(self, gamma: QuatElem) -> bool:
        # γ in O_K^× + ΠO_D: residue in F_q^× for ramified K
        lead = gamma.a.digit(0) if gamma.a.precision > 0 else None
        return gamma.a.v_min >= 0 and lead is not None and lead[0] != 0 and lead[1] == 0

    def v_y(self, gamma: QuatElem) -> ValueExt:
        """
        Intersection multiplicity v_y of an automorphism.

        Infinite on the normalizer of O_K^×. Otherwise
        ``[O_K^× : O^×](1 + ∫_{O_K^×} |k - γ|_D^(-1) dk)`` for ramified K
        and γ in O_K^× + ΠO_D, ``[O_K^× : O^×] ∫_{O_K^×} |k - γ|_D^(-1) dk``
        for unramified K and O ≠ O_K, and ``(r + 1) / 2`` with r = v_D(γ₋)
        for O = O_K unramified.

        Raises
        ------
        Unsupported
            if γ is not a unit, or K is ramified and γ is outside
            O_K^× + ΠO_D and the normalizer
        """
        self._require_unit(gamma)
        if is_normalizer_element(gamma, self.order):
            return ValueExt.infinite()
        if self._canonical:
            return self._canonical_depth(gamma)

        integral = self._value(units_ok(self.order), gamma)
        if self.order.is_ramified:
            if not self._in_residue_units(gamma):
                raise Unsupported(
                    f"v_y of ramified {gamma!r} outside O_K^× + ΠO_D has no formula!"
                )
            return self.order.index * (1 + integral)
        return self.order.index * integral

    def v_z(self, gamma: QuatElem) -> ValueExt:
        """
        Intersection multiplicity v_z of an automorphism.

        ``[O_K^× : O^×] ∫_{O_K^×} |γ - k|_D^(-1) dk^×``, which equals the
        integral of ``|k^(-1) γ - 1|_D^(-1)`` since k is a unit.
        For O = O_K unramified the value is ``(r + 1) / 2``.
        """
        self._require_unit(gamma)
        if self._canonical:
            return self._canonical_depth(gamma)
        return self.order.index * self._value(units_ok(self.order), gamma)

    def v_abar(self, gamma: QuatElem) -> ValueExt:
        """
        Twisted multiplicity ``v_ā(γ) = v_z(γσ)`` for ramified K.

        For γ in O_K^× the value is checked to equal the unit index.

        Raises
        ------
        WrongCase
            for unramified orders
        RouteDisagreement
            if the value on O_K^× differs from the index
        """
        if not self.order.is_ramified:
            msg = f"v_ā is only defined for ramified orders, got {self.order!r}!"
            raise WrongCase(msg)
        self._require_unit(gamma)
        value = self.v_z(quat_mul(gamma, sigma_element(self.order)))

        maximal = self.order.with_level(0)
        if self.cross_check and is_in_order(gamma, maximal) is Membership.in_unit_group:
            if value != self.order.index:
                raise RouteDisagreement(
                    f"v_ā of {gamma!r} in O_K^× is {value}, not {self.order.index}!",
                    quantity="v_abar",
                    values=(value, ValueExt.finite(self.order.index)),
                )
        return value
